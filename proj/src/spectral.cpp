#include "rpotent/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "rpotent/decomposition.hpp"
#include "rpotent/potency.hpp"

namespace rpotent {

namespace {

struct ComponentLevels {
  // 0 when the component carries no cycle.
  std::size_t period = 0;
  // BFS depth from members.front() inside the component.
  std::vector<std::size_t> level;
};

ComponentLevels component_levels(const Digraph& g, const Components& comps,
                                 const std::vector<std::size_t>& members) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  const auto c = comps.component_of[members.front()];
  ComponentLevels out;
  out.level.assign(g.n, unset);
  std::queue<std::size_t> frontier;
  out.level[members.front()] = 0;
  frontier.push(members.front());
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : g.out[v]) {
      if (comps.component_of[w] != c) continue;
      if (out.level[w] == unset) {
        out.level[w] = out.level[v] + 1;
        frontier.push(w);
      }
      const auto lhs = static_cast<long long>(out.level[v]) + 1;
      const auto rhs = static_cast<long long>(out.level[w]);
      out.period = std::gcd(out.period, static_cast<std::size_t>(std::llabs(lhs - rhs)));
    }
  }
  return out;
}

using Dense = std::vector<double>;

Dense to_dense(const RMatrix& a) {
  Dense d(a.size() * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) d[i * a.size() + j] = a(i, j).get_d();
  }
  return d;
}

Dense dense_multiply(const Dense& a, const Dense& b, std::size_t n) {
  Dense c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
  return c;
}

Dense dense_power(Dense base, std::size_t k, std::size_t n) {
  Dense result(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1.0;
  while (k > 0) {
    if (k & 1U) result = dense_multiply(result, base, n);
    k >>= 1U;
    if (k > 0) base = dense_multiply(base, base, n);
  }
  return result;
}

}  // namespace

std::size_t period(const RMatrix& a) {
  if (a.is_zero()) throw HypothesisError("period is undefined for the zero matrix");
  if (is_decomposable(a)) throw HypothesisError("period is only defined for indecomposable matrices");
  const auto g = build_digraph(a);
  const auto comps = strongly_connected_components(g);
  return component_levels(g, comps, comps.members.front()).period;
}

bool is_primitive(const RMatrix& a) {
  if (a.is_zero() || is_decomposable(a)) return false;
  return period(a) == 1;
}

unsigned wielandt_exponent(std::size_t n) { return static_cast<unsigned>(n * n - 2 * n + 2); }

bool wielandt_check(const RMatrix& a) {
  if (!is_primitive(a)) throw HypothesisError("Wielandt check requires a primitive matrix");
  return power(a, wielandt_exponent(a.size())).is_positive();
}

// The spectral radius is the largest over the cyclic strongly connected
// components. For a component of period p, the p-th power restricted to one
// cyclic class is primitive with spectral radius rho^p; power iteration on it
// stops when the Collatz-Wielandt bounds min and max of (Cx)_i / x_i meet.
double perron_value(const RMatrix& a, const PerronOptions& options) {
  if (a.is_zero()) throw InvalidInput("Perron value requires a nonzero matrix");
  const auto g = build_digraph(a);
  const auto comps = strongly_connected_components(g);
  double best = 0.0;
  for (const auto& members : comps.members) {
    const auto levels = component_levels(g, comps, members);
    const auto p = levels.period;
    if (p == 0) continue;
    const auto m = members.size();
    const auto block = to_dense(principal_submatrix(a, members));
    const auto power_p = dense_power(block, p, m);
    std::vector<std::size_t> cls;
    for (std::size_t k = 0; k < m; ++k) {
      if (levels.level[members[k]] % p == 0) cls.push_back(k);
    }
    const auto c = cls.size();
    std::vector<double> x(c, 1.0);
    double lo = 0.0;
    double hi = 0.0;
    bool converged = false;
    for (unsigned iter = 0; iter < options.max_iterations; ++iter) {
      std::vector<double> y(c, 0.0);
      for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) y[i] += power_p[cls[i] * m + cls[j]] * x[j];
      }
      lo = std::numeric_limits<double>::infinity();
      hi = 0.0;
      double norm = 0.0;
      for (std::size_t i = 0; i < c; ++i) {
        const double ratio = y[i] / x[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        norm = std::max(norm, y[i]);
      }
      for (std::size_t i = 0; i < c; ++i) x[i] = y[i] / norm;
      if (hi - lo <= options.tolerance * hi) {
        converged = true;
        break;
      }
    }
    const double estimate = std::pow(0.5 * (lo + hi), 1.0 / static_cast<double>(p));
    if (!converged) {
      throw NonConvergence("power iteration did not converge within " + std::to_string(options.max_iterations) +
                               " iterations",
                           std::max(best, estimate));
    }
    best = std::max(best, estimate);
  }
  return best;
}

bool trace_zero_check(const RMatrix& a, unsigned r) {
  // At r = 2 the root sum is the single term 1.
  if (r < 3) throw HypothesisError("trace-zero check requires r >= 3");
  require_r_potent(a, r, "trace-zero check");
  if (is_decomposable(a)) throw HypothesisError("trace-zero check requires an indecomposable matrix");
  if (exact_rank(a) + 1 != r) throw HypothesisError("trace-zero check requires rank r - 1");
  return sgn(trace(a)) == 0;
}

SpectralReport spectral_report(const RMatrix& a, unsigned r, const PerronOptions& options) {
  SpectralReport rep;
  const bool nonzero = !a.is_zero();
  const bool indecomposable = !is_decomposable(a);
  if (nonzero && indecomposable) {
    rep.period = period(a);
    rep.expected_peripheral_count = rep.period;
    rep.is_primitive = *rep.period == 1;
  }
  if (nonzero) rep.perron_value = perron_value(a, options);
  if (rep.is_primitive) rep.wielandt_positive = wielandt_check(a);
  if (r >= 3 && indecomposable && is_r_potent(a, r) && exact_rank(a) + 1 == r) {
    rep.trace_zero_applicable = true;
    rep.trace_zero = sgn(trace(a)) == 0;
  }
  return rep;
}

}  // namespace rpotent
