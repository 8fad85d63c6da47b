#include "rpotent/potency.hpp"

#include <string>

namespace rpotent {

namespace {

void check_exponent(unsigned r) {
  if (r < 2) throw InvalidInput("potency exponent must be at least 2, got " + std::to_string(r));
}

}  // namespace

bool is_r_potent(const RMatrix& a, unsigned r) {
  check_exponent(r);
  return power(a, r) == a;
}

void require_r_potent(const RMatrix& a, unsigned r, const char* context) {
  if (!is_r_potent(a, r)) {
    throw HypothesisError(std::string(context) + ": matrix is not " + std::to_string(r) + "-potent");
  }
}

std::optional<unsigned> minimal_potency(const RMatrix& a, unsigned cap) {
  check_exponent(cap);
  auto p = multiply(a, a);
  for (unsigned r = 2; r <= cap; ++r) {
    if (p == a) return r;
    if (r < cap) p = multiply(p, a);
  }
  return std::nullopt;
}

RMatrix idempotent_projection(const RMatrix& a, unsigned r) {
  require_r_potent(a, r, "idempotent projection");
  return power(a, r - 1);
}

bool rank_trace_check(const RMatrix& a, unsigned r) {
  require_r_potent(a, r, "rank/trace check");
  const auto t = trace(power(a, r - 1));
  return t == Rational(static_cast<unsigned long>(exact_rank(a)));
}

std::set<unsigned> zero_diagonal_powers(const RMatrix& a, unsigned r) {
  check_exponent(r);
  std::set<unsigned> out;
  auto p = a;
  for (unsigned j = 1; j < r; ++j) {
    if (p.has_zero_diagonal_entry()) out.insert(j);
    if (j + 1 < r) p = multiply(p, a);
  }
  return out;
}

PotencyReport potency_report(const RMatrix& a, unsigned r, unsigned cap) {
  check_exponent(r);
  PotencyReport rep;
  rep.r = r;
  rep.is_r_potent = is_r_potent(a, r);
  rep.minimal_r = minimal_potency(a, cap);
  rep.rank = exact_rank(a);
  rep.trace_of_projection = trace(power(a, r - 1));
  return rep;
}

}  // namespace rpotent
