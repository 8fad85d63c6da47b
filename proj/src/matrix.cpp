#include "rpotent/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "rpotent/parallel.hpp"
#include "rpotent/pattern.hpp"
#include "rpotent/permutation.hpp"

namespace rpotent {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void check_nonnegative(const Rational& value) {
  if (sgn(value) < 0) {
    throw InvalidInput("negative entry " + to_string(value) + " in a nonnegative matrix");
  }
}

void check_same_size(const RMatrix& a, const RMatrix& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  std::string_view body = trimmed;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  std::string canonical(trimmed.front() == '+' ? trimmed.substr(1) : trimmed);
  Rational q(canonical, 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------------------

RMatrix::RMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
}

RMatrix::RMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
  if (entries_.size() != n * n) {
    throw DimensionError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (auto& e : entries_) {
    e.canonicalize();
    check_nonnegative(e);
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const auto n = rows.size();
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("matrix rows must form a square grid");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return RMatrix(n, std::move(flat));
}

RMatrix RMatrix::diagonal(std::span<const Rational> values) {
  RMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

RMatrix RMatrix::filled(std::size_t n, const Rational& value) {
  return RMatrix(n, std::vector<Rational>(n * n, value));
}

const Rational& RMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("matrix index out of range");
  return entries_[i * n_ + j];
}

void RMatrix::set(std::size_t i, std::size_t j, Rational value) {
  if (i >= n_ || j >= n_) throw DimensionError("matrix index out of range");
  value.canonicalize();
  check_nonnegative(value);
  entries_[i * n_ + j] = std::move(value);
}

bool RMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return sgn(e) == 0; });
}

bool RMatrix::is_positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return sgn(e) > 0; });
}

bool RMatrix::has_zero_diagonal_entry() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(entries_[i * n_ + i]) == 0) return true;
  }
  return false;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
  return a.n_ == b.n_ && std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                    [](const Rational& x, const Rational& y) { return x == y; });
}

// ---------------------------------------------------------------------------

RectMatrix::RectMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RectMatrix RectMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RectMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged rows in rectangular matrix");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void RectMatrix::set(std::size_t i, std::size_t j, Rational value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  value.canonicalize();
  check_nonnegative(value);
  entries_[i * cols_ + j] = std::move(value);
}

// ---------------------------------------------------------------------------

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  check_same_size(a, b, "multiply");
  return parallel::multiply(a, b);
}

RectMatrix multiply(const RMatrix& a, const RectMatrix& b) {
  if (a.size() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  RectMatrix c(a.size(), b.cols());
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (sgn(a(i, k)) != 0) acc += a(i, k) * b(k, j);
      }
      c.set(i, j, acc);
    }
  }
  return c;
}

RMatrix add(const RMatrix& a, const RMatrix& b) {
  check_same_size(a, b, "add");
  std::vector<Rational> out(a.entries().begin(), a.entries().end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.entries()[k];
  return RMatrix(a.size(), std::move(out));
}

RMatrix scale(const RMatrix& a, const Rational& factor) {
  std::vector<Rational> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.emplace_back(e * factor);
  return RMatrix(a.size(), std::move(out));
}

RMatrix power(const RMatrix& a, unsigned k) {
  RMatrix result = RMatrix::identity(a.size());
  RMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
  const auto na = a.size();
  const auto nb = b.size();
  const auto n = na * nb;
  std::vector<Rational> out(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < nb; ++p) {
        for (std::size_t q = 0; q < nb; ++q) {
          out[(i * nb + p) * n + (j * nb + q)] = a(i, j) * b(p, q);
        }
      }
    }
  }
  return RMatrix(n, std::move(out));
}

std::size_t exact_rank(const RMatrix& a) {
  const auto n = a.size();
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

Rational trace(const RMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

PatternMatrix pattern(const RMatrix& a) {
  if (a.size() > PatternMatrix::max_size) {
    throw CapacityError("pattern matrices are limited to n <= 64");
  }
  PatternMatrix p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (sgn(a(i, j)) > 0) p.set(i, j);
    }
  }
  return p;
}

RMatrix conjugate(const RMatrix& a, const Permutation& p) {
  if (a.size() != p.size()) throw DimensionError("conjugate: permutation size mismatch");
  const auto n = a.size();
  std::vector<Rational> out(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) out[k * n + l] = a(p[k], p[l]);
  }
  return RMatrix(n, std::move(out));
}

RMatrix principal_submatrix(const RMatrix& a, std::span<const std::size_t> indices) {
  const auto m = indices.size();
  std::vector<Rational> out(m * m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) out[k * m + l] = a.at(indices[k], indices[l]);
  }
  return RMatrix(m, std::move(out));
}

bool is_block_upper_triangular(const RMatrix& a, std::span<const std::size_t> block_sizes) {
  std::size_t total = 0;
  for (auto s : block_sizes) total += s;
  if (total != a.size()) throw DimensionError("block sizes do not sum to the matrix dimension");
  // block_start[b] is the first index of block b; an entry (i, j) must be
  // zero whenever i lies in a later block than j.
  std::vector<std::size_t> block_of(a.size());
  std::size_t idx = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    for (std::size_t s = 0; s < block_sizes[b]; ++s) block_of[idx++] = b;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (block_of[i] > block_of[j] && sgn(a(i, j)) != 0) return false;
    }
  }
  return true;
}

}  // namespace rpotent
