#pragma once

// Exact dense nonnegative matrices over the rationals.
//
// RMatrix is the central value type of the library. Every entry is an
// arbitrary precision rational kept in lowest terms, and nonnegativity is
// enforced whenever an entry is written, so every downstream routine may
// assume it. Dimensions are expected to stay small (n <= ~64).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rpotent/error.hpp"

namespace rpotent {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q" (optionally signed) into a canonical rational.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

class PatternMatrix;
class Permutation;

class RMatrix {
 public:
  // n x n zero matrix.
  explicit RMatrix(std::size_t n);
  // Row-major entries; every entry must be nonnegative.
  RMatrix(std::size_t n, std::vector<Rational> entries);

  static RMatrix identity(std::size_t n);
  static RMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RMatrix diagonal(std::span<const Rational> values);
  // Every entry equal to `value`.
  static RMatrix filled(std::size_t n, const Rational& value);

  std::size_t size() const noexcept { return n_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  const Rational& at(std::size_t i, std::size_t j) const;

  // Throws InvalidInput for a negative value.
  void set(std::size_t i, std::size_t j, Rational value);

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_positive() const;
  bool has_zero_diagonal_entry() const;

  friend bool operator==(const RMatrix& a, const RMatrix& b);

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

// Rectangular nonnegative block; only used for couplings and vectors.
class RectMatrix {
 public:
  RectMatrix(std::size_t rows, std::size_t cols);
  static RectMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Rational value);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

RMatrix multiply(const RMatrix& a, const RMatrix& b);
RectMatrix multiply(const RMatrix& a, const RectMatrix& b);
RMatrix add(const RMatrix& a, const RMatrix& b);
RMatrix scale(const RMatrix& a, const Rational& factor);

// a^k by repeated squaring; a^0 = I.
RMatrix power(const RMatrix& a, unsigned k);

// Block (i, j) of the result is a(i, j) * b.
RMatrix kron(const RMatrix& a, const RMatrix& b);

// Rank over Q by fraction-free (Bareiss) elimination on an integer scaling.
std::size_t exact_rank(const RMatrix& a);

Rational trace(const RMatrix& a);

PatternMatrix pattern(const RMatrix& a);

// P^{-1} A P, i.e. result(k, l) = a(p[k], p[l]).
RMatrix conjugate(const RMatrix& a, const Permutation& p);

// Principal submatrix on `indices` (in the given order).
RMatrix principal_submatrix(const RMatrix& a, std::span<const std::size_t> indices);

// True when every entry strictly below the diagonal blocks of the given
// sizes is zero.
bool is_block_upper_triangular(const RMatrix& a, std::span<const std::size_t> block_sizes);

}  // namespace rpotent
