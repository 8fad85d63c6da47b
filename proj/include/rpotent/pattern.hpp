#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rpotent {

// Zero/nonzero pattern of a nonnegative matrix, one 64-bit word per row.
// Bit j of row i is set when entry (i, j) is nonzero. Because nonnegative
// products cannot cancel, pattern(A * B) is the boolean product of the
// patterns, which is what makes semigroup closure over patterns valid.
class PatternMatrix {
 public:
  static constexpr std::size_t max_size = 64;

  explicit PatternMatrix(std::size_t n);
  static PatternMatrix identity(std::size_t n);
  static PatternMatrix full(std::size_t n);
  // Row i taken from bits of rows[i].
  static PatternMatrix from_rows(std::vector<std::uint64_t> rows);

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::uint64_t row_bits(std::size_t i) const { return rows_[i]; }
  std::uint64_t column_bits(std::size_t j) const;
  std::uint64_t full_mask() const noexcept;

  bool none() const;
  bool all() const;
  std::size_t count() const;

  friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;
  friend auto operator<=>(const PatternMatrix&, const PatternMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
};

// Product over the boolean semiring (OR of ANDs).
PatternMatrix boolean_product(const PatternMatrix& a, const PatternMatrix& b);

// Entrywise OR.
PatternMatrix pattern_union(const PatternMatrix& a, const PatternMatrix& b);

struct PatternHash {
  std::size_t operator()(const PatternMatrix& p) const noexcept;
};

}  // namespace rpotent
