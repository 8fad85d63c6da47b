#include "rpotent/pattern.hpp"

#include <bit>
#include <utility>

#include "rpotent/error.hpp"

namespace rpotent {

PatternMatrix::PatternMatrix(std::size_t n) : n_(n), rows_(n, 0) {
  if (n == 0 || n > max_size) {
    throw CapacityError("pattern dimension must be in [1, 64], got " + std::to_string(n));
  }
}

PatternMatrix PatternMatrix::identity(std::size_t n) {
  PatternMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, i);
  return p;
}

PatternMatrix PatternMatrix::full(std::size_t n) {
  PatternMatrix p(n);
  for (auto& row : p.rows_) row = p.full_mask();
  return p;
}

PatternMatrix PatternMatrix::from_rows(std::vector<std::uint64_t> rows) {
  PatternMatrix p(rows.size());
  for (auto& row : rows) row &= p.full_mask();
  p.rows_ = std::move(rows);
  return p;
}

void PatternMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= n_ || j >= n_) throw DimensionError("pattern index out of range");
  const auto bit = std::uint64_t{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::uint64_t PatternMatrix::column_bits(std::size_t j) const {
  std::uint64_t col = 0;
  for (std::size_t i = 0; i < n_; ++i) col |= ((rows_[i] >> j) & 1U) << i;
  return col;
}

std::uint64_t PatternMatrix::full_mask() const noexcept {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool PatternMatrix::none() const {
  for (auto row : rows_) {
    if (row != 0) return false;
  }
  return true;
}

bool PatternMatrix::all() const {
  for (auto row : rows_) {
    if (row != full_mask()) return false;
  }
  return true;
}

std::size_t PatternMatrix::count() const {
  std::size_t c = 0;
  for (auto row : rows_) c += static_cast<std::size_t>(std::popcount(row));
  return c;
}

std::string PatternMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out += test(i, j) ? '1' : '0';
    if (i + 1 < n_) out += '\n';
  }
  return out;
}

PatternMatrix boolean_product(const PatternMatrix& a, const PatternMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("boolean_product: dimension mismatch");
  std::vector<std::uint64_t> rows(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto bits = a.row_bits(i);
    while (bits != 0) {
      const auto k = static_cast<std::size_t>(std::countr_zero(bits));
      rows[i] |= b.row_bits(k);
      bits &= bits - 1;
    }
  }
  return PatternMatrix::from_rows(std::move(rows));
}

PatternMatrix pattern_union(const PatternMatrix& a, const PatternMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("pattern_union: dimension mismatch");
  std::vector<std::uint64_t> rows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rows[i] = a.row_bits(i) | b.row_bits(i);
  return PatternMatrix::from_rows(std::move(rows));
}

std::size_t PatternHash::operator()(const PatternMatrix& p) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    h ^= p.row_bits(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace rpotent
