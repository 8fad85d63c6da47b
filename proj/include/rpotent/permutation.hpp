#pragma once

#include <cstddef>
#include <vector>

namespace rpotent {

class RMatrix;

// Bijection of {0, ..., n-1}. Entry k names the original index placed at
// position k, so the associated permutation matrix P satisfies
// P e_k = e_{p[k]} and (P^{-1} A P)(k, l) = A(p[k], p[l]).
class Permutation {
 public:
  // Identity on n points.
  explicit Permutation(std::size_t n);
  // Throws InvalidInput unless `map` is a bijection.
  explicit Permutation(std::vector<std::size_t> map);

  static Permutation swap(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t k) const { return map_[k]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  Permutation inverse() const;
  // (this then other): result[k] = (*this)[other[k]].
  Permutation compose(const Permutation& other) const;

  bool is_identity() const;
  std::vector<std::size_t> cycle_lengths() const;
  // Multiplicative order (lcm of the cycle lengths).
  std::size_t order() const;

  RMatrix to_matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

}  // namespace rpotent
