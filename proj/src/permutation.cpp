#include "rpotent/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "rpotent/error.hpp"
#include "rpotent/matrix.hpp"

namespace rpotent {

Permutation::Permutation(std::size_t n) : map_(n) { std::iota(map_.begin(), map_.end(), 0); }

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw InvalidInput("permutation map is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::swap(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionError("swap index out of range");
  Permutation p(n);
  std::swap(p.map_[i], p.map_[j]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t k = 0; k < map_.size(); ++k) inv[map_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("compose: size mismatch");
  std::vector<std::size_t> out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = map_[other.map_[k]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < map_.size(); ++k) {
    if (map_[k] != k) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (auto k = start; !seen[k]; k = map_[k]) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t l = 1;
  for (auto c : cycle_lengths()) l = std::lcm(l, c);
  return l;
}

RMatrix Permutation::to_matrix() const {
  RMatrix m(size());
  for (std::size_t k = 0; k < size(); ++k) m.set(map_[k], k, 1);
  return m;
}

}  // namespace rpotent
