#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "rpotent/matrix.hpp"

namespace rpotent {

inline constexpr unsigned default_potency_cap = 64;

// a^r == a exactly. Throws InvalidInput for r < 2.
bool is_r_potent(const RMatrix& a, unsigned r);

// Throws HypothesisError naming `context` unless a is r-potent.
void require_r_potent(const RMatrix& a, unsigned r, const char* context);

// Smallest r in [2, cap] with a^r == a.
std::optional<unsigned> minimal_potency(const RMatrix& a, unsigned cap = default_potency_cap);

// a^(r-1), an idempotent with the same rank as a.
RMatrix idempotent_projection(const RMatrix& a, unsigned r);

// rank(a) == trace(a^(r-1)).
bool rank_trace_check(const RMatrix& a, unsigned r);

// Exponents j in [1, r-1] for which a^j has a zero diagonal entry.
std::set<unsigned> zero_diagonal_powers(const RMatrix& a, unsigned r);

struct PotencyReport {
  bool is_r_potent = false;
  unsigned r = 0;
  std::optional<unsigned> minimal_r;
  std::size_t rank = 0;
  Rational trace_of_projection;
};

PotencyReport potency_report(const RMatrix& a, unsigned r, unsigned cap = default_potency_cap);

}  // namespace rpotent
