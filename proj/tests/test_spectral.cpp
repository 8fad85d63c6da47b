#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracle.hpp"
#include "rpotent/error.hpp"
#include "rpotent/generators.hpp"
#include "rpotent/spectral.hpp"

using namespace rpotent;

namespace {

RMatrix half(std::size_t n) { return RMatrix::filled(n, Rational(1, static_cast<long>(n))); }

}  // namespace

TEST_CASE("periods", "[spectral]") {
  const auto f = oracle::frozen();
  CHECK(period(cycle_matrix(3)) == f["period_cycle3"].get<std::size_t>());
  CHECK(period(RMatrix::from_rows({{0, 1}, {1, 0}})) == f["period_swap2"].get<std::size_t>());
  CHECK(period(half(2)) == 1);
  CHECK(period(kron(cycle_matrix(3), half(2))) == 3);
  CHECK_THROWS_AS(period(RMatrix::from_rows({{1, 0}, {0, 0}})), HypothesisError);
  CHECK_THROWS_AS(period(RMatrix(2)), HypothesisError);
}

TEST_CASE("primitivity and Wielandt", "[spectral]") {
  const auto f = oracle::frozen();
  const auto golden = RMatrix::from_rows({{1, 1}, {1, 0}});
  CHECK(is_primitive(golden));
  CHECK(power(golden, 2).is_positive() == f["golden_square_positive"].get<bool>());
  CHECK(wielandt_check(golden));
  CHECK_FALSE(is_primitive(cycle_matrix(3)));
  CHECK_FALSE(is_primitive(RMatrix::from_rows({{1, 0}, {0, 0}})));
  CHECK_THROWS_AS(wielandt_check(cycle_matrix(3)), HypothesisError);
  CHECK(wielandt_exponent(2) == 2);
  CHECK(wielandt_exponent(6) == 26);

  // The Wielandt matrix attains the bound: one power short is not positive.
  for (std::size_t n = 2; n <= 6; ++n) {
    RMatrix w(n);
    for (std::size_t j = 0; j + 1 < n; ++j) w.set(j + 1, j, 1);
    w.set(0, n - 1, 1);
    w.set(1, n - 1, 1);
    CHECK(is_primitive(w));
    CHECK(wielandt_check(w));
    CHECK_FALSE(power(w, wielandt_exponent(n) - 1).is_positive());
  }

  Rng rng(77);
  int primitive = 0;
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_nonnegative(4, rng, static_cast<unsigned>(rng.uniform(3, 6)));
    if (!is_primitive(a)) continue;
    ++primitive;
    CHECK(wielandt_check(a));
  }
  CHECK(primitive > 50);
}

TEST_CASE("Perron values against eigenvalues", "[spectral]") {
  const auto f = oracle::frozen();
  CHECK(std::abs(perron_value(cycle_matrix(3)) - f["perron_cycle3"].get<double>()) <= 1e-9);
  CHECK(std::abs(perron_value(half(2)) - f["perron_half2"].get<double>()) <= 1e-9);
  CHECK(std::abs(perron_value(kron(cycle_matrix(3), half(2))) - f["perron_kron_cycle3_half2"].get<double>()) <=
        1e-9);
  CHECK(std::abs(perron_value(RMatrix::from_rows({{2, 0}, {0, 3}})) - 3.0) <= 1e-9);
  CHECK(perron_value(RMatrix::from_rows({{0, 1}, {0, 0}})) == 0.0);
  CHECK_THROWS_AS(perron_value(RMatrix(2)), InvalidInput);
  CHECK_THROWS_AS(perron_value(RMatrix::from_rows({{1, 1}, {1, 0}}), PerronOptions{1e-15, 1}), NonConvergence);
}

TEST_CASE("Perron value of generated r-potents is 1", "[spectral]") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto g = random_r_potent(static_cast<unsigned>(rng.uniform(2, 5)), rng.uniform(1, 6), rng.next());
    CHECK(std::abs(perron_value(g.matrix) - 1.0) <= 1e-9);
  }
}

TEST_CASE("trace zero at rank r - 1", "[spectral]") {
  for (unsigned r = 3; r <= 6; ++r) CHECK(trace_zero_check(cycle_matrix(r - 1), r));
  const auto k = kron(cycle_matrix(2), rank_one_idempotent({1, 2}, {Rational(1, 3), Rational(1, 3)}));
  CHECK(trace_zero_check(k, 3));
  CHECK_THROWS_AS(trace_zero_check(half(2), 2), HypothesisError);
  CHECK_THROWS_AS(trace_zero_check(kron(cycle_matrix(2), cycle_matrix(2)), 3), HypothesisError);
}

TEST_CASE("spectral report", "[spectral]") {
  const auto rep = spectral_report(cycle_matrix(3), 4);
  CHECK(rep.period == 3u);
  CHECK_FALSE(rep.is_primitive);
  CHECK(rep.expected_peripheral_count == 3u);
  CHECK(rep.trace_zero_applicable);
  CHECK(rep.trace_zero == true);
  REQUIRE(rep.perron_value.has_value());
  CHECK(std::abs(*rep.perron_value - 1.0) <= 1e-9);
  const auto idem = spectral_report(half(2), 2);
  CHECK(idem.is_primitive);
  CHECK(idem.wielandt_positive == true);
  CHECK_FALSE(idem.trace_zero_applicable);
  const auto zero = spectral_report(RMatrix(2), 2);
  CHECK_FALSE(zero.perron_value.has_value());
  CHECK_FALSE(zero.period.has_value());
}
