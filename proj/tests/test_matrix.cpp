#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "rpotent/error.hpp"
#include "rpotent/generators.hpp"
#include "rpotent/matrix.hpp"
#include "rpotent/pattern.hpp"
#include "rpotent/permutation.hpp"
#include "rpotent/random.hpp"

using namespace rpotent;

namespace {

RMatrix half2() { return RMatrix::filled(2, Rational(1, 2)); }

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions", "[matrix]") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/"), InvalidInput);
}

TEST_CASE("RMatrix rejects negative entries and bad shapes", "[matrix]") {
  CHECK_THROWS_AS(RMatrix(0), DimensionError);
  RMatrix m(2);
  CHECK_THROWS_AS(m.set(0, 0, Rational(-1)), InvalidInput);
  CHECK_THROWS_AS(RMatrix(2, {Rational(1)}), DimensionError);
  CHECK_THROWS_AS(RMatrix::from_rows({{1, 2}, {3}}), DimensionError);
  CHECK_THROWS(m.at(2, 0));
}

TEST_CASE("frozen powers of small examples", "[matrix]") {
  const auto f = oracle::frozen();
  const auto c3 = cycle_matrix(3);
  CHECK(f["cycle3_cubed_is_identity"].get<bool>());
  CHECK(power(c3, 3) == RMatrix::identity(3));
  const auto p5 = power(half2(), 5);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(to_string(p5(i, j)) == f["half2_fifth_power_entries"][i][j].get<std::string>());
    }
  }
  CHECK(trace(c3) == 0);
  CHECK(trace(power(c3, 3)) == f["trace_cycle3_cubed"].get<int>());
}

TEST_CASE("exact_rank agrees with Gauss-Jordan", "[matrix]") {
  const auto f = oracle::frozen();
  CHECK(exact_rank(half2()) == 1);
  CHECK(exact_rank(cycle_matrix(5)) == 5);
  CHECK(exact_rank(kron(cycle_matrix(2), cycle_matrix(2))) == f["rank_kron_cycle2_cycle2"].get<std::size_t>());
  CHECK(exact_rank(kron(cycle_matrix(3), half2())) == f["rank_kron_cycle3_half2"].get<std::size_t>());
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto n = rng.uniform(1, 8);
    auto m = oracle::random_nonnegative(n, rng, static_cast<unsigned>(rng.uniform(1, 9)));
    if (rng.coin()) {
      // Force a dependent row.
      const auto src = rng.uniform(0, n - 1);
      const auto dst = rng.uniform(0, n - 1);
      for (std::size_t j = 0; j < n; ++j) m.set(dst, j, m(src, j) * 2);
    }
    CHECK(exact_rank(m) == oracle::rank(oracle::dense(m)));
  }
}

TEST_CASE("multiply, power and kron match naive arithmetic", "[matrix]") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto n = rng.uniform(1, 6);
    const auto a = oracle::random_nonnegative(n, rng);
    const auto b = oracle::random_nonnegative(n, rng);
    CHECK(oracle::equal(multiply(a, b), oracle::multiply(oracle::dense(a), oracle::dense(b))));
    const auto k = static_cast<unsigned>(rng.uniform(1, 6));
    CHECK(oracle::equal(power(a, k), oracle::power(oracle::dense(a), k)));
  }
  const auto a = RMatrix::from_rows({{1, 2}, {0, 3}});
  const auto b = RMatrix::from_rows({{0, 1}, {1, 0}});
  const auto k = kron(a, b);
  CHECK(k.size() == 4);
  CHECK(k(0, 1) == 1);
  CHECK(k(0, 3) == 2);
  CHECK(k(3, 2) == 3);
  CHECK(k(2, 0) == 0);
  CHECK(power(a, 0) == RMatrix::identity(2));
}

TEST_CASE("rank is multiplicative under kron", "[matrix]") {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto a = oracle::random_nonnegative(rng.uniform(1, 4), rng, 4);
    const auto b = oracle::random_nonnegative(rng.uniform(1, 4), rng, 4);
    CHECK(exact_rank(kron(a, b)) == exact_rank(a) * exact_rank(b));
  }
}

TEST_CASE("pattern is multiplicative for nonnegative factors", "[matrix]") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::random_nonnegative(5, rng, 3);
    const auto b = oracle::random_nonnegative(5, rng, 3);
    CHECK(pattern(multiply(a, b)) == boolean_product(pattern(a), pattern(b)));
  }
}

TEST_CASE("conjugation preserves rank and trace", "[matrix]") {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto n = rng.uniform(1, 7);
    const auto a = oracle::random_nonnegative(n, rng);
    const auto p = random_permutation(n, rng);
    const auto c = conjugate(a, p);
    CHECK(exact_rank(c) == exact_rank(a));
    CHECK(trace(c) == trace(a));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(c(i, j) == a(p[i], p[j]));
    }
    // P^T A P with P e_k = e_{p[k]}.
    const auto pm = p.to_matrix();
    const auto pt = conjugate(pm, Permutation(n));
    RMatrix transpose(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) transpose.set(i, j, pt(j, i));
    }
    CHECK(multiply(multiply(transpose, a), pm) == c);
  }
}

TEST_CASE("principal submatrix and block triangular test", "[matrix]") {
  const auto a = RMatrix::from_rows({{1, 2, 3}, {0, 4, 5}, {0, 0, 6}});
  const std::vector<std::size_t> idx{0, 2};
  const auto s = principal_submatrix(a, idx);
  CHECK(s == RMatrix::from_rows({{1, 3}, {0, 6}}));
  const std::vector<std::size_t> sizes{1, 2};
  CHECK(is_block_upper_triangular(a, sizes));
  const std::vector<std::size_t> bad{3, 1};
  CHECK_THROWS(is_block_upper_triangular(a, bad));
  const auto lower = RMatrix::from_rows({{1, 0}, {1, 1}});
  const std::vector<std::size_t> ones{1, 1};
  CHECK_FALSE(is_block_upper_triangular(lower, ones));
}

TEST_CASE("pattern matrices", "[pattern]") {
  auto p = PatternMatrix(3);
  CHECK(p.none());
  p.set(0, 2);
  p.set(1, 1);
  CHECK(p.test(0, 2));
  CHECK(p.count() == 2);
  CHECK(p.column_bits(2) == 1);
  CHECK(PatternMatrix::full(3).all());
  CHECK(boolean_product(PatternMatrix::identity(3), p) == p);
  CHECK(pattern_union(p, PatternMatrix::identity(3)).count() == 4);
  CHECK_THROWS(PatternMatrix(65));
  CHECK_THROWS_AS(pattern(RMatrix(65)), CapacityError);
}

TEST_CASE("permutations", "[permutation]") {
  const Permutation p(std::vector<std::size_t>{1, 2, 0, 4, 3});
  CHECK(p.order() == 6);
  auto lengths = p.cycle_lengths();
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{2, 3});
  CHECK(p.compose(p.inverse()).is_identity());
  CHECK(Permutation::swap(4, 0, 1).order() == 2);
  CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{0, 0}), InvalidInput);
  const auto m = p.to_matrix();
  for (std::size_t k = 0; k < 5; ++k) CHECK(m(p[k], k) == 1);
  // Matrix of a composition is the product of the matrices.
  const Permutation q(std::vector<std::size_t>{4, 3, 2, 1, 0});
  CHECK(p.compose(q).to_matrix() == multiply(p.to_matrix(), q.to_matrix()));
}
