#include <catch_amalgamated.hpp>

#include <stdexcept>

#include "oracle.hpp"
#include "rpotent/parallel.hpp"

using namespace rpotent;

TEST_CASE("parallel multiply equals the serial kernel", "[parallel]") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto n = rng.uniform(1, 12);
    const auto a = oracle::random_nonnegative(n, rng, 2);
    const auto b = oracle::random_nonnegative(n, rng, 2);
    const auto s = serial::multiply(a, b);
    CHECK(parallel::multiply(a, b) == s);
    CHECK(oracle::equal(s, oracle::multiply(oracle::dense(a), oracle::dense(b))));
  }
  CHECK_THROWS_AS(parallel::multiply(RMatrix(2), RMatrix(3)), DimensionError);
}

TEST_CASE("parallel sweeps equal the serial sweeps", "[parallel]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto s = serial::exhaustive_oracle_sweep(n);
    const auto p = parallel::exhaustive_oracle_sweep(n);
    CHECK(s.checked == p.checked);
    CHECK(s.decomposable == p.decomposable);
    CHECK(p.disagreements == 0);
  }
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto s = serial::random_oracle_sweep(n, 200, 42);
    const auto p = parallel::random_oracle_sweep(n, 200, 42);
    CHECK(s.checked == 200);
    CHECK(s.decomposable == p.decomposable);
    CHECK(p.disagreements == 0);
  }
}

TEST_CASE("pattern codes", "[parallel]") {
  const auto p = pattern_from_code(2, 0b1001);
  CHECK(p.test(0, 0));
  CHECK_FALSE(p.test(0, 1));
  CHECK_FALSE(p.test(1, 0));
  CHECK(p.test(1, 1));
}

TEST_CASE("run_trials keeps index order", "[parallel]") {
  const auto out = parallel::run_trials(1000, [](std::size_t i) { return i * i; });
  REQUIRE(out.size() == 1000);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i);
  CHECK(parallel::run_trials(0, [](std::size_t i) { return i; }).empty());
  CHECK(parallel::thread_count() >= 1);
}

TEST_CASE("run_trials rethrows the first failure", "[parallel]") {
  try {
    parallel::run_trials(100, [](std::size_t i) -> int {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
      return 0;
    });
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "17");
  }
}
