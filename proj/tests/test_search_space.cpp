#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tabu/search_space.hpp"

using namespace tabu;

namespace {

SearchSpace unit_box(double grid = 1e-4) {
  return SearchSpace({-1.0, -1.0}, {1.0, 1.0}, {grid, grid});
}

}  // namespace

TEST_CASE("quantize snaps to the nearest lattice point") {
  SearchSpace s({1.0}, {1000.0}, {1.0});
  CHECK(quantize({17.4}, s)[0] == 17.0);
  CHECK(quantize({17.0}, s)[0] == 17.0);  // already on lattice

  SearchSpace half({10.0}, {200.0}, {0.5});
  // scalar rounding oracle: 99.76 sits 0.24 from 100.0 and 0.26 from 99.5
  CHECK(quantize({99.76}, half)[0] == 100.0);
  CHECK(quantize({99.7}, half)[0] == 99.5);
  // exact half-grid tie goes to the lower neighbour
  CHECK(quantize({99.75}, half)[0] == 99.5);
}

TEST_CASE("quantize rejects dimension mismatch") {
  SearchSpace s({1.0}, {1000.0}, {1.0});
  CHECK_THROWS_AS(quantize({1.0, 2.0}, s), std::invalid_argument);
  CHECK_THROWS_AS(clamp({}, s), std::invalid_argument);
}

TEST_CASE("quantize is idempotent") {
  SearchSpace s({-1.0, 10.0, 0.0}, {1.0, 100.0, 3.0}, {1e-4, 0.5, 0.3});
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-5.0, 105.0);
  for (int i = 0; i < 500; ++i) {
    ParameterVector p{u(gen), u(gen), u(gen)};
    const ParameterVector q = quantize(p, s);
    CHECK(quantize(q, s) == q);
  }
}

TEST_CASE("clamp saturates out-of-range values") {
  SearchSpace s({1.0, -500.0}, {1000.0, 500.0}, {1.0, 0.5});
  CHECK(clamp({1200.0, 0.0}, s)[0] == 1000.0);
  CHECK(clamp({3.0, -600.0}, s)[1] == -500.0);
  const ParameterVector in{500.0, 499.5};
  CHECK(clamp(in, s) == in);
}

TEST_CASE("clamped quantized values stay in bounds and on grid") {
  SearchSpace s({-1.0, 10.0}, {1.0, 100.0}, {1e-4, 0.5});
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> u(-200.0, 200.0);
  for (int i = 0; i < 500; ++i) {
    ParameterVector p{u(gen), u(gen)};
    const ParameterVector q = clamp(quantize(p, s), s);
    for (std::size_t d = 0; d < 2; ++d) {
      CHECK(q[d] >= s.lower(d));
      CHECK(q[d] <= s.upper(d));
      const double steps = (q[d] - s.lower(d)) / s.grid(d);
      CHECK(std::abs(steps - std::round(steps)) < 1e-6);
    }
  }
}

TEST_CASE("random_point is deterministic and respects the lattice") {
  SearchSpace s = unit_box();
  RandomStream a(12345), b(12345);
  for (int i = 0; i < 100; ++i) {
    const ParameterVector pa = random_point(s, a);
    const ParameterVector pb = random_point(s, b);
    CHECK(pa == pb);  // bitwise identical
    CHECK(quantize(pa, s) == pa);
    for (std::size_t d = 0; d < 2; ++d) {
      CHECK(pa[d] >= -1.0);
      CHECK(pa[d] <= 1.0);
    }
  }
}

TEST_CASE("random_point samples uniformly") {
  SearchSpace s({0.0}, {1.0}, {1e-6});
  RandomStream rng(99);
  double sum = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) sum += random_point(s, rng)[0];
  CHECK(std::abs(sum / n - 0.5) < 0.02);  // law of large numbers
}

TEST_CASE("neighborhood varies one coordinate at a time") {
  SearchSpace s = unit_box();
  const auto c = neighborhood({0.0, 0.0}, {0.5, 0.5}, s);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == ParameterVector{0.5, 0.0});
  CHECK(c[1] == ParameterVector{-0.5, 0.0});
  CHECK(c[2] == ParameterVector{0.0, 0.5});
  CHECK(c[3] == ParameterVector{0.0, -0.5});
}

TEST_CASE("neighborhood drops candidates that clamp onto the base") {
  SearchSpace s = unit_box();
  const auto c = neighborhood({1.0, 0.0}, {0.5, 0.5}, s);
  REQUIRE(c.size() == 3);  // +step in dim 0 clamps back onto the base
  CHECK(c[0] == ParameterVector{0.5, 0.0});
}

TEST_CASE("neighborhood of an interior point has 2*dimension members") {
  const std::size_t dim = 10;
  SearchSpace s(ParameterVector(dim, -500.0), ParameterVector(dim, 500.0),
                ParameterVector(dim, 0.01));
  const auto c = neighborhood(ParameterVector(dim, 0.0),
                              std::vector<double>(dim, 100.0), s);
  CHECK(c.size() == 2 * dim);
}

TEST_CASE("neighborhood never contains the base point") {
  SearchSpace s({-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}, {0.01, 0.01, 0.01});
  RandomStream rng(5);
  for (int i = 0; i < 200; ++i) {
    const ParameterVector base = random_point(s, rng);
    const double step = 0.01 + rng.uniform(0.0, 0.5);
    const auto c = neighborhood(base, {step, step, step}, s);
    CHECK(c.size() <= 6);
    for (const auto& p : c) CHECK(p != base);
  }
}

TEST_CASE("search space validates its invariants") {
  CHECK_THROWS_AS(SearchSpace({1.0}, {1.0}, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(SearchSpace({0.0}, {1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SearchSpace({0.0}, {1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepSchedule({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepSchedule({1.0}, {0.5}, 1.0), std::invalid_argument);
}
