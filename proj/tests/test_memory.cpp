#include <catch2/catch_amalgamated.hpp>

#include <deque>

#include "tabu/memory.hpp"

using namespace tabu;

TEST_CASE("tabu list evicts first in, first out") {
  const std::size_t n = 5;
  TabuList list(n);
  // independent FIFO oracle
  std::deque<ParameterVector> oracle;
  for (int i = 0; i <= static_cast<int>(n); ++i) {
    const ParameterVector p{static_cast<double>(i)};
    list.record(p);
    oracle.push_back(p);
    if (oracle.size() > n) oracle.pop_front();
    CHECK(list.size() == oracle.size());
  }
  CHECK_FALSE(is_tabu({0.0}, list));  // evicted after n newer acceptances
  for (int i = 1; i <= static_cast<int>(n); ++i)
    CHECK(is_tabu({static_cast<double>(i)}, list));
  CHECK(std::equal(oracle.begin(), oracle.end(), list.entries().begin()));
}

TEST_CASE("tabu membership basics") {
  TabuList list(3);
  CHECK_FALSE(is_tabu({1.0, 2.0}, list));  // empty list matches nothing
  list.record({1.0, 2.0});
  CHECK(list.size() == 1);
  CHECK(is_tabu({1.0, 2.0}, list));
  CHECK_FALSE(is_tabu({1.0, 2.5}, list));
}

TEST_CASE("tabu entries keep insertion order") {
  TabuList list(4);
  for (double v : {3.0, 1.0, 4.0, 1.5}) list.record({v});
  const auto& e = list.entries();
  CHECK(e[0] == ParameterVector{3.0});
  CHECK(e[1] == ParameterVector{1.0});
  CHECK(e[2] == ParameterVector{4.0});
  CHECK(e[3] == ParameterVector{1.5});
}

TEST_CASE("intermediate memory keeps the m most recent bests") {
  IntermediateMemory mem(2);
  mem.insert({{0.0}, 5.0});
  mem.insert({{1.0}, 4.0});
  mem.insert({{2.0}, 3.0});
  CHECK(mem.size() == 2);
  CHECK(mem.entries().front().value == 4.0);
  CHECK(mem.entries().back().value == 3.0);
}

TEST_CASE("centroid of a single entry is the entry itself") {
  IntermediateMemory mem(4);
  mem.insert({{0.25, -0.5}, 1.0});
  CHECK(mem.centroid() == ParameterVector{0.25, -0.5});
}

TEST_CASE("centroid averages coordinate-wise") {
  IntermediateMemory mem(4);
  mem.insert({{0.0, 0.0}, 2.0});
  mem.insert({{1.0, 1.0}, 1.0});
  const auto c = mem.centroid();
  CHECK(c[0] == Catch::Approx(0.5));
  CHECK(c[1] == Catch::Approx(0.5));

  // four entries against an independent scalar averaging oracle
  IntermediateMemory mem4(4);
  const double xs[4] = {0.1, -2.0, 3.5, 7.25};
  const double ys[4] = {1.0, 2.0, 4.0, -1.5};
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < 4; ++i) {
    mem4.insert({{xs[i], ys[i]}, static_cast<double>(-i)});
    sx += xs[i];
    sy += ys[i];
  }
  const auto c4 = mem4.centroid();
  CHECK(c4[0] == Catch::Approx(sx / 4.0).epsilon(1e-15));
  CHECK(c4[1] == Catch::Approx(sy / 4.0).epsilon(1e-15));
}

TEST_CASE("aspiration requires strict improvement") {
  CHECK(aspiration_override(-2.1, -2.0));
  CHECK_FALSE(aspiration_override(-2.0, -2.0));
  CHECK_FALSE(aspiration_override(-1.9, -2.0));
}
