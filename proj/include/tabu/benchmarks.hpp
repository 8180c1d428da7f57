#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "tabu/engine.hpp"
#include "tabu/search_space.hpp"

namespace tabu::bench {

/// Two-variable multimodal test function with ~50 local minima on
/// [-1,1]^2 and the unique global minimum -2 at the origin.
inline double rastrigin(double x, double y) {
  return x * x + y * y - std::cos(18.0 * x) - std::cos(18.0 * y);
}

inline double rastrigin(const ParameterVector& p) {
  if (p.size() != 2) throw std::invalid_argument("rastrigin: expects 2 values");
  return rastrigin(p[0], p[1]);
}

/// Ten-variable test function on [-500,500]^10, minimized at
/// x_i = 420.9687. The sign convention yields a minimization problem.
inline double schwefel(const ParameterVector& p) {
  if (p.size() != 10) throw std::invalid_argument("schwefel: expects 10 values");
  double sum = 0.0;
  for (double x : p) sum += x * std::sin(std::sqrt(std::abs(x)));
  return -sum;
}

/// A benchmark problem bundled with its domain, step schedule and known
/// optimum.
struct BenchmarkSpec {
  double (*evaluator)(const ParameterVector&);
  SearchSpace space;
  StepSchedule schedule;
  ParameterVector known_optimum_point;
  double known_optimum_value;
};

inline BenchmarkSpec rastrigin_spec() {
  return BenchmarkSpec{
      &rastrigin,
      SearchSpace(ParameterVector(2, -1.0), ParameterVector(2, 1.0),
                  ParameterVector(2, 1e-4), {"x", "y"}, {"", ""}),
      StepSchedule::uniform(2, 0.5, 1e-4),
      ParameterVector(2, 0.0),
      -2.0};
}

inline BenchmarkSpec schwefel_spec() {
  std::vector<std::string> names(10);
  for (std::size_t i = 0; i < 10; ++i) names[i] = "x" + std::to_string(i);
  return BenchmarkSpec{
      &schwefel,
      SearchSpace(ParameterVector(10, -500.0), ParameterVector(10, 500.0),
                  ParameterVector(10, 0.01), names,
                  std::vector<std::string>(10, "")),
      StepSchedule::uniform(10, 100.0, 0.01),
      ParameterVector(10, 420.9687),
      -4189.8288727216251};
}

}  // namespace tabu::bench
