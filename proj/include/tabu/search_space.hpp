#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabu/random.hpp"

namespace tabu {

/// A point in the search domain, one engineering-unit value per dimension.
using ParameterVector = std::vector<double>;

/// Bounded, grid-quantized search domain.
///
/// Every dimension carries [lower, upper] bounds and a grid resolution;
/// all points handled by the engine live on the lattice
/// lower[i] + k*grid[i]. Immutable after construction.
class SearchSpace {
 public:
  SearchSpace(std::vector<double> lower, std::vector<double> upper,
              std::vector<double> grid, std::vector<std::string> names = {},
              std::vector<std::string> units = {})
      : lower_(std::move(lower)),
        upper_(std::move(upper)),
        grid_(std::move(grid)),
        names_(std::move(names)),
        units_(std::move(units)) {
    const std::size_t d = lower_.size();
    if (upper_.size() != d || grid_.size() != d)
      throw std::invalid_argument("SearchSpace: bound/grid length mismatch");
    if (d == 0) throw std::invalid_argument("SearchSpace: zero dimensions");
    if (names_.empty()) names_.resize(d, "");
    if (units_.empty()) units_.resize(d, "");
    if (names_.size() != d || units_.size() != d)
      throw std::invalid_argument("SearchSpace: label length mismatch");
    for (std::size_t i = 0; i < d; ++i) {
      if (!(lower_[i] < upper_[i]))
        throw std::invalid_argument("SearchSpace: lower must be < upper");
      if (!(grid_[i] > 0.0) || grid_[i] > upper_[i] - lower_[i])
        throw std::invalid_argument("SearchSpace: grid must be in (0, upper-lower]");
    }
  }

  std::size_t dimension() const { return lower_.size(); }
  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }
  double grid(std::size_t i) const { return grid_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::string& unit(std::size_t i) const { return units_[i]; }

  void require_dimension(const ParameterVector& p) const {
    if (p.size() != dimension())
      throw std::invalid_argument("parameter vector dimension mismatch");
  }

  /// Index of the highest lattice point that does not exceed upper.
  long max_index(std::size_t i) const {
    return static_cast<long>(std::floor((upper_[i] - lower_[i]) / grid_[i] + 1e-9));
  }

 private:
  std::vector<double> lower_, upper_, grid_;
  std::vector<std::string> names_, units_;
};

/// Per-dimension step sizes with a geometric reduction schedule.
struct StepSchedule {
  std::vector<double> initial;
  std::vector<double> minimum;
  double reduction_factor = 2.0;

  StepSchedule(std::vector<double> init, std::vector<double> min_,
               double factor = 2.0)
      : initial(std::move(init)), minimum(std::move(min_)),
        reduction_factor(factor) {
    if (initial.size() != minimum.size())
      throw std::invalid_argument("StepSchedule: length mismatch");
    if (!(reduction_factor > 1.0))
      throw std::invalid_argument("StepSchedule: reduction_factor must be > 1");
    for (std::size_t i = 0; i < initial.size(); ++i)
      if (!(minimum[i] > 0.0) || initial[i] < minimum[i])
        throw std::invalid_argument("StepSchedule: need initial >= minimum > 0");
  }

  /// Uniform schedule across all dimensions.
  static StepSchedule uniform(std::size_t dim, double init, double min_,
                              double factor = 2.0) {
    return StepSchedule(std::vector<double>(dim, init),
                        std::vector<double>(dim, min_), factor);
  }
};

/// Snap one coordinate to the nearest in-range lattice point; exact
/// half-grid ties go to the lower neighbour.
inline double quantize_coord(double v, double lower, double grid,
                             long max_index) {
  const double r = (v - lower) / grid;
  long k = static_cast<long>(std::ceil(r - 0.5));  // nearest, ties down
  if (k < 0) k = 0;
  if (k > max_index) k = max_index;
  return lower + static_cast<double>(k) * grid;
}

/// Snap every coordinate to the nearest in-range lattice point.
inline ParameterVector quantize(const ParameterVector& p, const SearchSpace& space) {
  space.require_dimension(p);
  ParameterVector q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[i] = quantize_coord(p[i], space.lower(i), space.grid(i),
                          space.max_index(i));
  return q;
}

/// Limit every coordinate to [lower, upper].
inline ParameterVector clamp(const ParameterVector& p, const SearchSpace& space) {
  space.require_dimension(p);
  ParameterVector q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    double v = p[i];
    if (v < space.lower(i)) v = space.lower(i);
    if (v > space.upper(i)) v = space.upper(i);
    q[i] = v;
  }
  return q;
}

/// Uniform lattice sample over the box; deterministic for a fixed stream.
inline ParameterVector random_point(const SearchSpace& space, RandomStream& rng) {
  ParameterVector p(space.dimension());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = rng.uniform(space.lower(i), space.upper(i));
  return quantize(p, space);
}

/// One-coordinate-at-a-time exploration candidates around a base point:
/// base[i] +/- steps[i], clamped and quantized. Candidates that land back
/// on the base are dropped, so the result has at most 2*dimension entries
/// and never contains the base itself.
inline std::vector<ParameterVector> neighborhood(const ParameterVector& base,
                                                 const std::vector<double>& steps,
                                                 const SearchSpace& space) {
  space.require_dimension(base);
  if (steps.size() != base.size())
    throw std::invalid_argument("neighborhood: step length mismatch");
  std::vector<ParameterVector> out;
  out.reserve(2 * base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (double sign : {+1.0, -1.0}) {
      ParameterVector c = base;
      c[i] = quantize_coord(base[i] + sign * steps[i], space.lower(i),
                            space.grid(i), space.max_index(i));
      if (c[i] != base[i]) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace tabu
