#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tabu/search_space.hpp"

namespace tabu {

/// A point together with its objective value.
struct Evaluation {
  ParameterVector point;
  double value = 0.0;
};

/// Short-term memory: the last n accepted points, first in first out.
///
/// Membership is exact lattice equality (all coordinates bitwise equal);
/// points are expected to be quantized before they get here.
class TabuList {
 public:
  explicit TabuList(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw std::invalid_argument("TabuList: capacity must be >= 1");
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  const std::deque<ParameterVector>& entries() const { return entries_; }

  bool contains(const ParameterVector& candidate) const {
    return std::find(entries_.begin(), entries_.end(), candidate) != entries_.end();
  }

  void record(const ParameterVector& point) {
    entries_.push_back(point);
    if (entries_.size() > capacity_) entries_.pop_front();
  }

 private:
  std::size_t capacity_;
  std::deque<ParameterVector> entries_;
};

/// Membership test; costs no objective evaluations.
inline bool is_tabu(const ParameterVector& candidate, const TabuList& list) {
  return list.contains(candidate);
}

/// Intermediate-term memory: the m most recent best-so-far solutions.
/// Insertion happens only when a strictly better solution appears, so the
/// replacement time scale is much longer than the tabu list's.
class IntermediateMemory {
 public:
  explicit IntermediateMemory(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0)
      throw std::invalid_argument("IntermediateMemory: capacity must be >= 1");
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::deque<Evaluation>& entries() const { return entries_; }

  void insert(const Evaluation& e) {
    entries_.push_back(e);
    if (entries_.size() > capacity_) entries_.pop_front();
  }

  /// Coordinate-wise mean of the stored points.
  ParameterVector centroid() const {
    if (entries_.empty())
      throw std::logic_error("IntermediateMemory::centroid: empty memory");
    ParameterVector mean(entries_.front().point.size(), 0.0);
    for (const Evaluation& e : entries_)
      for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += e.point[i];
    for (double& v : mean) v /= static_cast<double>(entries_.size());
    return mean;
  }

 private:
  std::size_t capacity_;
  std::deque<Evaluation> entries_;
};

/// Tabu status may be overridden only for a strict improvement on the best
/// solution found so far in the run.
inline bool aspiration_override(double candidate_value, double best_so_far) {
  return candidate_value < best_so_far;
}

}  // namespace tabu
