#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tabu/memory.hpp"
#include "tabu/random.hpp"
#include "tabu/search_space.hpp"

namespace tabu {

/// Memory sizes, control-counter thresholds and budget of one search run.
struct SearchConfig {
  std::size_t n = 7;             // tabu list capacity
  std::size_t m = 4;             // intermediate memory capacity
  int intense = 10;              // control value triggering intensification
  int diverse = 15;              // control value triggering diversification
  int end_of_cycle = 25;         // control value triggering step reduction
  double pattern_factor = 2.0;   // pattern-move extension factor k
  long long max_evaluations = 500000;
  std::uint64_t seed = 1;

  void validate() const {
    if (n < 1 || m < 1)
      throw std::invalid_argument("SearchConfig: n and m must be >= 1");
    if (!(0 < intense && intense < diverse && diverse < end_of_cycle))
      throw std::invalid_argument(
          "SearchConfig: need 0 < intense < diverse < end_of_cycle");
    if (!(pattern_factor > 1.0))
      throw std::invalid_argument("SearchConfig: pattern_factor must be > 1");
    if (max_evaluations < 1)
      throw std::invalid_argument("SearchConfig: max_evaluations must be >= 1");
  }
};

enum class Termination { step_floor, budget };

/// Outcome of one seeded run.
struct RunResult {
  Evaluation best;
  long long evaluations_used = 0;
  std::vector<Evaluation> accepted_history;
  Termination terminated_by = Termination::step_floor;
  long long non_finite_evaluations = 0;
};

/// Wraps the raw objective with the evaluation counter, the budget cap and
/// best-ever tracking. Non-finite objective values are mapped to +infinity
/// so they are never accepted as a best solution; the occurrences are
/// counted for the run log. Returns nullopt once the budget is spent.
template <class F>
class BudgetedObjective {
 public:
  BudgetedObjective(F& fn, long long cap) : fn_(fn), cap_(cap) {}

  std::optional<double> operator()(const ParameterVector& p) {
    if (used_ >= cap_) return std::nullopt;
    ++used_;
    double v = fn_(p);
    if (!std::isfinite(v)) {
      ++non_finite_;
      v = std::numeric_limits<double>::infinity();
    }
    if (!best_ || v < best_->value) best_ = Evaluation{p, v};
    return v;
  }

  bool exhausted() const { return used_ >= cap_; }
  long long used() const { return used_; }
  long long non_finite() const { return non_finite_; }
  const std::optional<Evaluation>& best() const { return best_; }

 private:
  F& fn_;
  long long cap_;
  long long used_ = 0;
  long long non_finite_ = 0;
  std::optional<Evaluation> best_;
};

enum class MoveStatus { moved, exhausted, out_of_budget };

struct MoveOutcome {
  MoveStatus status = MoveStatus::exhausted;
  Evaluation accepted;
};

/// Exploration step: evaluate the candidates around the base and return the
/// best available move, even when every move worsens the objective. Tabu
/// candidates stay admissible only if their (evaluated) value beats the best
/// found so far; tabu membership itself is checked before evaluation.
/// `exhausted` means no candidate was admissible.
template <class Eval>
MoveOutcome explore(const Evaluation& base, const std::vector<double>& steps,
                    const SearchSpace& space, Eval& evaluate,
                    const TabuList& tabu_list, double best_so_far) {
  MoveOutcome out;
  bool found = false;
  for (ParameterVector& c : neighborhood(base.point, steps, space)) {
    const bool tabu_move = is_tabu(c, tabu_list);
    const std::optional<double> v = evaluate(c);
    if (!v) return {MoveStatus::out_of_budget, {}};
    if (tabu_move && !aspiration_override(*v, best_so_far)) continue;
    if (!found || *v < out.accepted.value) {
      out.accepted = Evaluation{std::move(c), *v};
      found = true;
    }
  }
  out.status = found ? MoveStatus::moved : MoveStatus::exhausted;
  return out;
}

/// Pattern move: extend the old-base -> new-base vector by the pattern
/// factor; the extended point replaces the exploration point only when it
/// evaluates strictly better (and is not an unaspirated tabu point).
/// Degenerate candidates that collapse onto either base are rejected
/// without evaluation.
template <class Eval>
Evaluation pattern_move(const Evaluation& old_base, const Evaluation& new_base,
                        double pattern_factor, const SearchSpace& space,
                        Eval& evaluate, const TabuList& tabu_list,
                        double best_so_far, bool* out_of_budget = nullptr) {
  ParameterVector c(new_base.point.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = old_base.point[i] +
           pattern_factor * (new_base.point[i] - old_base.point[i]);
  c = quantize(clamp(c, space), space);
  if (c == new_base.point || c == old_base.point) return new_base;

  const bool tabu_move = is_tabu(c, tabu_list);
  const std::optional<double> v = evaluate(c);
  if (!v) {
    if (out_of_budget) *out_of_budget = true;
    return new_base;
  }
  if (tabu_move && !aspiration_override(*v, best_so_far)) return new_base;
  if (*v < new_base.value) return Evaluation{std::move(c), *v};
  return new_base;
}

/// Intensification target: centroid of the intermediate memory, snapped
/// into the space.
inline ParameterVector intensify(const IntermediateMemory& memory,
                                 const SearchSpace& space) {
  return quantize(clamp(memory.centroid(), space), space);
}

/// Diversification target: a fresh random point.
inline ParameterVector diversify(const SearchSpace& space, RandomStream& rng) {
  return random_point(space, rng);
}

/// One full tabu-guided pattern search run.
///
/// Control loop: the counter resets on every new best solution and
/// increments otherwise; intensification and diversification fire at their
/// configured counter values; when the counter reaches end_of_cycle every
/// step size is divided by the schedule's reduction factor and the run
/// terminates once any step falls below its minimum (or the evaluation
/// budget runs out). Every accepted base point -- exploration, pattern,
/// intensification or diversification -- is recorded in the tabu list and
/// in the accepted history.
template <class F>
RunResult run_search(const SearchSpace& space, const StepSchedule& schedule,
                     F&& objective, const SearchConfig& config,
                     const std::optional<ParameterVector>& start = std::nullopt) {
  config.validate();
  if (schedule.initial.size() != space.dimension())
    throw std::invalid_argument("run_search: schedule/space dimension mismatch");
  for (std::size_t i = 0; i < space.dimension(); ++i)
    if (schedule.minimum[i] < space.grid(i))
      throw std::invalid_argument("run_search: minimum step below grid resolution");

  RandomStream rng(config.seed);
  BudgetedObjective<std::remove_reference_t<F>> evaluate(objective,
                                                         config.max_evaluations);
  TabuList tabu_list(config.n);
  IntermediateMemory memory(config.m);
  std::vector<double> steps = schedule.initial;

  RunResult result;
  const auto accept = [&](const Evaluation& e) {
    tabu_list.record(e.point);
    result.accepted_history.push_back(e);
  };
  // Diversification draw; re-drawn while tabu so an accepted refresh point
  // cannot repeat a recent solution.
  const auto fresh_point = [&]() {
    ParameterVector p = diversify(space, rng);
    for (int tries = 0; tries < 64 && is_tabu(p, tabu_list); ++tries)
      p = diversify(space, rng);
    return p;
  };

  ParameterVector p0 =
      start ? quantize(clamp(*start, space), space) : random_point(space, rng);
  const std::optional<double> v0 = evaluate(p0);
  if (!v0) throw std::logic_error("run_search: unreachable zero budget");
  Evaluation base{std::move(p0), *v0};
  accept(base);
  memory.insert(*evaluate.best());

  int control = 0;
  bool terminate = false;
  Termination why = Termination::step_floor;

  while (!terminate) {
    while (control < config.end_of_cycle) {
      if (evaluate.exhausted()) {
        terminate = true;
        why = Termination::budget;
        break;
      }
      const double iteration_best_before = evaluate.best()->value;

      if (control == config.intense && !memory.empty()) {
        ParameterVector c = intensify(memory, space);
        // A tabu centroid was visited already; skip instead of cycling.
        if (!is_tabu(c, tabu_list)) {
          const std::optional<double> v = evaluate(c);
          if (!v) {
            terminate = true;
            why = Termination::budget;
            break;
          }
          base = Evaluation{std::move(c), *v};
          accept(base);
        }
      }
      if (control == config.diverse) {
        ParameterVector c = fresh_point();
        const std::optional<double> v = evaluate(c);
        if (!v) {
          terminate = true;
          why = Termination::budget;
          break;
        }
        base = Evaluation{std::move(c), *v};
        accept(base);
      }

      MoveOutcome mv = explore(base, steps, space, evaluate, tabu_list,
                               evaluate.best()->value);
      if (mv.status == MoveStatus::out_of_budget) {
        terminate = true;
        why = Termination::budget;
        break;
      }
      if (mv.status == MoveStatus::exhausted) {
        // Whole neighborhood tabu: force a random refresh this iteration.
        ParameterVector c = fresh_point();
        const std::optional<double> v = evaluate(c);
        if (!v) {
          terminate = true;
          why = Termination::budget;
          break;
        }
        base = Evaluation{std::move(c), *v};
        accept(base);
      } else {
        accept(mv.accepted);
        bool budget_hit = false;
        Evaluation next =
            pattern_move(base, mv.accepted, config.pattern_factor, space,
                         evaluate, tabu_list, evaluate.best()->value,
                         &budget_hit);
        if (next.point != mv.accepted.point) accept(next);
        base = std::move(next);
        if (budget_hit) {
          terminate = true;
          why = Termination::budget;
          break;
        }
      }

      if (evaluate.best()->value < iteration_best_before) {
        control = 0;
        memory.insert(*evaluate.best());
      } else {
        ++control;
      }
    }
    if (terminate) break;

    for (double& s : steps) s /= schedule.reduction_factor;
    control = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] < schedule.minimum[i]) {
        terminate = true;
        why = Termination::step_floor;
        break;
      }
    }
  }

  result.best = *evaluate.best();
  result.evaluations_used = evaluate.used();
  result.non_finite_evaluations = evaluate.non_finite();
  result.terminated_by = why;
  return result;
}

}  // namespace tabu
