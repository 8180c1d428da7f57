#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tabu/circuits.hpp"
#include "tabu/hydraulics.hpp"
#include "tabu/search_space.hpp"
#include "tabu/units.hpp"

namespace tabu::obj {

inline constexpr double infinite_cost = std::numeric_limits<double>::infinity();

/// Relief-spill penalty 1 + Q_rv/Q_p (any consistent flow unit).
inline double penalty_multiplier(double q_relief, double q_pump) {
  if (!(q_pump > 0.0))
    throw std::domain_error("penalty_multiplier: pump flow must be > 0");
  if (q_relief < 0.0)
    throw std::domain_error("penalty_multiplier: relief flow must be >= 0");
  return 1.0 + q_relief / q_pump;
}

/// Squared speed error (r/min) times the relief penalty.
inline double transmission_objective(const hyd::SteadyMetrics& m,
                                     double target_rpm) {
  const double speed = units::rad_s_to_rpm(m.mean_of("motor_speed[rad/s]"));
  const double e = target_rpm - speed;
  return e * e * penalty_multiplier(m.mean_of("q_relief[m3/s]"),
                                    m.mean_of("q_pump[m3/s]"));
}

/// Summed absolute speed errors (r/min), squared, times the relief penalty.
inline double two_motor_objective(const hyd::SteadyMetrics& m, double target1_rpm,
                                  double target2_rpm) {
  const double e1 =
      target1_rpm - units::rad_s_to_rpm(m.mean_of("motor1_speed[rad/s]"));
  const double e2 =
      target2_rpm - units::rad_s_to_rpm(m.mean_of("motor2_speed[rad/s]"));
  const double e = std::abs(e1) + std::abs(e2);
  return e * e * penalty_multiplier(m.mean_of("q_relief[m3/s]"),
                                    m.mean_of("q_pump[m3/s]"));
}

namespace detail {

/// Shared accumulation for the sampled position-error objective: each
/// sample contributes |x_d - x_a| times the instantaneous relief penalty.
class PositionErrorSum {
 public:
  void add(double target, double actual, double q_relief, double q_pump) {
    if (!(q_pump > 0.0)) {
      bad_ = true;
      return;
    }
    sum_ += std::abs(target - actual) * (1.0 + q_relief / q_pump);
  }
  double value() const { return bad_ ? infinite_cost : sum_; }

 private:
  double sum_ = 0.0;
  bool bad_ = false;
};

}  // namespace detail

/// Sampled tracking objective over a full actuator trace. Diverged traces
/// cost +infinity.
inline double actuator_objective(const hyd::SimulationTrace& trace,
                                 const hyd::DesiredProfile& profile) {
  if (trace.diverged) return infinite_cost;
  const auto& x = trace.signal("position[m]");
  const auto& q_rv = trace.signal("q_relief[m3/s]");
  const auto& q_p = trace.signal("q_pump[m3/s]");
  const long stride = std::lround(profile.sample_interval / trace.dt);
  if (stride < 1)
    throw std::invalid_argument("actuator_objective: sample interval below dt");
  detail::PositionErrorSum acc;
  for (std::size_t i = 0; i < trace.records(); i += static_cast<std::size_t>(stride))
    acc.add(profile.at(trace.times[i]), x[i], q_rv[i], q_p[i]);
  return acc.value();
}

// ---------------------------------------------------------------------------
// optimization problems: parameter vector -> cost, plus domain definitions

namespace detail {

/// Recorder accumulating per-signal mean and peak-to-peak over the
/// trailing window; avoids building full traces in the optimizer loop.
class WindowAccumulator {
 public:
  WindowAccumulator(std::size_t signal_count, double window_start)
      : start_(window_start), sum_(signal_count, 0.0),
        lo_(signal_count, 0.0), hi_(signal_count, 0.0) {}

  void operator()(double t, const std::vector<double>& row) {
    if (t < start_ - 1e-12) return;
    if (count_ == 0) {
      for (std::size_t i = 0; i < row.size(); ++i) lo_[i] = hi_[i] = row[i];
    }
    ++count_;
    for (std::size_t i = 0; i < row.size(); ++i) {
      sum_[i] += row[i];
      lo_[i] = std::min(lo_[i], row[i]);
      hi_[i] = std::max(hi_[i], row[i]);
    }
  }

  hyd::SteadyMetrics metrics(std::vector<std::string> names, double window) const {
    if (count_ == 0)
      throw std::logic_error("WindowAccumulator: empty steady window");
    hyd::SteadyMetrics m;
    m.names = std::move(names);
    m.window = window;
    m.mean.resize(sum_.size());
    m.peak_to_peak.resize(sum_.size());
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      m.mean[i] = sum_[i] / static_cast<double>(count_);
      m.peak_to_peak[i] = hi_[i] - lo_[i];
    }
    return m;
  }

 private:
  double start_;
  std::size_t count_ = 0;
  std::vector<double> sum_, lo_, hi_;
};

}  // namespace detail

/// Hydrostatic transmission sizing problem over [D_p, D_m] in cc/rev.
struct TransmissionProblem {
  hyd::CircuitConstants constants;
  double target_rpm = 300.0;
  double dt = 1e-4;
  double duration = 5.0;
  double steady_window_fraction = 0.2;
  bool pump_power_variant = false;

  SearchSpace space() const {
    return SearchSpace({1.0, 1.0}, {1000.0, 1000.0}, {1.0, 1.0},
                       {"pump_displacement", "motor_displacement"},
                       {"cc/rev", "cc/rev"});
  }
  StepSchedule schedule() const { return StepSchedule::uniform(2, 64.0, 1.0); }

  hyd::SteadyMetrics steady(const ParameterVector& v) const {
    hyd::TransmissionParams p;
    p.pump_displacement_cc = v.at(0);
    p.motor_displacement_cc = v.at(1);
    p.pump_speed_rpm = constants.pump_speed_rpm;
    p.cracking_pressure = constants.cracking_pressure;
    const double window = duration * steady_window_fraction;
    detail::WindowAccumulator acc(hyd::transmission_signal_names().size(),
                                  duration - window);
    if (!hyd::simulate_transmission_with(p, constants, dt, duration, acc))
      throw std::domain_error("transmission simulation diverged");
    return acc.metrics(hyd::transmission_signal_names(), window);
  }

  double operator()(const ParameterVector& v) const {
    try {
      const hyd::SteadyMetrics m = steady(v);
      double cost = transmission_objective(m, target_rpm);
      if (pump_power_variant) {
        // installed-capacity penalty replacing the relief term
        const double speed =
            units::rad_s_to_rpm(m.mean_of("motor_speed[rad/s]"));
        const double e = target_rpm - speed;
        const double q_max = units::cc_per_rev_to_m3_per_rad(1000.0) *
                             units::rpm_to_rad_s(constants.pump_speed_rpm);
        cost = e * e * (1.0 + m.mean_of("q_pump[m3/s]") / q_max);
      }
      return cost;
    } catch (const std::domain_error&) {
      return infinite_cost;
    }
  }
};

/// Two-motor problem over [D_p, D_m1, D_m2, Q_set1, Q_set2].
struct TwoMotorProblem {
  hyd::CircuitConstants constants;
  double target1_rpm = 120.0;
  double target2_rpm = 60.0;
  double load_torque1 = 300.0;
  double load_torque2 = 150.0;
  double dt = 1e-4;
  double duration = 2.0;
  double steady_window_fraction = 0.2;

  SearchSpace space() const {
    return SearchSpace(
        {1.0, 1.0, 1.0, 10.0, 10.0}, {1000.0, 1000.0, 1000.0, 100.0, 100.0},
        {1.0, 1.0, 1.0, 0.5, 0.5},
        {"pump_displacement", "motor1_displacement", "motor2_displacement",
         "pcfv1_flow", "pcfv2_flow"},
        {"cc/rev", "cc/rev", "cc/rev", "L/min", "L/min"});
  }
  StepSchedule schedule() const {
    return StepSchedule({64.0, 64.0, 64.0, 32.0, 32.0},
                        {1.0, 1.0, 1.0, 0.5, 0.5});
  }

  hyd::TwoMotorParams params(const ParameterVector& v) const {
    hyd::TwoMotorParams p;
    p.pump_displacement_cc = v.at(0);
    p.motor1_displacement_cc = v.at(1);
    p.motor2_displacement_cc = v.at(2);
    p.pcfv1_flow_lpm = v.at(3);
    p.pcfv2_flow_lpm = v.at(4);
    p.load_torque1 = load_torque1;
    p.load_torque2 = load_torque2;
    return p;
  }

  hyd::SteadyMetrics steady(const ParameterVector& v) const {
    const double window = duration * steady_window_fraction;
    detail::WindowAccumulator acc(hyd::two_motor_signal_names().size(),
                                  duration - window);
    if (!hyd::simulate_two_motor_with(params(v), constants, dt, duration, acc))
      throw std::domain_error("two-motor simulation diverged");
    return acc.metrics(hyd::two_motor_signal_names(), window);
  }

  double operator()(const ParameterVector& v) const {
    try {
      return two_motor_objective(steady(v), target1_rpm, target2_rpm);
    } catch (const std::domain_error&) {
      return infinite_cost;
    }
  }
};

/// Linear actuator problem over [D_p, bore_mm, stroke_m, Q_dcv, K_p].
struct ActuatorProblem {
  hyd::CircuitConstants constants;
  hyd::DesiredProfile profile = hyd::DesiredProfile::trapezoid();
  double dt = 1e-4;

  SearchSpace space() const {
    return SearchSpace({1.0, 30.0, 0.01, 25.0, 1.0},
                       {500.0, 70.0, 1.0, 75.0, 300.0},
                       {1.0, 0.5, 0.01, 0.5, 1.0},
                       {"pump_displacement", "bore_diameter", "stroke",
                        "dcv_flow", "proportional_gain"},
                       {"cc/rev", "mm", "m", "L/min", ""});
  }
  StepSchedule schedule() const {
    return StepSchedule({64.0, 32.0, 0.64, 32.0, 64.0},
                        {1.0, 0.5, 0.01, 0.5, 1.0});
  }

  hyd::ActuatorParams params(const ParameterVector& v) const {
    hyd::ActuatorParams p;
    p.pump_displacement_cc = v.at(0);
    p.bore_diameter_mm = v.at(1);
    p.stroke_m = v.at(2);
    p.dcv_flow_lpm = v.at(3);
    p.proportional_gain = v.at(4);
    return p;
  }

  double operator()(const ParameterVector& v) const {
    const double duration = profile.times.back();
    const long stride = std::lround(profile.sample_interval / dt);
    detail::PositionErrorSum acc;
    long step = 0;
    const auto rec = [&](double, const std::vector<double>& row) {
      if (step % stride == 0) acc.add(row[5], row[3], row[8], row[7]);
      ++step;
    };
    if (!hyd::simulate_actuator_with(params(v), constants, profile, dt,
                                     duration, rec))
      return infinite_cost;
    return acc.value();
  }
};

}  // namespace tabu::obj
