#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabu/hydraulics.hpp"
#include "tabu/ode.hpp"
#include "tabu/units.hpp"

namespace tabu::hyd {

// ---------------------------------------------------------------------------
// circuit parameter sets

struct TransmissionParams {
  double pump_displacement_cc = 17.3;
  double motor_displacement_cc = 78.0;
  double pump_speed_rpm = 1500.0;
  double load_torque = 100.0;        // N m
  double cracking_pressure = 100e5;  // Pa
  double eta_vol_pump = 0.95;
  double eta_vol_motor = 0.95;
  double eta_mech_motor = 0.95;

  void validate() const {
    if (!(pump_displacement_cc >= 1.0 && pump_displacement_cc <= 1000.0) ||
        !(motor_displacement_cc >= 1.0 && motor_displacement_cc <= 1000.0))
      throw std::invalid_argument(
          "TransmissionParams: displacements must lie in [1, 1000] cc/rev");
    for (double eta : {eta_vol_pump, eta_vol_motor, eta_mech_motor})
      if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument(
            "TransmissionParams: efficiencies must lie in (0, 1]");
  }
};

struct TwoMotorParams {
  double pump_displacement_cc = 100.0;
  double motor1_displacement_cc = 500.0;
  double motor2_displacement_cc = 500.0;
  double pcfv1_flow_lpm = 60.0;
  double pcfv2_flow_lpm = 30.0;
  double load_torque1 = 300.0;  // N m
  double load_torque2 = 150.0;  // N m

  void validate() const {
    for (double d : {pump_displacement_cc, motor1_displacement_cc,
                     motor2_displacement_cc})
      if (!(d >= 1.0 && d <= 1000.0))
        throw std::invalid_argument(
            "TwoMotorParams: displacements must lie in [1, 1000] cc/rev");
    for (double q : {pcfv1_flow_lpm, pcfv2_flow_lpm})
      if (!(q >= 10.0 && q <= 100.0))
        throw std::invalid_argument(
            "TwoMotorParams: valve settings must lie in [10, 100] L/min");
  }
};

struct ActuatorParams {
  double pump_displacement_cc = 33.0;  // [1, 500]
  double bore_diameter_mm = 63.0;      // [30, 70]
  double stroke_m = 0.5;               // [0.01, 1.0]
  double dcv_flow_lpm = 75.0;          // [25, 75]
  double proportional_gain = 300.0;    // [1, 300]

  void validate() const {
    if (!(pump_displacement_cc >= 1.0 && pump_displacement_cc <= 500.0))
      throw std::invalid_argument("ActuatorParams: pump outside [1, 500] cc/rev");
    if (!(bore_diameter_mm >= 30.0 && bore_diameter_mm <= 70.0))
      throw std::invalid_argument("ActuatorParams: bore outside [30, 70] mm");
    if (!(stroke_m >= 0.01 && stroke_m <= 1.0))
      throw std::invalid_argument("ActuatorParams: stroke outside [0.01, 1] m");
    if (!(dcv_flow_lpm >= 25.0 && dcv_flow_lpm <= 75.0))
      throw std::invalid_argument("ActuatorParams: DCV flow outside [25, 75] L/min");
    if (!(proportional_gain >= 1.0 && proportional_gain <= 300.0))
      throw std::invalid_argument("ActuatorParams: gain outside [1, 300]");
  }
};

/// Piecewise-linear position target over time.
struct DesiredProfile {
  std::vector<double> times;      // s, strictly increasing
  std::vector<double> positions;  // m
  double sample_interval = 0.1;   // s, objective sampling

  void validate() const {
    if (times.size() < 2 || times.size() != positions.size())
      throw std::invalid_argument("DesiredProfile: need >= 2 matched samples");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (!(times[i] > times[i - 1]))
        throw std::invalid_argument("DesiredProfile: times must increase");
    if (!(sample_interval > 0.0))
      throw std::invalid_argument("DesiredProfile: sample_interval must be > 0");
  }

  double at(double t) const {
    if (t <= times.front()) return positions.front();
    if (t >= times.back()) return positions.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - times.begin());
    const double f = (t - times[i - 1]) / (times[i] - times[i - 1]);
    return positions[i - 1] + f * (positions[i] - positions[i - 1]);
  }

  /// Default extend/hold/retract/hold trapezoid.
  static DesiredProfile trapezoid(double peak = 0.45) {
    return DesiredProfile{{0.0, 2.0, 2.5, 4.5, 5.0},
                          {0.0, peak, peak, 0.0, 0.0},
                          0.1};
  }

  /// Constant target, e.g. for steady-state studies.
  static DesiredProfile constant(double level, double duration = 5.0) {
    return DesiredProfile{{0.0, duration}, {level, level}, 0.1};
  }
};

// ---------------------------------------------------------------------------
// traces

struct SimulationTrace {
  double dt = 0.0;
  double duration = 0.0;
  std::vector<std::string> names;             // signal names with units
  std::vector<double> times;                  // s
  std::vector<std::vector<double>> signals;   // [signal][record]
  bool diverged = false;
  double diverged_at = 0.0;

  std::size_t records() const { return times.size(); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::out_of_range("SimulationTrace: no signal named " + name);
  }

  const std::vector<double>& signal(const std::string& name) const {
    return signals[index_of(name)];
  }
};

/// Per-signal mean and peak-to-peak ripple over the trailing window.
struct SteadyMetrics {
  std::vector<std::string> names;
  std::vector<double> mean;
  std::vector<double> peak_to_peak;
  double window = 0.0;

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::out_of_range("SteadyMetrics: no signal named " + name);
  }
  double mean_of(const std::string& name) const { return mean[index_of(name)]; }
  double ripple_of(const std::string& name) const {
    return peak_to_peak[index_of(name)];
  }
  double max_ripple() const {
    double r = 0.0;
    for (double v : peak_to_peak) r = std::max(r, v);
    return r;
  }
};

/// Mean and ripple of every signal over the final `window` seconds.
/// Unconverged traces can be recognized (and rejected) by the ripple.
inline SteadyMetrics steady_state_extract(const SimulationTrace& trace,
                                          double window) {
  if (trace.diverged)
    throw std::domain_error("steady_state_extract: trace diverged");
  if (!(window > 0.0) || window >= trace.duration)
    throw std::invalid_argument("steady_state_extract: need 0 < window < duration");
  const double t0 = trace.duration - window;
  std::size_t first = trace.records();
  for (std::size_t i = 0; i < trace.records(); ++i) {
    if (trace.times[i] >= t0 - 1e-12) {
      first = i;
      break;
    }
  }
  if (first >= trace.records())
    throw std::invalid_argument("steady_state_extract: empty window");

  SteadyMetrics out;
  out.names = trace.names;
  out.window = window;
  out.mean.resize(trace.names.size());
  out.peak_to_peak.resize(trace.names.size());
  const std::size_t count = trace.records() - first;
  for (std::size_t s = 0; s < trace.names.size(); ++s) {
    double sum = 0.0;
    double lo = trace.signals[s][first];
    double hi = lo;
    for (std::size_t i = first; i < trace.records(); ++i) {
      const double v = trace.signals[s][i];
      sum += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    out.mean[s] = sum / static_cast<double>(count);
    out.peak_to_peak[s] = hi - lo;
  }
  return out;
}

namespace detail {

inline bool state_ok(const double* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(s[i]) || std::abs(s[i]) > 1e12) return false;
  return true;
}

/// Trace-building recorder used by the public simulate_* functions.
class TraceRecorder {
 public:
  TraceRecorder(SimulationTrace& trace, std::vector<std::string> names,
                double dt, double duration, std::size_t expected)
      : trace_(trace) {
    trace_.dt = dt;
    trace_.duration = duration;
    trace_.names = std::move(names);
    trace_.times.reserve(expected);
    trace_.signals.assign(trace_.names.size(), {});
    for (auto& s : trace_.signals) s.reserve(expected);
  }

  void operator()(double t, const std::vector<double>& row) {
    trace_.times.push_back(t);
    for (std::size_t i = 0; i < row.size(); ++i)
      trace_.signals[i].push_back(row[i]);
  }

 private:
  SimulationTrace& trace_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// hydrostatic transmission (pump -> motor, relief valve on the single node)

inline std::vector<std::string> transmission_signal_names() {
  return {"p_node[Pa]",   "motor_speed[rad/s]", "q_pump[m3/s]",
          "q_motor[m3/s]", "q_relief[m3/s]",    "q_leak[m3/s]"};
}

/// Integrates the two-state transmission model, handing every step's
/// signal row to `record(t, row)`. Returns false if the state diverged
/// (recording stops at the failing step).
template <class Recorder>
bool simulate_transmission_with(const TransmissionParams& p,
                                const CircuitConstants& c, double dt,
                                double duration, Recorder&& record,
                                double* diverged_at = nullptr) {
  p.validate();
  const double d_pump = units::cc_per_rev_to_m3_per_rad(p.pump_displacement_cc);
  const double d_motor = units::cc_per_rev_to_m3_per_rad(p.motor_displacement_cc);
  const double w_pump = units::rpm_to_rad_s(p.pump_speed_rpm);
  const double q_pump = d_pump * w_pump;
  const double grad = c.relief_gradient_for(
      units::cc_per_rev_to_m3_per_rad(1000.0) * w_pump);
  const double bv = c.bulk_modulus / c.line_volume;

  const auto deriv = [&](double, const std::array<double, 2>& s) {
    const double pressure = s[0];
    const double w = s[1];
    const double q_rv = relief_valve_flow(pressure, p.cracking_pressure, grad);
    const double q_leak = c.leakage_coefficient * pressure;
    const double dp = bv * (q_pump - d_motor * w - q_rv - q_leak);
    const double torque = d_motor * pressure * p.eta_mech_motor -
                          load_torque(p.load_torque, w, c.torque_reference_speed) -
                          c.viscous_damping * w;
    return std::array<double, 2>{dp, torque / c.motor_inertia};
  };

  std::array<double, 2> state{0.0, 0.0};
  const long steps = std::lround(duration / dt);
  std::vector<double> row(6);
  const auto emit = [&](double t) {
    const double q_rv = relief_valve_flow(state[0], p.cracking_pressure, grad);
    row[0] = state[0];
    row[1] = state[1];
    row[2] = q_pump;
    row[3] = d_motor * state[1];
    row[4] = q_rv;
    row[5] = c.leakage_coefficient * state[0];
    record(t, row);
  };

  emit(0.0);
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (!rk4_step(state, deriv, t, dt) ||
        !detail::state_ok(state.data(), state.size())) {
      if (diverged_at) *diverged_at = t;
      return false;
    }
    emit(t + dt);
  }
  return true;
}

inline SimulationTrace simulate_transmission(const TransmissionParams& p,
                                             const CircuitConstants& c,
                                             double dt = 1e-4,
                                             double duration = 5.0) {
  SimulationTrace trace;
  const std::size_t expected = static_cast<std::size_t>(duration / dt) + 1;
  detail::TraceRecorder rec(trace, transmission_signal_names(), dt, duration,
                            expected);
  double bad_t = 0.0;
  if (!simulate_transmission_with(p, c, dt, duration, rec, &bad_t)) {
    trace.diverged = true;
    trace.diverged_at = bad_t;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// two-motor circuit (one pump, two PCFV-regulated motor branches)

inline std::vector<std::string> two_motor_signal_names() {
  return {"p_supply[Pa]",  "p_branch1[Pa]",      "p_branch2[Pa]",
          "motor1_speed[rad/s]", "motor2_speed[rad/s]", "q_pump[m3/s]",
          "q_relief[m3/s]",      "q_pcfv1[m3/s]",        "q_pcfv2[m3/s]",
          "q_motor1[m3/s]",      "q_motor2[m3/s]",       "q_leak_supply[m3/s]",
          "q_leak1[m3/s]",       "q_leak2[m3/s]"};
}

template <class Recorder>
bool simulate_two_motor_with(const TwoMotorParams& p, const CircuitConstants& c,
                             double dt, double duration, Recorder&& record,
                             double* diverged_at = nullptr) {
  p.validate();
  const double d_pump = units::cc_per_rev_to_m3_per_rad(p.pump_displacement_cc);
  const double d_m1 = units::cc_per_rev_to_m3_per_rad(p.motor1_displacement_cc);
  const double d_m2 = units::cc_per_rev_to_m3_per_rad(p.motor2_displacement_cc);
  const double q_set1 = units::lpm_to_m3_s(p.pcfv1_flow_lpm);
  const double q_set2 = units::lpm_to_m3_s(p.pcfv2_flow_lpm);
  const double w_pump = units::rpm_to_rad_s(c.pump_speed_rpm);
  const double q_pump = d_pump * w_pump;
  const double grad = c.relief_gradient_for(
      units::cc_per_rev_to_m3_per_rad(1000.0) * w_pump);
  const double bv = c.bulk_modulus / c.line_volume;
  const double eta_mm = 0.95;

  const auto pcfv = [&](double q_set, double dp_valve) {
    const double frac = std::clamp(dp_valve / c.pcfv_compensation_margin, 0.0, 1.0);
    return q_set * frac;
  };

  // state: [p_supply, p1, p2, w1, w2]
  const auto deriv = [&](double, const std::array<double, 5>& s) {
    const double ps = s[0], p1 = s[1], p2 = s[2], w1 = s[3], w2 = s[4];
    const double q_rv = relief_valve_flow(ps, c.cracking_pressure, grad);
    const double qv1 = pcfv(q_set1, ps - p1);
    const double qv2 = pcfv(q_set2, ps - p2);
    const double t1 = d_m1 * p1 * eta_mm -
                      load_torque(p.load_torque1, w1, c.torque_reference_speed) -
                      c.viscous_damping * w1;
    const double t2 = d_m2 * p2 * eta_mm -
                      load_torque(p.load_torque2, w2, c.torque_reference_speed) -
                      c.viscous_damping * w2;
    return std::array<double, 5>{
        bv * (q_pump - qv1 - qv2 - q_rv - c.leakage_coefficient * ps),
        bv * (qv1 - d_m1 * w1 - c.leakage_coefficient * p1),
        bv * (qv2 - d_m2 * w2 - c.leakage_coefficient * p2),
        t1 / c.motor_inertia, t2 / c.motor_inertia};
  };

  std::array<double, 5> state{0.0, 0.0, 0.0, 0.0, 0.0};
  const long steps = std::lround(duration / dt);
  std::vector<double> row(14);
  const auto emit = [&](double t) {
    const double ps = state[0], p1 = state[1], p2 = state[2];
    row[0] = ps;
    row[1] = p1;
    row[2] = p2;
    row[3] = state[3];
    row[4] = state[4];
    row[5] = q_pump;
    row[6] = relief_valve_flow(ps, c.cracking_pressure, grad);
    row[7] = pcfv(q_set1, ps - p1);
    row[8] = pcfv(q_set2, ps - p2);
    row[9] = d_m1 * state[3];
    row[10] = d_m2 * state[4];
    row[11] = c.leakage_coefficient * ps;
    row[12] = c.leakage_coefficient * p1;
    row[13] = c.leakage_coefficient * p2;
    record(t, row);
  };

  emit(0.0);
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (!rk4_step(state, deriv, t, dt) ||
        !detail::state_ok(state.data(), state.size())) {
      if (diverged_at) *diverged_at = t;
      return false;
    }
    emit(t + dt);
  }
  return true;
}

inline SimulationTrace simulate_two_motor(const TwoMotorParams& p,
                                          const CircuitConstants& c,
                                          double dt = 1e-4,
                                          double duration = 2.0) {
  SimulationTrace trace;
  const std::size_t expected = static_cast<std::size_t>(duration / dt) + 1;
  detail::TraceRecorder rec(trace, two_motor_signal_names(), dt, duration,
                            expected);
  double bad_t = 0.0;
  if (!simulate_two_motor_with(p, c, dt, duration, rec, &bad_t)) {
    trace.diverged = true;
    trace.diverged_at = bad_t;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// linear actuator under proportional position feedback

inline std::vector<std::string> actuator_signal_names() {
  return {"p_supply[Pa]",       "p_cap[Pa]",      "p_rod[Pa]",
          "position[m]",        "velocity[m/s]",  "target[m]",
          "command[-]",         "q_pump[m3/s]",   "q_relief[m3/s]",
          "q_valve_supply[m3/s]", "q_cap[m3/s]",  "q_rod[m3/s]",
          "q_leak_supply[m3/s]", "q_leak_cap[m3/s]", "q_leak_rod[m3/s]"};
}

template <class Recorder>
bool simulate_actuator_with(const ActuatorParams& p, const CircuitConstants& c,
                            const DesiredProfile& profile, double dt,
                            double duration, Recorder&& record,
                            double* diverged_at = nullptr) {
  p.validate();
  profile.validate();
  const double d_pump = units::cc_per_rev_to_m3_per_rad(p.pump_displacement_cc);
  const double w_pump = units::rpm_to_rad_s(c.pump_speed_rpm);
  const double q_pump = d_pump * w_pump;
  const double q_nom = units::lpm_to_m3_s(p.dcv_flow_lpm);
  const double grad = c.relief_gradient_for(
      units::cc_per_rev_to_m3_per_rad(500.0) * w_pump);
  const double bore = units::mm_to_m(p.bore_diameter_mm);
  const double area_cap = 0.25 * std::numbers::pi * bore * bore;
  const double area_rod =
      area_cap * (1.0 - c.rod_diameter_ratio * c.rod_diameter_ratio);

  struct Flows {
    double draw, into_cap, into_rod;
  };
  const auto valve_flows = [&](double u, double ps, double pa, double pb) {
    Flows f{0.0, 0.0, 0.0};
    if (u >= 0.0) {
      f.into_cap = valve_port_flow(u, q_nom, ps - pa, c.valve_rated_dp,
                                   c.valve_linear_dp);
      f.into_rod = -valve_port_flow(u, q_nom, pb, c.valve_rated_dp,
                                    c.valve_linear_dp);
      f.draw = f.into_cap;
    } else {
      f.into_rod = valve_port_flow(-u, q_nom, ps - pb, c.valve_rated_dp,
                                   c.valve_linear_dp);
      f.into_cap = -valve_port_flow(-u, q_nom, pa, c.valve_rated_dp,
                                    c.valve_linear_dp);
      f.draw = f.into_rod;
    }
    return f;
  };
  const auto command = [&](double t, double x) {
    return std::clamp(p.proportional_gain * (profile.at(t) - x), -1.0, 1.0);
  };

  // state: [p_supply, p_cap, p_rod, x, v]
  const auto deriv = [&](double t, const std::array<double, 5>& s) {
    const double ps = s[0], pa = s[1], pb = s[2], x = s[3], v = s[4];
    const double u = command(t, x);
    const Flows f = valve_flows(u, ps, pa, pb);
    const double q_rv = relief_valve_flow(ps, c.cracking_pressure, grad);
    const double v_cap = c.line_volume + area_cap * std::max(x, 0.0);
    const double v_rod =
        c.line_volume + area_rod * std::max(p.stroke_m - x, 0.0);
    const double force =
        pa * area_cap - pb * area_rod - c.payload_damping * v;
    return std::array<double, 5>{
        c.bulk_modulus / c.line_volume *
            (q_pump - f.draw - q_rv - c.leakage_coefficient * ps),
        c.bulk_modulus / v_cap *
            (f.into_cap - area_cap * v - c.leakage_coefficient * pa),
        c.bulk_modulus / v_rod *
            (f.into_rod + area_rod * v - c.leakage_coefficient * pb),
        v, force / c.payload_mass};
  };

  std::array<double, 5> state{0.0, 0.0, 0.0, 0.0, 0.0};
  const long steps = std::lround(duration / dt);
  std::vector<double> row(15);
  const auto emit = [&](double t) {
    const double ps = state[0], pa = state[1], pb = state[2];
    const double u = command(t, state[3]);
    const Flows f = valve_flows(u, ps, pa, pb);
    row[0] = ps;
    row[1] = pa;
    row[2] = pb;
    row[3] = state[3];
    row[4] = state[4];
    row[5] = profile.at(t);
    row[6] = u;
    row[7] = q_pump;
    row[8] = relief_valve_flow(ps, c.cracking_pressure, grad);
    row[9] = f.draw;
    row[10] = f.into_cap;
    row[11] = f.into_rod;
    row[12] = c.leakage_coefficient * ps;
    row[13] = c.leakage_coefficient * pa;
    row[14] = c.leakage_coefficient * pb;
    record(t, row);
  };

  emit(0.0);
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (!rk4_step(state, deriv, t, dt) ||
        !detail::state_ok(state.data(), state.size())) {
      if (diverged_at) *diverged_at = t;
      return false;
    }
    // end stops
    if (state[3] < 0.0) {
      state[3] = 0.0;
      if (state[4] < 0.0) state[4] = 0.0;
    } else if (state[3] > p.stroke_m) {
      state[3] = p.stroke_m;
      if (state[4] > 0.0) state[4] = 0.0;
    }
    emit(t + dt);
  }
  return true;
}

inline SimulationTrace simulate_actuator(const ActuatorParams& p,
                                         const CircuitConstants& c,
                                         const DesiredProfile& profile,
                                         double dt = 1e-4,
                                         double duration = 5.0) {
  SimulationTrace trace;
  const std::size_t expected = static_cast<std::size_t>(duration / dt) + 1;
  detail::TraceRecorder rec(trace, actuator_signal_names(), dt, duration,
                            expected);
  double bad_t = 0.0;
  if (!simulate_actuator_with(p, c, profile, dt, duration, rec, &bad_t)) {
    trace.diverged = true;
    trace.diverged_at = bad_t;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// CSV export

namespace detail {
inline void append_double(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}
}  // namespace detail

/// Write a trace as CSV: time first, then the signal columns, one row per
/// recorded step (optionally decimated). Diverged traces are refused.
inline void export_trace(const SimulationTrace& trace, std::ostream& os,
                         std::size_t every = 1) {
  if (trace.diverged)
    throw std::runtime_error("export_trace: trace diverged; nothing exported");
  if (every == 0) every = 1;
  std::string line = "time[s]";
  for (const auto& n : trace.names) {
    line += ',';
    line += n;
  }
  line += '\n';
  os << line;
  for (std::size_t i = 0; i < trace.records(); i += every) {
    line.clear();
    detail::append_double(line, trace.times[i]);
    for (const auto& s : trace.signals) {
      line += ',';
      detail::append_double(line, s[i]);
    }
    line += '\n';
    os << line;
  }
}

}  // namespace tabu::hyd
