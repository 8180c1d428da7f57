#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tabu/benchmarks.hpp"
#include "tabu/circuits.hpp"
#include "tabu/engine.hpp"
#include "tabu/objectives.hpp"

namespace tabu::exp {

enum class Problem { rastrigin, schwefel, transmission, two_motor, actuator };

inline std::string to_string(Problem p) {
  switch (p) {
    case Problem::rastrigin: return "rastrigin";
    case Problem::schwefel: return "schwefel";
    case Problem::transmission: return "transmission";
    case Problem::two_motor: return "two_motor";
    case Problem::actuator: return "actuator";
  }
  return "?";
}

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything one experiment needs: the problem, the run count and seeds,
/// search parameter overrides, circuit constants and objective options.
struct ExperimentConfig {
  Problem problem = Problem::rastrigin;
  int runs = 10;
  std::uint64_t base_seed = 1;
  int threads = 1;

  SearchConfig search;             // n, m, intense, diverse, end_of_cycle, k, budget
  double reduction_factor = 2.0;   // step schedule ratio

  hyd::CircuitConstants constants;
  bool pump_power = false;         // transmission objective variant
  double dt = 1e-4;
  std::optional<double> duration;  // circuit sim duration override
  double steady_window_fraction = 0.2;

  double transmission_target_rpm = 300.0;
  double two_motor_target1_rpm = 120.0;
  double two_motor_target2_rpm = 60.0;
  double two_motor_torque1 = 300.0;
  double two_motor_torque2 = 150.0;
  hyd::DesiredProfile profile = hyd::DesiredProfile::trapezoid();

  void validate() const {
    if (runs < 1) throw ConfigError("config invariant violated: runs must be >= 1");
    if (threads < 1) throw ConfigError("config invariant violated: threads must be >= 1");
    if (!(reduction_factor > 1.0))
      throw ConfigError(
          "config invariant violated: search.reduction_factor must be > 1");
    if (!(dt > 0.0)) throw ConfigError("config invariant violated: sim.dt must be > 0");
    if (duration && !(*duration > 0.0))
      throw ConfigError("config invariant violated: sim.duration must be > 0");
    if (!(steady_window_fraction > 0.0 && steady_window_fraction < 1.0))
      throw ConfigError(
          "config invariant violated: sim.steady_window must lie in (0, 1)");
    try {
      search.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config invariant violated: ") + e.what());
    }
    try {
      profile.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config invariant violated: ") + e.what());
    }
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

inline double parse_number(const std::string& value, int line, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    while (pos < value.size() && (value[pos] == ' ' || value[pos] == '\t')) ++pos;
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("parse error at line " + std::to_string(line) + ", field '" +
                      key + "': not a number: '" + value + "'");
  }
}

inline long long parse_integer(const std::string& value, int line,
                               const std::string& key) {
  const double v = parse_number(value, line, key);
  if (v != std::floor(v))
    throw ConfigError("parse error at line " + std::to_string(line) + ", field '" +
                      key + "': expected an integer, got '" + value + "'");
  return static_cast<long long>(v);
}

/// "t0:x0, t1:x1, ..." -> piecewise-linear profile.
inline hyd::DesiredProfile parse_profile(const std::string& value, int line,
                                         double sample_interval) {
  hyd::DesiredProfile p;
  p.sample_interval = sample_interval;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("parse error at line " + std::to_string(line) +
                        ", field 'actuator.profile': expected t:x pairs");
    p.times.push_back(parse_number(trim(item.substr(0, colon)), line,
                                   "actuator.profile"));
    p.positions.push_back(parse_number(trim(item.substr(colon + 1)), line,
                                       "actuator.profile"));
  }
  return p;
}

}  // namespace detail

/// Flat "key = value" config with dotted section prefixes; '#' starts a
/// comment. Unknown keys, malformed numbers and invariant violations are
/// reported with the offending line and field.
inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string raw;
  int line = 0;
  double profile_interval = 0.1;
  std::optional<std::string> profile_text;
  int profile_line = 0;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("parse error at line " + std::to_string(line) +
                        ": expected 'key = value', got '" + detail::trim(raw) + "'");
    const std::string key = detail::trim(s.substr(0, eq));
    const std::string value = detail::trim(s.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("parse error at line " + std::to_string(line) +
                        ": empty key or value");

    const auto num = [&] { return detail::parse_number(value, line, key); };
    const auto integer = [&] { return detail::parse_integer(value, line, key); };

    if (key == "problem") {
      if (value == "rastrigin") cfg.problem = Problem::rastrigin;
      else if (value == "schwefel") cfg.problem = Problem::schwefel;
      else if (value == "transmission") cfg.problem = Problem::transmission;
      else if (value == "two_motor") cfg.problem = Problem::two_motor;
      else if (value == "actuator") cfg.problem = Problem::actuator;
      else
        throw ConfigError("parse error at line " + std::to_string(line) +
                          ", field 'problem': unknown problem '" + value + "'");
    } else if (key == "runs") cfg.runs = static_cast<int>(integer());
    else if (key == "base_seed") cfg.base_seed = static_cast<std::uint64_t>(integer());
    else if (key == "threads") cfg.threads = static_cast<int>(integer());
    else if (key == "search.n") cfg.search.n = static_cast<std::size_t>(integer());
    else if (key == "search.m") cfg.search.m = static_cast<std::size_t>(integer());
    else if (key == "search.intense") cfg.search.intense = static_cast<int>(integer());
    else if (key == "search.diverse") cfg.search.diverse = static_cast<int>(integer());
    else if (key == "search.end_of_cycle")
      cfg.search.end_of_cycle = static_cast<int>(integer());
    else if (key == "search.pattern_factor") cfg.search.pattern_factor = num();
    else if (key == "search.reduction_factor") cfg.reduction_factor = num();
    else if (key == "search.max_evaluations")
      cfg.search.max_evaluations = integer();
    else if (key == "objective.variant") {
      if (value == "standard") cfg.pump_power = false;
      else if (value == "pump_power") cfg.pump_power = true;
      else
        throw ConfigError("parse error at line " + std::to_string(line) +
                          ", field 'objective.variant': expected standard or "
                          "pump_power, got '" + value + "'");
    } else if (key == "sim.dt") cfg.dt = num();
    else if (key == "sim.duration") cfg.duration = num();
    else if (key == "sim.steady_window") cfg.steady_window_fraction = num();
    else if (key == "circuit.bulk_modulus") cfg.constants.bulk_modulus = num();
    else if (key == "circuit.line_volume") cfg.constants.line_volume = num();
    else if (key == "circuit.motor_inertia") cfg.constants.motor_inertia = num();
    else if (key == "circuit.viscous_damping") cfg.constants.viscous_damping = num();
    else if (key == "circuit.leakage") cfg.constants.leakage_coefficient = num();
    else if (key == "circuit.relief_gradient")
      cfg.constants.relief_valve_gradient = num();
    else if (key == "circuit.relief_overpressure")
      cfg.constants.relief_overpressure = num();
    else if (key == "circuit.pcfv_margin")
      cfg.constants.pcfv_compensation_margin = num();
    else if (key == "circuit.payload_mass") cfg.constants.payload_mass = num();
    else if (key == "circuit.payload_damping") cfg.constants.payload_damping = num();
    else if (key == "circuit.rod_ratio") cfg.constants.rod_diameter_ratio = num();
    else if (key == "circuit.valve_rated_dp") cfg.constants.valve_rated_dp = num();
    else if (key == "circuit.valve_linear_dp") cfg.constants.valve_linear_dp = num();
    else if (key == "circuit.pump_speed_rpm") cfg.constants.pump_speed_rpm = num();
    else if (key == "circuit.cracking_pressure")
      cfg.constants.cracking_pressure = num();
    else if (key == "transmission.target_rpm") cfg.transmission_target_rpm = num();
    else if (key == "two_motor.target1") cfg.two_motor_target1_rpm = num();
    else if (key == "two_motor.target2") cfg.two_motor_target2_rpm = num();
    else if (key == "two_motor.torque1") cfg.two_motor_torque1 = num();
    else if (key == "two_motor.torque2") cfg.two_motor_torque2 = num();
    else if (key == "actuator.sample_interval") profile_interval = num();
    else if (key == "actuator.profile") {
      profile_text = value;
      profile_line = line;
    } else {
      throw ConfigError("parse error at line " + std::to_string(line) +
                        ": unknown field '" + key + "'");
    }
  }

  cfg.profile.sample_interval = profile_interval;
  if (profile_text)
    cfg.profile = detail::parse_profile(*profile_text, profile_line, profile_interval);
  cfg.validate();
  return cfg;
}

inline ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

// ---------------------------------------------------------------------------
// experiment execution

struct RunRow {
  int index = 0;                 // 1-based
  std::uint64_t seed = 0;
  ParameterVector best_point;
  double best_value = 0.0;
  long long evaluations = 0;
  Termination terminated_by = Termination::step_floor;
  long long non_finite = 0;
  std::vector<double> metrics;   // problem-specific, see metric_names
  bool failed = false;
  bool success = false;
  std::string note;
};

struct ExperimentSummary {
  int success_count = 0;
  double mean_evaluations = 0.0;
  long long min_evaluations = 0;
  long long max_evaluations = 0;
  int best_run = 0;  // 1-based index of the lowest objective
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<std::string> parameter_names;
  std::vector<std::string> metric_names;
  std::vector<RunRow> rows;
  ExperimentSummary summary;

  const RunRow& best_row() const { return rows.at(summary.best_run - 1); }
};

namespace detail {

inline void append_value(std::string& out, double v) {
  if (std::isinf(v)) {
    out += v > 0 ? "inf" : "-inf";
    return;
  }
  hyd::detail::append_double(out, v);
}

struct ProblemSetup {
  SearchSpace space;
  StepSchedule schedule;
  std::function<double(const ParameterVector&)> objective;
  std::function<std::vector<double>(const ParameterVector&)> metrics;
  std::function<bool(const RunRow&)> success;
  std::vector<std::string> metric_names;
};

inline ProblemSetup make_setup(const ExperimentConfig& cfg) {
  switch (cfg.problem) {
    case Problem::rastrigin: {
      auto spec = bench::rastrigin_spec();
      const double target = spec.known_optimum_value;
      return ProblemSetup{
          spec.space,
          StepSchedule(spec.schedule.initial, spec.schedule.minimum,
                       cfg.reduction_factor),
          [](const ParameterVector& v) { return bench::rastrigin(v); },
          {},
          [target](const RunRow& r) {
            return std::abs(r.best_value - target) <= 1e-3;
          },
          {}};
    }
    case Problem::schwefel: {
      auto spec = bench::schwefel_spec();
      const double target = spec.known_optimum_value;
      return ProblemSetup{
          spec.space,
          StepSchedule(spec.schedule.initial, spec.schedule.minimum,
                       cfg.reduction_factor),
          [](const ParameterVector& v) { return bench::schwefel(v); },
          {},
          [target](const RunRow& r) {
            return std::abs(r.best_value - target) <= 1e-3 * std::abs(target);
          },
          {}};
    }
    case Problem::transmission: {
      obj::TransmissionProblem prob;
      prob.constants = cfg.constants;
      prob.target_rpm = cfg.transmission_target_rpm;
      prob.dt = cfg.dt;
      prob.duration = cfg.duration.value_or(5.0);
      prob.steady_window_fraction = cfg.steady_window_fraction;
      prob.pump_power_variant = cfg.pump_power;
      const double target = prob.target_rpm;
      auto schedule = StepSchedule(prob.schedule().initial,
                                   prob.schedule().minimum, cfg.reduction_factor);
      return ProblemSetup{
          prob.space(), schedule, prob,
          [prob](const ParameterVector& v) {
            const auto m = prob.steady(v);
            return std::vector<double>{
                units::rad_s_to_rpm(m.mean_of("motor_speed[rad/s]")),
                units::m3_s_to_lpm(m.mean_of("q_relief[m3/s]")),
                units::m3_s_to_lpm(m.mean_of("q_pump[m3/s]")),
                units::pa_to_bar(m.mean_of("p_node[Pa]"))};
          },
          [target](const RunRow& r) {
            return !r.metrics.empty() && std::abs(r.metrics[0] - target) <= 0.5 &&
                   r.metrics[1] < 1e-3;
          },
          {"speed[r/min]", "q_relief[L/min]", "q_pump[L/min]", "dp[bar]"}};
    }
    case Problem::two_motor: {
      obj::TwoMotorProblem prob;
      prob.constants = cfg.constants;
      prob.target1_rpm = cfg.two_motor_target1_rpm;
      prob.target2_rpm = cfg.two_motor_target2_rpm;
      prob.load_torque1 = cfg.two_motor_torque1;
      prob.load_torque2 = cfg.two_motor_torque2;
      prob.dt = cfg.dt;
      prob.duration = cfg.duration.value_or(2.0);
      prob.steady_window_fraction = cfg.steady_window_fraction;
      const double t1 = prob.target1_rpm, t2 = prob.target2_rpm;
      auto schedule = StepSchedule(prob.schedule().initial,
                                   prob.schedule().minimum, cfg.reduction_factor);
      return ProblemSetup{
          prob.space(), schedule, prob,
          [prob](const ParameterVector& v) {
            const auto m = prob.steady(v);
            return std::vector<double>{
                units::rad_s_to_rpm(m.mean_of("motor1_speed[rad/s]")),
                units::rad_s_to_rpm(m.mean_of("motor2_speed[rad/s]")),
                units::m3_s_to_lpm(m.mean_of("q_relief[m3/s]")),
                units::m3_s_to_lpm(m.mean_of("q_pump[m3/s]")),
                units::pa_to_bar(m.mean_of("p_branch1[Pa]")),
                units::pa_to_bar(m.mean_of("p_branch2[Pa]"))};
          },
          [t1, t2](const RunRow& r) {
            return r.metrics.size() >= 2 && std::abs(r.metrics[0] - t1) <= 0.5 &&
                   std::abs(r.metrics[1] - t2) <= 0.5;
          },
          {"speed1[r/min]", "speed2[r/min]", "q_relief[L/min]", "q_pump[L/min]",
           "dp1[bar]", "dp2[bar]"}};
    }
    case Problem::actuator: {
      obj::ActuatorProblem prob;
      prob.constants = cfg.constants;
      prob.profile = cfg.profile;
      prob.dt = cfg.dt;
      return ProblemSetup{
          prob.space(), prob.schedule(), prob, {},
          [](const RunRow& r) { return std::isfinite(r.best_value); },
          {}};
    }
  }
  throw std::logic_error("make_setup: unhandled problem");
}

}  // namespace detail

/// Execute `runs` independent seeded searches (seed = base_seed + index) and
/// assemble the per-run table plus summary. Runs that throw are reported as
/// failed rows; the experiment continues. With threads > 1 the runs execute
/// concurrently; the report is identical either way.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const detail::ProblemSetup setup = detail::make_setup(cfg);

  ExperimentReport report;
  report.config = cfg;
  report.metric_names = setup.metric_names;
  for (std::size_t i = 0; i < setup.space.dimension(); ++i) {
    std::string n = setup.space.name(i);
    if (!setup.space.unit(i).empty()) n += "[" + setup.space.unit(i) + "]";
    report.parameter_names.push_back(n);
  }

  const auto one_run = [&](int index) {
    RunRow row;
    row.index = index + 1;
    row.seed = cfg.base_seed + static_cast<std::uint64_t>(index);
    try {
      SearchConfig sc = cfg.search;
      sc.seed = row.seed;
      const RunResult res =
          run_search(setup.space, setup.schedule, setup.objective, sc);
      row.best_point = res.best.point;
      row.best_value = res.best.value;
      row.evaluations = res.evaluations_used;
      row.terminated_by = res.terminated_by;
      row.non_finite = res.non_finite_evaluations;
      if (setup.metrics && std::isfinite(row.best_value))
        row.metrics = setup.metrics(row.best_point);
      row.success = setup.success(row);
    } catch (const std::exception& e) {
      row.failed = true;
      row.success = false;
      row.note = e.what();
    }
    return row;
  };

  report.rows.resize(static_cast<std::size_t>(cfg.runs));
  if (cfg.threads <= 1) {
    for (int i = 0; i < cfg.runs; ++i) report.rows[static_cast<std::size_t>(i)] = one_run(i);
  } else {
    std::vector<std::future<RunRow>> pending;
    pending.reserve(static_cast<std::size_t>(cfg.runs));
    for (int i = 0; i < cfg.runs; ++i)
      pending.push_back(std::async(std::launch::async, one_run, i));
    for (int i = 0; i < cfg.runs; ++i)
      report.rows[static_cast<std::size_t>(i)] = pending[static_cast<std::size_t>(i)].get();
  }

  ExperimentSummary& s = report.summary;
  long long evals_sum = 0;
  double best_value = std::numeric_limits<double>::infinity();
  s.min_evaluations = std::numeric_limits<long long>::max();
  s.max_evaluations = 0;
  int counted = 0;
  for (const RunRow& row : report.rows) {
    if (row.failed) continue;
    ++counted;
    if (row.success) ++s.success_count;
    evals_sum += row.evaluations;
    s.min_evaluations = std::min(s.min_evaluations, row.evaluations);
    s.max_evaluations = std::max(s.max_evaluations, row.evaluations);
    if (row.best_value < best_value) {
      best_value = row.best_value;
      s.best_run = row.index;
    }
  }
  if (counted > 0) {
    s.mean_evaluations = static_cast<double>(evals_sum) / counted;
  } else {
    s.min_evaluations = 0;
  }
  return report;
}

// ---------------------------------------------------------------------------
// report rendering

namespace detail {

inline void emit_config(std::ostream& os, const ExperimentConfig& c) {
  std::string out;
  const auto line = [&](const std::string& k, const std::string& v) {
    os << "# " << k << " = " << v << "\n";
  };
  const auto num = [&](const std::string& k, double v) {
    out.clear();
    append_value(out, v);
    line(k, out);
  };
  line("problem", to_string(c.problem));
  num("runs", c.runs);
  num("base_seed", static_cast<double>(c.base_seed));
  num("search.n", static_cast<double>(c.search.n));
  num("search.m", static_cast<double>(c.search.m));
  num("search.intense", c.search.intense);
  num("search.diverse", c.search.diverse);
  num("search.end_of_cycle", c.search.end_of_cycle);
  num("search.pattern_factor", c.search.pattern_factor);
  num("search.reduction_factor", c.reduction_factor);
  num("search.max_evaluations", static_cast<double>(c.search.max_evaluations));
  line("objective.variant", c.pump_power ? "pump_power" : "standard");
  if (c.problem == Problem::transmission || c.problem == Problem::two_motor ||
      c.problem == Problem::actuator) {
    num("sim.dt", c.dt);
    if (c.duration) num("sim.duration", *c.duration);
    num("sim.steady_window", c.steady_window_fraction);
    num("circuit.bulk_modulus", c.constants.bulk_modulus);
    num("circuit.line_volume", c.constants.line_volume);
    num("circuit.motor_inertia", c.constants.motor_inertia);
    num("circuit.viscous_damping", c.constants.viscous_damping);
    num("circuit.leakage", c.constants.leakage_coefficient);
    num("circuit.relief_overpressure", c.constants.relief_overpressure);
    num("circuit.pcfv_margin", c.constants.pcfv_compensation_margin);
    num("circuit.payload_mass", c.constants.payload_mass);
    num("circuit.payload_damping", c.constants.payload_damping);
    num("circuit.rod_ratio", c.constants.rod_diameter_ratio);
    num("circuit.valve_rated_dp", c.constants.valve_rated_dp);
    num("circuit.valve_linear_dp", c.constants.valve_linear_dp);
    num("circuit.pump_speed_rpm", c.constants.pump_speed_rpm);
    num("circuit.cracking_pressure", c.constants.cracking_pressure);
  }
  if (c.problem == Problem::transmission)
    num("transmission.target_rpm", c.transmission_target_rpm);
  if (c.problem == Problem::two_motor) {
    num("two_motor.target1", c.two_motor_target1_rpm);
    num("two_motor.target2", c.two_motor_target2_rpm);
    num("two_motor.torque1", c.two_motor_torque1);
    num("two_motor.torque2", c.two_motor_torque2);
  }
  if (c.problem == Problem::actuator) {
    std::string prof;
    for (std::size_t i = 0; i < c.profile.times.size(); ++i) {
      if (i) prof += ", ";
      append_value(prof, c.profile.times[i]);
      prof += ':';
      append_value(prof, c.profile.positions[i]);
    }
    line("actuator.profile", prof);
    num("actuator.sample_interval", c.profile.sample_interval);
  }
}

}  // namespace detail

/// Deterministic CSV rendering: provenance header, one row per run, summary
/// trailer. Byte-identical for identical configs.
inline void write_report_csv(const ExperimentReport& r, std::ostream& os) {
  os << "# tabu_circuits experiment report\n";
  detail::emit_config(os, r.config);
  std::string line = "run,seed";
  for (const auto& n : r.parameter_names) line += "," + n;
  for (const auto& n : r.metric_names) line += "," + n;
  line += ",objective,evaluations,terminated_by,status\n";
  os << line;
  for (const RunRow& row : r.rows) {
    line.clear();
    line += std::to_string(row.index);
    line += ',';
    line += std::to_string(row.seed);
    if (row.failed) {
      for (std::size_t i = 0;
           i < r.parameter_names.size() + r.metric_names.size() + 1; ++i)
        line += ",";
      line += ",0,none,failed:" + row.note;
      line += '\n';
      os << line;
      continue;
    }
    for (double v : row.best_point) {
      line += ',';
      detail::append_value(line, v);
    }
    for (double v : row.metrics) {
      line += ',';
      detail::append_value(line, v);
    }
    line += ',';
    detail::append_value(line, row.best_value);
    line += ',';
    line += std::to_string(row.evaluations);
    line += ',';
    line += row.terminated_by == Termination::step_floor ? "step_floor" : "budget";
    line += ',';
    line += row.success ? "success" : "completed";
    line += '\n';
    os << line;
  }
  std::string v;
  os << "# summary.success_count = " << r.summary.success_count << "\n";
  v.clear();
  detail::append_value(v, r.summary.mean_evaluations);
  os << "# summary.mean_evaluations = " << v << "\n";
  os << "# summary.min_evaluations = " << r.summary.min_evaluations << "\n";
  os << "# summary.max_evaluations = " << r.summary.max_evaluations << "\n";
  os << "# summary.best_run = " << r.summary.best_run << "\n";
}

// ---------------------------------------------------------------------------
// steady-state sizing report

struct SizingInputs {
  double load_torque = 100.0;      // N m
  double target_speed_rpm = 300.0;
  double pump_speed_rpm = 1500.0;
  double assumed_dp_bar = 85.0;
  double eta_mech = 0.95;
  double eta_vol_motor = 0.95;
  double eta_vol_pump = 0.95;
};

/// Render the designer's steady-state calculation, optionally next to an
/// optimizer solution for comparison.
inline void sizing_report(const SizingInputs& in, std::ostream& os,
                          const std::optional<ParameterVector>& optimized = {}) {
  const auto s = hyd::size_transmission(
      in.load_torque, in.target_speed_rpm, in.pump_speed_rpm,
      units::bar_to_pa(in.assumed_dp_bar), in.eta_mech, in.eta_vol_motor,
      in.eta_vol_pump);
  std::string a, b, c;
  detail::append_value(a, s.motor_displacement_cc);
  detail::append_value(b, s.pump_displacement_cc);
  detail::append_value(c, s.flow_lpm);
  os << "steady-state sizing\n";
  os << "  load torque      : " << in.load_torque << " N m\n";
  os << "  target speed     : " << in.target_speed_rpm << " r/min\n";
  os << "  pump speed       : " << in.pump_speed_rpm << " r/min\n";
  os << "  assumed dP       : " << in.assumed_dp_bar << " bar\n";
  os << "  efficiencies     : " << in.eta_mech << " / " << in.eta_vol_motor
     << " / " << in.eta_vol_pump << " (mech, vol motor, vol pump)\n";
  os << "  motor displacement = " << a << " cc/rev\n";
  os << "  pump displacement  = " << b << " cc/rev\n";
  os << "  matched flow       = " << c << " L/min\n";
  if (optimized && optimized->size() >= 2) {
    std::string p, m;
    detail::append_value(p, (*optimized)[0]);
    detail::append_value(m, (*optimized)[1]);
    os << "comparison (optimizer solution)\n";
    os << "  pump displacement  = " << p << " cc/rev\n";
    os << "  motor displacement = " << m << " cc/rev\n";
  }
}

}  // namespace tabu::exp
