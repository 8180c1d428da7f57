#pragma once

#include <cmath>
#include <stdexcept>

#include "tabu/units.hpp"

namespace tabu::hyd {

/// Shared physical constants of the simplified lumped-parameter circuit
/// models. All values are plain SI and overridable from experiment configs.
struct CircuitConstants {
  double bulk_modulus = 1.4e9;         // Pa
  double line_volume = 2e-3;           // m^3 per capacitive node
  double motor_inertia = 0.5;          // kg m^2
  double viscous_damping = 0.05;       // N m s / rad
  double leakage_coefficient = 1e-11;  // m^3 / (s Pa), lumped volumetric loss
  double relief_valve_gradient = 0.0;  // m^3 / (s Pa); 0 = derive from flow rating
  double relief_overpressure = 20e5;   // Pa above cracking at rated relief flow
  double pcfv_compensation_margin = 5e5;  // Pa needed for full set flow
  double payload_mass = 250.0;         // kg
  double payload_damping = 2000.0;     // N s / m
  double rod_diameter_ratio = 0.6;
  double valve_rated_dp = 35e5;        // Pa at nominal valve flow
  double valve_linear_dp = 2e5;        // Pa; sqrt law linearized below this
  double pump_speed_rpm = 1500.0;
  double cracking_pressure = 100e5;    // Pa
  double torque_reference_speed = 0.5; // rad/s; load torque ~ T*tanh(w/ref)

  /// Relief gradient passing `max_flow` at cracking + relief_overpressure.
  double relief_gradient_for(double max_flow_m3s) const {
    if (relief_valve_gradient > 0.0) return relief_valve_gradient;
    return max_flow_m3s / relief_overpressure;
  }
};

/// Motor torque from displacement (m^3/rad), pressure drop (Pa) and
/// mechanical efficiency.
inline double motor_torque(double displacement_m3_rad, double dp_pa,
                           double eta_mech) {
  if (displacement_m3_rad < 0.0)
    throw std::invalid_argument("motor_torque: negative displacement");
  return displacement_m3_rad * dp_pa * eta_mech;
}

/// Flow demanded by a motor running at `speed_rad_s` (m^3/s).
inline double motor_flow(double displacement_m3_rad, double speed_rad_s,
                         double eta_vol) {
  if (eta_vol <= 0.0) throw std::invalid_argument("motor_flow: eta_vol must be > 0");
  return displacement_m3_rad * speed_rad_s / eta_vol;
}

/// Flow delivered by a pump (m^3/s).
inline double pump_flow(double displacement_m3_rad, double speed_rad_s,
                        double eta_vol) {
  return displacement_m3_rad * speed_rad_s * eta_vol;
}

/// Static relief valve overflow law (m^3/s).
inline double relief_valve_flow(double pressure_pa, double cracking_pa,
                                double gradient) {
  if (gradient <= 0.0)
    throw std::invalid_argument("relief_valve_flow: gradient must be > 0");
  return std::max(0.0, gradient * (pressure_pa - cracking_pa));
}

struct TransmissionSizing {
  double motor_displacement_cc;  // cc/rev
  double pump_displacement_cc;   // cc/rev
  double flow_lpm;               // matched steady flow, L/min
};

/// Steady-state designer sizing: invert the torque law for the motor
/// displacement, take the motor flow at the target speed and invert the
/// pump flow law for the pump displacement.
inline TransmissionSizing size_transmission(double load_torque_nm,
                                            double target_speed_rpm,
                                            double pump_speed_rpm,
                                            double assumed_dp_pa,
                                            double eta_mech, double eta_vol_motor,
                                            double eta_vol_pump) {
  if (load_torque_nm <= 0.0 || assumed_dp_pa <= 0.0)
    throw std::invalid_argument("size_transmission: torque and dP must be > 0");
  if (eta_mech <= 0.0 || eta_vol_motor <= 0.0 || eta_vol_pump <= 0.0)
    throw std::invalid_argument("size_transmission: efficiencies must be > 0");
  const double d_motor = load_torque_nm / (assumed_dp_pa * eta_mech);
  const double q = motor_flow(d_motor, units::rpm_to_rad_s(target_speed_rpm),
                              eta_vol_motor);
  const double d_pump = q / (units::rpm_to_rad_s(pump_speed_rpm) * eta_vol_pump);
  return TransmissionSizing{units::m3_per_rad_to_cc_per_rev(d_motor),
                            units::m3_per_rad_to_cc_per_rev(d_pump),
                            units::m3_s_to_lpm(q)};
}

/// Load torque that opposes motion but vanishes smoothly at rest; at
/// operating speeds tanh saturates and the magnitude is the plain constant.
inline double load_torque(double torque_nm, double speed_rad_s,
                          double reference_speed) {
  const double z = speed_rad_s / reference_speed;
  if (z > 19.0) return torque_nm;   // tanh saturated to 1.0 in double
  if (z < -19.0) return -torque_nm;
  return torque_nm * std::tanh(z);
}

/// Signed proportional-valve port flow, sqrt of the pressure drop with a
/// linear region near zero to keep the slope bounded.
inline double valve_port_flow(double opening, double nominal_flow_m3s,
                              double dp_pa, double rated_dp_pa,
                              double linear_dp_pa) {
  const double mag = std::abs(dp_pa);
  double g;
  if (mag <= linear_dp_pa) {
    g = dp_pa / std::sqrt(linear_dp_pa * rated_dp_pa);
  } else {
    g = std::copysign(std::sqrt(mag / rated_dp_pa), dp_pa);
  }
  return opening * nominal_flow_m3s * g;
}

}  // namespace tabu::hyd
