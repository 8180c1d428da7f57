#pragma once

#include <numbers>

namespace tabu::units {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// displacement
inline constexpr double cc_per_rev_to_m3_per_rad(double d) {
  return d * 1e-6 / two_pi;
}
inline constexpr double m3_per_rad_to_cc_per_rev(double d) {
  return d * 1e6 * two_pi;
}

// rotational speed
inline constexpr double rpm_to_rad_s(double w) { return w * two_pi / 60.0; }
inline constexpr double rad_s_to_rpm(double w) { return w * 60.0 / two_pi; }

// pressure
inline constexpr double bar_to_pa(double p) { return p * 1e5; }
inline constexpr double pa_to_bar(double p) { return p * 1e-5; }

// flow
inline constexpr double lpm_to_m3_s(double q) { return q * 1e-3 / 60.0; }
inline constexpr double m3_s_to_lpm(double q) { return q * 60.0 * 1e3; }

// length
inline constexpr double mm_to_m(double x) { return x * 1e-3; }
inline constexpr double m_to_mm(double x) { return x * 1e3; }

}  // namespace tabu::units
