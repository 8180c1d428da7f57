#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "tabu/hydraulics.hpp"
#include "tabu/units.hpp"

using namespace tabu;
using namespace tabu::hyd;

TEST_CASE("motor torque law") {
  // 78 cc/rev at 85 bar and 95% mechanical efficiency carries ~100 N m
  const double d = units::cc_per_rev_to_m3_per_rad(78.0);
  CHECK(motor_torque(d, units::bar_to_pa(85.0), 0.95) ==
        Catch::Approx(100.0).margin(0.3));
  CHECK(motor_torque(d, 0.0, 0.95) == 0.0);

  // independent SI arithmetic oracle for an off-reference case
  const double oracle = (85.0e-6 / (2.0 * std::numbers::pi)) * 85.0e5 * 0.95;
  CHECK(motor_torque(units::cc_per_rev_to_m3_per_rad(85.0),
                     units::bar_to_pa(85.0), 0.95) ==
        Catch::Approx(oracle).epsilon(1e-12));
  CHECK_THROWS_AS(motor_torque(-1e-6, 1e5, 0.9), std::invalid_argument);
}

TEST_CASE("motor flow law") {
  const double d = units::cc_per_rev_to_m3_per_rad(78.0);
  // 78 cc/rev * 300 r/min / 0.95 = 24.63 L/min
  CHECK(units::m3_s_to_lpm(motor_flow(d, units::rpm_to_rad_s(300.0), 0.95)) ==
        Catch::Approx(78.0 * 300.0 / 0.95 / 1000.0).epsilon(1e-12));
  CHECK(motor_flow(d, 0.0, 0.95) == 0.0);
  CHECK(units::m3_s_to_lpm(motor_flow(units::cc_per_rev_to_m3_per_rad(100.0),
                                      units::rpm_to_rad_s(60.0), 1.0)) ==
        Catch::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(motor_flow(d, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("pump flow law") {
  const double d = units::cc_per_rev_to_m3_per_rad(17.3);
  CHECK(units::m3_s_to_lpm(pump_flow(d, units::rpm_to_rad_s(1500.0), 0.95)) ==
        Catch::Approx(17.3 * 1500.0 * 0.95 / 1000.0).epsilon(1e-12));
  CHECK(pump_flow(0.0, 157.0, 0.95) == 0.0);
  CHECK(units::m3_s_to_lpm(pump_flow(units::cc_per_rev_to_m3_per_rad(10.0),
                                     units::rpm_to_rad_s(1000.0), 1.0)) ==
        Catch::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("steady-state transmission sizing reproduces the designer case") {
  const auto s = size_transmission(100.0, 300.0, 1500.0, units::bar_to_pa(85.0),
                                   0.95, 0.95, 0.95);
  CHECK(s.motor_displacement_cc > 77.5);
  CHECK(s.motor_displacement_cc < 78.5);
  CHECK(s.pump_displacement_cc > 17.2);
  CHECK(s.pump_displacement_cc < 17.4);
}

TEST_CASE("sizing with unit efficiencies is closed form") {
  const auto s = size_transmission(100.0, 300.0, 1500.0, units::bar_to_pa(100.0),
                                   1.0, 1.0, 1.0);
  // D_m = T/dP = 1e-5 m^3/rad = 2*pi*10 cc/rev
  CHECK(s.motor_displacement_cc ==
        Catch::Approx(20.0 * std::numbers::pi).epsilon(1e-12));

  // equal pump and motor speeds balance to equal displacements
  const auto eq = size_transmission(100.0, 300.0, 300.0, units::bar_to_pa(100.0),
                                    1.0, 1.0, 1.0);
  CHECK(eq.pump_displacement_cc ==
        Catch::Approx(eq.motor_displacement_cc).epsilon(1e-12));
}

TEST_CASE("sizing round-trips through the component laws") {
  const double t_load = 100.0, dp = units::bar_to_pa(85.0);
  const auto s = size_transmission(t_load, 300.0, 1500.0, dp, 0.95, 0.95, 0.95);
  const double d_m = units::cc_per_rev_to_m3_per_rad(s.motor_displacement_cc);
  const double d_p = units::cc_per_rev_to_m3_per_rad(s.pump_displacement_cc);
  CHECK(motor_torque(d_m, dp, 0.95) == Catch::Approx(t_load).epsilon(1e-12));
  const double q_m = motor_flow(d_m, units::rpm_to_rad_s(300.0), 0.95);
  const double q_p = pump_flow(d_p, units::rpm_to_rad_s(1500.0), 0.95);
  CHECK(q_p == Catch::Approx(q_m).epsilon(1e-12));
}

TEST_CASE("relief valve overflow law") {
  const double crack = units::bar_to_pa(100.0);
  CHECK(relief_valve_flow(units::bar_to_pa(50.0), crack, 1e-8) == 0.0);
  CHECK(relief_valve_flow(crack, crack, 1e-8) == 0.0);
  // gradient calibration identity: sized for full pump flow at +10 bar
  const double q_full = units::lpm_to_m3_s(150.0);
  const double grad = q_full / units::bar_to_pa(10.0);
  CHECK(relief_valve_flow(crack + units::bar_to_pa(10.0), crack, grad) ==
        Catch::Approx(q_full).epsilon(1e-12));
  CHECK_THROWS_AS(relief_valve_flow(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("load torque saturates and opposes motion") {
  CHECK(load_torque(100.0, 31.4, 0.5) == 100.0);
  CHECK(load_torque(100.0, -31.4, 0.5) == -100.0);
  CHECK(load_torque(100.0, 0.0, 0.5) == 0.0);
  CHECK(load_torque(100.0, 0.25, 0.5) ==
        Catch::Approx(100.0 * std::tanh(0.5)));
}

TEST_CASE("valve port flow is continuous across the linear region") {
  const double qn = units::lpm_to_m3_s(75.0);
  const double rated = units::bar_to_pa(35.0), lin = 2e5;
  const double below = valve_port_flow(1.0, qn, lin * (1.0 - 1e-9), rated, lin);
  const double above = valve_port_flow(1.0, qn, lin * (1.0 + 1e-9), rated, lin);
  CHECK(below == Catch::Approx(above).epsilon(1e-6));
  // odd symmetry and rated-point magnitude
  CHECK(valve_port_flow(1.0, qn, -3e5, rated, lin) ==
        Catch::Approx(-valve_port_flow(1.0, qn, 3e5, rated, lin)));
  CHECK(valve_port_flow(1.0, qn, rated, rated, lin) == Catch::Approx(qn));
  CHECK(valve_port_flow(0.0, qn, 3e5, rated, lin) == 0.0);
}
