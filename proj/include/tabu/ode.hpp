#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace tabu {

/// Classical fixed-step 4th-order Runge-Kutta update for small state
/// vectors. `deriv(t, state)` returns d(state)/dt. Returns false when any
/// stage produced a non-finite component, leaving `state` untouched so the
/// caller can flag the trace as diverged.
template <std::size_t N, class Deriv>
bool rk4_step(std::array<double, N>& state, Deriv&& deriv, double t, double dt) {
  using State = std::array<double, N>;
  const State k1 = deriv(t, state);
  State s;

  for (std::size_t i = 0; i < N; ++i) s[i] = state[i] + 0.5 * dt * k1[i];
  const State k2 = deriv(t + 0.5 * dt, s);

  for (std::size_t i = 0; i < N; ++i) s[i] = state[i] + 0.5 * dt * k2[i];
  const State k3 = deriv(t + 0.5 * dt, s);

  for (std::size_t i = 0; i < N; ++i) s[i] = state[i] + dt * k3[i];
  const State k4 = deriv(t + dt, s);

  State next;
  bool finite = true;
  for (std::size_t i = 0; i < N; ++i) {
    next[i] = state[i] +
              dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    finite = finite && std::isfinite(next[i]);
  }
  if (!finite) return false;
  state = next;
  return true;
}

}  // namespace tabu
