#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "dwcat/linalg.hpp"
#include "dwcat/state.hpp"

namespace dwcat::test {

inline constexpr double kPi = std::numbers::pi;

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Random normalized state with Gaussian real and imaginary parts.
inline StateVector random_state(int atoms, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(static_cast<std::size_t>(atoms) + 1);
  for (auto& a : amps) a = {g(rng), g(rng)};
  return StateVector(TwoModeBasis(atoms), std::move(amps));
}

// |<a|b>| == 1, i.e. equal up to a global phase.
inline double phase_free_distance(const StateVector& a, const StateVector& b) {
  return std::abs(1.0 - std::abs(a.overlap(b)));
}

}  // namespace dwcat::test
