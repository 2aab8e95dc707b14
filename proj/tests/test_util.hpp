#pragma once

#include "noon/fock_core.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace noon::testing {

/// Largest elementwise deviation between a and b after rotating a by the
/// global phase that best matches b at a's largest amplitude.
inline double max_diff_up_to_phase(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  Eigen::Index pivot = 0;
  a.cwiseAbs().maxCoeff(&pivot);
  if (std::abs(a[pivot]) == 0.0) return (a - b).cwiseAbs().maxCoeff();
  Complex phase = b[pivot] / a[pivot];
  const double mag = std::abs(phase);
  phase = (mag == 0.0) ? Complex(1.0) : phase / mag;
  return (a * phase - b).cwiseAbs().maxCoeff();
}

inline TwoModeFockState random_state(int n, std::mt19937& rng, Basis basis = Basis::input) {
  std::normal_distribution<double> gauss;
  TwoModeFockState s(n, basis);
  for (int m = 0; m <= n; ++m) s.amplitudes[m] = Complex(gauss(rng), gauss(rng));
  s.normalize();
  return s;
}

}  // namespace noon::testing
