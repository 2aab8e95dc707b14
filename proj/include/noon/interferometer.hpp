#pragma once

#include "noon/states.hpp"

#include <span>

namespace noon {

/// Coincidence fringes of one eta state over a uniform phase grid.
/// Row j of `distributions` is P(m | phi_j) with m = photons in output
/// port d (mode b).
struct FringeScan {
  int n = 0;
  double eta = 0.0;
  Eigen::VectorXd phases;          // L points, uniform on [0, 2pi)
  Eigen::MatrixXd distributions;   // L x (N+1)
  Eigen::VectorXd parity;          // <(-1)^m> per phase
  Eigen::VectorXd extremal;        // P(0|phi) + P(N|phi)
};

enum class FringeNormalization { parity, probability };

struct VisibilityReport {
  int frequency = 0;                  // harmonic examined, typically N
  double component_magnitude = 0.0;   // 2 |c_f|
  double mean_level = 0.0;            // c_0
  double visibility = 0.0;
  double sensitivity = 0.0;           // visibility * frequency
  FringeNormalization normalization = FringeNormalization::parity;
  double minmax_contrast = 0.0;       // (max-min)/(max+min), cross-reference only
};

/// Full Mach-Zehnder pass: 50/50 splitter, phase phi on arm b, 50/50
/// splitter. Returns |amplitude|^2 per output index m.
Eigen::VectorXd mz_output_distribution(const TwoModeFockState& input, double phi);

/// Second half only: phase phi then the output splitter, for states
/// prepared directly in the interferometer basis.
Eigen::VectorXd inside_output_distribution(const TwoModeFockState& inside, double phi);

/// Scans eta_state(N, eta) over L uniform phases. Requires L >= 4N+1 so
/// the harmonic-N component is comfortably below Nyquist.
FringeScan fringe_scan(int n, double eta, int samples);

/// Harmonic-f DFT component of a signal sampled on the uniform grid
/// phi_j = 2 pi j / L, turned into a visibility figure. Probability
/// signals are normalized by their mean; parity signals swing over
/// [-1, 1] and are taken as-is.
VisibilityReport fourier_visibility(std::span<const double> signal, int frequency,
                                    FringeNormalization normalization);

/// 1/(delta phi) = V N.
double phase_sensitivity(const VisibilityReport& v);

}  // namespace noon
