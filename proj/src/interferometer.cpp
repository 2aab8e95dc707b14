#include "noon/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace noon {

namespace {

Eigen::VectorXd probabilities(const TwoModeFockState& s) {
  return s.amplitudes.cwiseAbs2();
}

}  // namespace

Eigen::VectorXd mz_output_distribution(const TwoModeFockState& input, double phi) {
  if (input.basis != Basis::input)
    throw std::invalid_argument("mz_output_distribution: state must be in the input basis");
  const int n = input.total_n;
  const TwoModeFockState inside =
      apply_block(beam_splitter_block(n, std::numbers::pi / 4.0), input);
  return inside_output_distribution(inside, phi);
}

Eigen::VectorXd inside_output_distribution(const TwoModeFockState& inside, double phi) {
  if (inside.basis != Basis::interferometer)
    throw std::invalid_argument("inside_output_distribution: state must be in the interferometer basis");
  const int n = inside.total_n;
  const TwoModeFockState shifted = apply_block(phase_shift_block(n, phi, Mode::b), inside);
  const TwoModeFockState out =
      apply_block(beam_splitter_block(n, std::numbers::pi / 4.0), shifted);
  return probabilities(out);
}

FringeScan fringe_scan(int n, double eta, int samples) {
  if (n < 1) throw std::invalid_argument("fringe_scan: N must be >= 1");
  if (samples < 4 * n + 1)
    throw std::invalid_argument("fringe_scan: samples must be >= 4N+1 = " +
                                std::to_string(4 * n + 1));

  FringeScan scan;
  scan.n = n;
  scan.eta = eta;
  scan.phases.resize(samples);
  scan.distributions.resize(samples, n + 1);
  scan.parity.resize(samples);
  scan.extremal.resize(samples);

  const TwoModeFockState inside =
      apply_block(beam_splitter_block(n, std::numbers::pi / 4.0), eta_state({n, eta}));
  for (int j = 0; j < samples; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / samples;
    scan.phases[j] = phi;
    const Eigen::VectorXd p = inside_output_distribution(inside, phi);
    scan.distributions.row(j) = p.transpose();
    double parity = 0.0;
    for (int m = 0; m <= n; ++m) parity += (m % 2 == 0 ? p[m] : -p[m]);
    scan.parity[j] = parity;
    scan.extremal[j] = p[0] + p[n];
  }
  return scan;
}

VisibilityReport fourier_visibility(std::span<const double> signal, int frequency,
                                    FringeNormalization normalization) {
  const auto length = static_cast<int>(signal.size());
  if (frequency < 0) throw std::invalid_argument("fourier_visibility: negative harmonic");
  if (2 * frequency >= length)
    throw std::invalid_argument("fourier_visibility: harmonic at or above Nyquist for this grid");

  Complex cf = 0.0;
  double mean = 0.0;
  double lo = signal[0], hi = signal[0];
  for (int j = 0; j < length; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / length;
    cf += signal[j] * std::polar(1.0, -frequency * phi);
    mean += signal[j];
    lo = std::min(lo, signal[j]);
    hi = std::max(hi, signal[j]);
  }
  cf /= double(length);
  mean /= double(length);

  VisibilityReport report;
  report.frequency = frequency;
  report.component_magnitude = 2.0 * std::abs(cf);
  report.mean_level = mean;
  report.normalization = normalization;
  if (normalization == FringeNormalization::probability) {
    report.visibility = mean == 0.0 ? 0.0 : report.component_magnitude / std::abs(mean);
  } else {
    report.visibility = report.component_magnitude;
  }
  report.sensitivity = report.visibility * frequency;
  report.minmax_contrast = (hi + lo) == 0.0 ? 0.0 : (hi - lo) / (hi + lo);
  return report;
}

double phase_sensitivity(const VisibilityReport& v) {
  if (v.frequency < 1) throw std::invalid_argument("phase_sensitivity: frequency must be >= 1");
  return v.visibility * v.frequency;
}

}  // namespace noon
