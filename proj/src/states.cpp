#include "noon/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace noon {

namespace {

/// Exponentiate log-magnitudes (shifted by their maximum) into the even
/// slots of a fresh input-basis state and normalize.
TwoModeFockState from_even_log_amplitudes(int n, const std::vector<double>& log_mag,
                                          const std::vector<double>& arg) {
  TwoModeFockState s(n, Basis::input);
  double max_lg = -std::numeric_limits<double>::infinity();
  for (double lg : log_mag) max_lg = std::max(max_lg, lg);
  if (!std::isfinite(max_lg)) {
    s.zero_flagged = true;
    return s;
  }
  for (std::size_t k = 0; k < log_mag.size(); ++k) {
    if (!std::isfinite(log_mag[k])) continue;
    s.amplitudes[static_cast<int>(2 * k)] = std::polar(std::exp(log_mag[k] - max_lg), arg[k]);
  }
  s.normalize();
  return s;
}

}  // namespace

RecurrenceRatio eta_recurrence_ratio(int n, double eta, int k) {
  if (k < 0 || 2 * (k + 1) > n) throw std::out_of_range("eta_recurrence_ratio: k out of range");
  RecurrenceRatio r;
  r.exact = (eta / (2.0 * n)) * std::sqrt(double(2 * k + 1) * double(2 * k + 2)) *
            std::sqrt(double(n - 2 * k) * double(n - 2 * k - 1)) / double(k + 1);
  r.approx = eta * (1.0 - 2.0 * double(k) / double(n));
  return r;
}

TwoModeFockState eta_state(const EtaParams& p) {
  if (p.n < 0) throw std::invalid_argument("eta_state: N must be >= 0");
  if (p.eta < 0.0) throw std::invalid_argument("eta_state: eta must be >= 0");
  const int kmax = p.n / 2;
  std::vector<double> log_mag(static_cast<std::size_t>(kmax) + 1,
                              -std::numeric_limits<double>::infinity());
  std::vector<double> arg(static_cast<std::size_t>(kmax) + 1, 0.0);
  log_mag[0] = 0.0;
  if (p.eta > 0.0) {
    for (int k = 0; k < kmax; ++k)
      log_mag[static_cast<std::size_t>(k) + 1] =
          log_mag[static_cast<std::size_t>(k)] + std::log(eta_recurrence_ratio(p.n, p.eta, k).exact);
  }
  return from_even_log_amplitudes(p.n, log_mag, arg);
}

TwoModeFockState noon_input_basis(int n) {
  if (n < 1) throw std::invalid_argument("noon_input_basis: N must be >= 1");
  const int kmax = n / 2;
  std::vector<double> log_mag(static_cast<std::size_t>(kmax) + 1);
  std::vector<double> arg(static_cast<std::size_t>(kmax) + 1, 0.0);
  for (int k = 0; k <= kmax; ++k)
    log_mag[static_cast<std::size_t>(k)] =
        0.5 * log_binomial(n, 2 * k) - 0.5 * (n - 1) * std::numbers::ln2;
  return from_even_log_amplitudes(n, log_mag, arg);
}

TwoModeFockState noon_interferometer(int n, double relative_phase) {
  if (n < 1) throw std::invalid_argument("noon_interferometer: N must be >= 1");
  TwoModeFockState s(n, Basis::interferometer);
  s.amplitudes[0] = 1.0 / std::numbers::sqrt2;
  s.amplitudes[n] = std::polar(1.0 / std::numbers::sqrt2, relative_phase);
  return s;
}

namespace {

TwoModeFockState gaussian_envelope(int n, double variance_denominator) {
  if (n < 2) throw std::invalid_argument("gaussian approximant: N must be >= 2");
  if (n % 2 != 0) throw std::invalid_argument("gaussian approximant: N must be even");
  const int kmax = n / 2;
  std::vector<double> log_mag(static_cast<std::size_t>(kmax) + 1);
  std::vector<double> arg(static_cast<std::size_t>(kmax) + 1, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    const double d = 2.0 * k - 0.5 * n;
    log_mag[static_cast<std::size_t>(k)] = -d * d / variance_denominator;
  }
  return from_even_log_amplitudes(n, log_mag, arg);
}

}  // namespace

TwoModeFockState gaussian_eta_approx(int n) { return gaussian_envelope(n, 2.0 * n); }

TwoModeFockState gaussian_noon_approx(int n) { return gaussian_envelope(n, 1.0 * n); }

TwoModeFockState project_total_n(const InputFieldParams& f, int n) {
  if (n < 0) throw std::invalid_argument("project_total_n: N must be >= 0");
  if (std::abs(f.gamma) >= 1.0)
    throw std::invalid_argument("project_total_n: |gamma| must be < 1 for a normalizable squeezed vacuum");
  if (f.truncation < n)
    throw std::invalid_argument("project_total_n: truncation below target photon number");

  const double log_abs_alpha = std::log(std::abs(f.alpha));
  const double log_abs_gamma = std::log(std::abs(f.gamma));
  const double arg_alpha = std::arg(f.alpha);
  const double arg_gamma = std::arg(f.gamma);

  // Unnormalized amplitudes: coherent a_n = alpha^n / sqrt(n!), squeezed
  // s_{2k} = gamma^k sqrt((2k)!) / (2^k k!). Projection onto total N keeps
  // the products a_{N-2k} s_{2k}.
  const int kmax = n / 2;
  std::vector<double> log_mag(static_cast<std::size_t>(kmax) + 1,
                              -std::numeric_limits<double>::infinity());
  std::vector<double> arg(static_cast<std::size_t>(kmax) + 1, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    const int nc = n - 2 * k;  // photons from the coherent mode
    if (nc > 0 && f.alpha == Complex(0.0)) continue;
    if (k > 0 && f.gamma == Complex(0.0)) continue;
    double lg = -0.5 * log_factorial(nc);
    if (nc > 0) lg += nc * log_abs_alpha;
    if (k > 0)
      lg += k * log_abs_gamma + 0.5 * log_factorial(2 * k) - k * std::numbers::ln2 - log_factorial(k);
    log_mag[static_cast<std::size_t>(k)] = lg;
    arg[static_cast<std::size_t>(k)] = arg_alpha * nc + arg_gamma * k;
  }
  return from_even_log_amplitudes(n, log_mag, arg);
}

}  // namespace noon
