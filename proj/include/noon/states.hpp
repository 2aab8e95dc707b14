#pragma once

#include "noon/fock_core.hpp"

namespace noon {

/// (N, eta) pair identifying one interferometric state.
struct EtaParams {
  int n = 0;
  double eta = 0.0;
};

/// Raw field parameters for the coherent (x) squeezed-vacuum input.
struct InputFieldParams {
  Complex alpha;
  Complex gamma;          // |gamma| < 1
  int truncation = 64;    // max photons kept per mode
};

struct RecurrenceRatio {
  double exact = 0.0;
  double approx = 0.0;  // eta (1 - 2k/N), the high-N limit
};

/// Exact N-photon interferometric state for mixing parameter eta,
/// built from the amplitude ratio
///   c_{k+1}/c_k = (eta/2N) sqrt((2k+1)(2k+2)) sqrt((N-2k)(N-2k-1)) / (k+1)
/// in log space, then normalized. Input basis; odd indices exactly zero.
TwoModeFockState eta_state(const EtaParams& p);

/// NOON state expanded in the input photon-number basis:
/// sqrt(binom(N, 2k)) 2^{-(N-1)/2} at index 2k.
TwoModeFockState noon_input_basis(int n);

/// (|N;0> + e^{i theta} |0;N>)/sqrt(2) in the interferometer basis.
TwoModeFockState noon_interferometer(int n, double relative_phase = 0.0);

/// Gaussian envelope exp(-(2k - N/2)^2 / (2N)) at even indices, the
/// high-N approximant of the eta=2 state. Even N only.
TwoModeFockState gaussian_eta_approx(int n);

/// Gaussian envelope exp(-(2k - N/2)^2 / N), the high-N NOON approximant.
/// Even N only.
TwoModeFockState gaussian_noon_approx(int n);

/// Independent construction of the N-photon component: truncated
/// coherent |alpha> tensor squeezed vacuum |gamma>, projected onto total
/// photon number N and normalized. Oracle for eta_state with
/// eta = N gamma / alpha^2.
TwoModeFockState project_total_n(const InputFieldParams& f, int n);

/// Exact amplitude ratio c_{k+1}/c_k and its high-N approximation.
RecurrenceRatio eta_recurrence_ratio(int n, double eta, int k);

}  // namespace noon
