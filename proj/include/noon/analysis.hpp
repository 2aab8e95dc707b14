#pragma once

#include "noon/states.hpp"

#include <vector>

namespace noon {

struct OptimizationResult {
  int n = 0;
  double eta_star = 0.0;
  double fidelity_star = 0.0;
  long evaluations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct OverlapCurve {
  double eta = 0.0;
  std::vector<std::pair<int, double>> points;  // (N, overlap), N increasing
};

struct CoherenceReport {
  Complex psi_n0;               // interferometer-basis amplitude on |N;0>
  Complex psi_0n;               // interferometer-basis amplitude on |0;N>
  double coherence = 0.0;       // |psi_n0 * conj(psi_0n)|
  double half_fidelity = 0.0;   // fidelity(N, eta) / 2
  double noon_minus_overlap = 0.0;  // |<opposite-phase NOON | psi>|^2
};

/// F = |<NOON | eta>|^2 in the input basis.
double fidelity(int n, double eta);

/// Maximize fidelity(N, .) over [lo, hi]: coarse 0.01 grid, then
/// golden-section refinement until the bracket is narrower than tol.
OptimizationResult optimize_eta(int n, double lo = 1.0, double hi = 5.0, double tol = 1e-6);

/// fidelity(N, eta) over N in [n_min, n_max].
OverlapCurve overlap_curve(double eta, int n_min, int n_max);

/// Sends the eta state through the 50/50 input beam splitter and reports
/// the NOON-subspace coherence, half the fidelity, and the overlap with
/// the opposite-phase NOON state (which must vanish). "Opposite phase"
/// is measured against the NOON state the splitter produces from the
/// input-basis NOON expansion, so it tracks the N-parity of the
/// convention automatically.
CoherenceReport coherence_check(int n, double eta);

/// Relative residual of the defining relation
///   a^dag b |psi> = (eta/N) (a^dag a) b^dag a |psi>,
/// evaluated through ladder-operator chains. Zero left-hand side gives 0.
double defining_relation_residual(int n, double eta);

/// Same residual for an arbitrary input-basis state (sensitivity probes).
double defining_relation_residual(const TwoModeFockState& psi, double eta);

}  // namespace noon
