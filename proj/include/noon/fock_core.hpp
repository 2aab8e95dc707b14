#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace noon {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Which physical mode pair the amplitude indices refer to.
enum class Basis { input, interferometer, output };

enum class BlockKind { beam_splitter, phase_shift };

enum class Ladder { a, a_dag, b, b_dag };

enum class Mode { a, b };

/// State of exactly `total_n` photons shared between two modes.
/// Index m holds the amplitude of |N-m; m>, i.e. m photons in mode b.
struct TwoModeFockState {
  int total_n = 0;
  Vector amplitudes;
  Basis basis = Basis::input;
  /// Set when an annihilation operator hit the vacuum (or a projection
  /// came out empty); the amplitudes are all zero in that case.
  bool zero_flagged = false;

  TwoModeFockState() : amplitudes(Vector::Zero(1)) {}
  TwoModeFockState(int n, Basis b_) : total_n(n), amplitudes(Vector::Zero(n + 1)), basis(b_) {
    if (n < 0) throw std::invalid_argument("TwoModeFockState: total_n must be >= 0");
  }

  int dim() const { return total_n + 1; }
  double norm() const { return amplitudes.norm(); }
  void normalize();

  /// Single basis ket |N-m; m>.
  static TwoModeFockState basis_ket(int total_n, int m, Basis b = Basis::input);
};

/// Dense unitary acting on one fixed-total-N subspace.
struct UnitaryBlock {
  int total_n = 0;
  Matrix matrix;
  BlockKind kind = BlockKind::beam_splitter;
};

/// Read-only table of ln(n!), built once at construction.
class LogCombinatorics {
 public:
  explicit LogCombinatorics(int max_photon = 4096);

  double log_factorial(int n) const {
    if (n < 0 || n > max_photon()) throw std::out_of_range("log_factorial: n out of cached range");
    return table_[static_cast<std::size_t>(n)];
  }

  double log_binomial(int n, int k) const {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
  }

  int max_photon() const { return static_cast<int>(table_.size()) - 1; }

 private:
  std::vector<double> table_;
};

/// ln(n!) from a process-wide cache (covers n <= 32768).
double log_factorial(int n);
double log_binomial(int n, int k);

/// Beam splitter lifted to the fixed-N subspace.
///
/// Mode convention (columns are images of basis kets):
///   a^dag -> cos(theta) a^dag - e^{-i phase} sin(theta) b^dag
///   b^dag -> e^{i phase} sin(theta) a^dag + cos(theta) b^dag
/// so for N=1, theta=pi/4, phase=0 the block is (1/sqrt2) [[1, 1], [-1, 1]]
/// on {|1;0>, |0;1>}. Matrix elements are summed in log-magnitude form.
UnitaryBlock beam_splitter_block(int total_n, double theta, double convention_phase = 0.0);

/// Diagonal phase shifter: entry m is e^{i phi m} for mode b,
/// e^{i phi (N-m)} for mode a.
UnitaryBlock phase_shift_block(int total_n, double phi, Mode mode = Mode::b);

/// U * s. Beam splitters advance the basis label input -> interferometer
/// -> output; phase shifts keep it.
TwoModeFockState apply_block(const UnitaryBlock& u, const TwoModeFockState& s);

/// <s1|s2>; requires matching photon number and basis label.
Complex inner_product(const TwoModeFockState& s1, const TwoModeFockState& s2);

/// Unnormalized image under a ladder operator, living in the total-(N+-1)
/// subspace. Annihilating the vacuum returns a zero-flagged N=0 state.
TwoModeFockState ladder_map(const TwoModeFockState& s, Ladder op);

}  // namespace noon
