#include "noon/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace noon {

void TwoModeFockState::normalize() {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::domain_error("normalize: zero-norm state");
  amplitudes /= n;
}

TwoModeFockState TwoModeFockState::basis_ket(int total_n, int m, Basis b) {
  if (m < 0 || m > total_n) throw std::out_of_range("basis_ket: m out of range");
  TwoModeFockState s(total_n, b);
  s.amplitudes[m] = 1.0;
  return s;
}

LogCombinatorics::LogCombinatorics(int max_photon) {
  if (max_photon < 0) throw std::invalid_argument("LogCombinatorics: negative maximum");
  table_.resize(static_cast<std::size_t>(max_photon) + 1);
  long double acc = 0.0L;
  table_[0] = 0.0;
  for (int n = 1; n <= max_photon; ++n) {
    acc += std::log(static_cast<long double>(n));
    table_[static_cast<std::size_t>(n)] = static_cast<double>(acc);
  }
}

namespace {
const LogCombinatorics& shared_table() {
  static const LogCombinatorics table(32768);
  return table;
}
}  // namespace

double log_factorial(int n) { return shared_table().log_factorial(n); }
double log_binomial(int n, int k) { return shared_table().log_binomial(n, k); }

UnitaryBlock beam_splitter_block(int total_n, double theta, double convention_phase) {
  if (total_n < 0) throw std::invalid_argument("beam_splitter_block: N must be >= 0");
  const int dim = total_n + 1;
  const Complex p = std::polar(1.0, convention_phase);

  UnitaryBlock block;
  block.total_n = total_n;
  block.kind = BlockKind::beam_splitter;

  // The lifted splitter is exp(theta (p a^dag b - conj(p) a b^dag)): the
  // mode images a^dag -> cos a^dag - conj(p) sin b^dag and
  // b^dag -> p sin a^dag + cos b^dag follow from the commutators
  // [a b^dag, a^dag] = b^dag and [a^dag b, b^dag] = a^dag. The generator is
  // tridiagonal and anti-Hermitian on the fixed-N subspace, so the block is
  // computed through a Hermitian eigendecomposition; that keeps it unitary
  // to machine precision at any N, where the closed-form multinomial sum
  // cancels catastrophically for N beyond ~20.
  Matrix hermitian_gen = Matrix::Zero(dim, dim);  // i * generator
  for (int m = 0; m < total_n; ++m) {
    const double coupling = std::sqrt(double(total_n - m) * double(m + 1));
    hermitian_gen(m + 1, m) = Complex(0.0, -1.0) * std::conj(p) * coupling;  // a b^dag
    hermitian_gen(m, m + 1) = Complex(0.0, 1.0) * p * coupling;              // a^dag b
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_gen);
  const Vector evolution =
      (Complex(0.0, -theta) * solver.eigenvalues().cast<Complex>().array()).exp();
  block.matrix = solver.eigenvectors() * evolution.asDiagonal() * solver.eigenvectors().adjoint();
  return block;
}

UnitaryBlock phase_shift_block(int total_n, double phi, Mode mode) {
  if (total_n < 0) throw std::invalid_argument("phase_shift_block: N must be >= 0");
  const int dim = total_n + 1;
  UnitaryBlock block;
  block.total_n = total_n;
  block.kind = BlockKind::phase_shift;
  block.matrix = Matrix::Zero(dim, dim);
  for (int m = 0; m <= total_n; ++m) {
    const int exponent = (mode == Mode::b) ? m : total_n - m;
    block.matrix(m, m) = std::polar(1.0, phi * exponent);
  }
  return block;
}

TwoModeFockState apply_block(const UnitaryBlock& u, const TwoModeFockState& s) {
  if (u.total_n != s.total_n)
    throw std::invalid_argument("apply_block: block and state act on different subspaces");
  TwoModeFockState out = s;
  out.amplitudes = u.matrix * s.amplitudes;
  if (u.kind == BlockKind::beam_splitter) {
    switch (s.basis) {
      case Basis::input: out.basis = Basis::interferometer; break;
      case Basis::interferometer: out.basis = Basis::output; break;
      case Basis::output: out.basis = Basis::output; break;
    }
  }
  return out;
}

Complex inner_product(const TwoModeFockState& s1, const TwoModeFockState& s2) {
  if (s1.total_n != s2.total_n)
    throw std::invalid_argument("inner_product: photon numbers differ");
  if (s1.basis != s2.basis)
    throw std::invalid_argument("inner_product: basis labels differ");
  return s1.amplitudes.dot(s2.amplitudes);  // Eigen's dot conjugates the left factor
}

TwoModeFockState ladder_map(const TwoModeFockState& s, Ladder op) {
  const int n = s.total_n;
  const bool raising = (op == Ladder::a_dag || op == Ladder::b_dag);
  if (!raising && n == 0) {
    TwoModeFockState zero(0, s.basis);
    zero.zero_flagged = true;
    return zero;
  }
  TwoModeFockState out(raising ? n + 1 : n - 1, s.basis);
  for (int m = 0; m <= n; ++m) {
    const Complex amp = s.amplitudes[m];
    if (amp == Complex(0.0)) continue;
    switch (op) {
      case Ladder::a:  // sqrt(N-m) |N-1-m; m>
        if (n - m >= 1) out.amplitudes[m] += std::sqrt(double(n - m)) * amp;
        break;
      case Ladder::a_dag:  // sqrt(N-m+1) |N+1-m; m>
        out.amplitudes[m] += std::sqrt(double(n - m + 1)) * amp;
        break;
      case Ladder::b:  // sqrt(m) |N-m; m-1>
        if (m >= 1) out.amplitudes[m - 1] += std::sqrt(double(m)) * amp;
        break;
      case Ladder::b_dag:  // sqrt(m+1) |N-m; m+1>
        out.amplitudes[m + 1] += std::sqrt(double(m + 1)) * amp;
        break;
    }
  }
  return out;
}

}  // namespace noon
