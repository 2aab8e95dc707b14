#include "noon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace noon {

double fidelity(int n, double eta) {
  if (n < 1) throw std::invalid_argument("fidelity: N must be >= 1");
  const Complex overlap = inner_product(noon_input_basis(n), eta_state({n, eta}));
  return std::norm(overlap);
}

namespace {

struct GoldenResult {
  double x = 0.0;
  double f = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  long evaluations = 0;
};

template <typename F>
GoldenResult golden_section_maximize(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio
  GoldenResult r;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c), fd = f(d);
  r.evaluations = 2;
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
    ++r.evaluations;
  }
  r.lo = a;
  r.hi = b;
  if (fc > fd) {
    r.x = c;
    r.f = fc;
  } else {
    r.x = d;
    r.f = fd;
  }
  return r;
}

}  // namespace

OptimizationResult optimize_eta(int n, double lo, double hi, double tol) {
  if (!(lo >= 0.0 && lo < hi)) throw std::invalid_argument("optimize_eta: need 0 <= lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("optimize_eta: tol must be > 0");

  OptimizationResult result;
  result.n = n;

  constexpr double grid_step = 0.01;
  const int n_grid = static_cast<int>(std::floor((hi - lo) / grid_step)) + 1;
  std::vector<double> values(static_cast<std::size_t>(n_grid));
  for (int i = 0; i < n_grid; ++i) values[static_cast<std::size_t>(i)] = fidelity(n, lo + i * grid_step);
  result.evaluations = n_grid;

  // Indices of the three best coarse points. If they are not contiguous the
  // landscape has competing local maxima; refine around each and keep the best.
  std::vector<int> order(static_cast<std::size_t>(n_grid));
  for (int i = 0; i < n_grid; ++i) order[static_cast<std::size_t>(i)] = i;
  std::partial_sort(order.begin(), order.begin() + std::min(3, n_grid), order.end(),
                    [&](int a, int b) { return values[std::size_t(a)] > values[std::size_t(b)]; });

  std::vector<int> starts = {order[0]};
  if (n_grid >= 3) {
    const int span = std::max({order[0], order[1], order[2]}) - std::min({order[0], order[1], order[2]});
    if (span > 2) starts = {order[0], order[1], order[2]};
  }

  GoldenResult best;
  best.f = -1.0;
  for (int idx : starts) {
    const double a = std::max(lo, lo + (idx - 1) * grid_step);
    const double b = std::min(hi, lo + (idx + 1) * grid_step);
    GoldenResult g = golden_section_maximize([&](double e) { return fidelity(n, e); }, a, b, tol);
    result.evaluations += g.evaluations;
    if (g.f > best.f) best = g;
  }

  result.eta_star = best.x;
  result.fidelity_star = best.f;
  result.bracket_lo = best.lo;
  result.bracket_hi = best.hi;
  return result;
}

OverlapCurve overlap_curve(double eta, int n_min, int n_max) {
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("overlap_curve: need 1 <= n_min <= n_max");
  OverlapCurve curve;
  curve.eta = eta;
  curve.points.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  for (int n = n_min; n <= n_max; ++n) curve.points.emplace_back(n, fidelity(n, eta));
  return curve;
}

CoherenceReport coherence_check(int n, double eta) {
  if (n < 1) throw std::invalid_argument("coherence_check: N must be >= 1");
  const TwoModeFockState inside =
      apply_block(beam_splitter_block(n, std::numbers::pi / 4.0), eta_state({n, eta}));
  CoherenceReport report;
  report.psi_n0 = inside.amplitudes[0];
  report.psi_0n = inside.amplitudes[n];
  report.coherence = std::abs(report.psi_n0 * std::conj(report.psi_0n));
  report.half_fidelity = 0.5 * fidelity(n, eta);

  // The opposite-phase NOON state is taken relative to the NOON state the
  // splitter actually produces from the input-basis NOON: under this
  // convention that is NOON(pi) for even N and NOON(0) for odd N.
  const TwoModeFockState plus =
      apply_block(beam_splitter_block(n, std::numbers::pi / 4.0), noon_input_basis(n));
  const Complex minus_amplitude =
      plus.amplitudes[n] * inside.amplitudes[0] - plus.amplitudes[0] * inside.amplitudes[n];
  report.noon_minus_overlap = std::norm(minus_amplitude);
  return report;
}

double defining_relation_residual(int n, double eta) {
  if (n < 2) throw std::invalid_argument("defining_relation_residual: N must be >= 2");
  return defining_relation_residual(eta_state({n, eta}), eta);
}

double defining_relation_residual(const TwoModeFockState& psi, double eta) {
  const int n = psi.total_n;
  if (n < 2) throw std::invalid_argument("defining_relation_residual: N must be >= 2");

  const TwoModeFockState lhs = ladder_map(ladder_map(psi, Ladder::b), Ladder::a_dag);
  TwoModeFockState rhs = ladder_map(ladder_map(psi, Ladder::a), Ladder::b_dag);
  for (int m = 0; m <= rhs.total_n; ++m)
    rhs.amplitudes[m] *= (eta / n) * double(rhs.total_n - m);  // a^dag a on |N-m; m>

  const double lhs_norm = lhs.norm();
  if (lhs_norm == 0.0) return 0.0;
  return (lhs.amplitudes - rhs.amplitudes).norm() / lhs_norm;
}

}  // namespace noon
