// Command-line front end: reproduces the optimized-fidelity table, the
// overlap-vs-N curve, fringe scans, and the internal consistency checks.

#include "noon/analysis.hpp"
#include "noon/interferometer.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
  int precision = 12;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
  cmd->add_option("--precision", opts.precision, "Decimal digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

int emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
    return 2;
  }
  file << text;
  return 0;
}

json visibility_json(const noon::VisibilityReport& v, int precision) {
  json j;
  j["frequency"] = v.frequency;
  j["component_magnitude"] = fmt(v.component_magnitude, precision);
  j["mean_level"] = fmt(v.mean_level, precision);
  j["visibility"] = fmt(v.visibility, precision);
  j["sensitivity"] = fmt(v.sensitivity, precision);
  j["normalization"] =
      v.normalization == noon::FringeNormalization::parity ? "parity" : "probability";
  j["minmax_contrast"] = fmt(v.minmax_contrast, precision);
  return j;
}

std::string visibility_csv(const std::string& label, const noon::VisibilityReport& v,
                           int precision) {
  std::string row = label;
  row += "," + std::to_string(v.frequency);
  row += "," + fmt(v.component_magnitude, precision);
  row += "," + fmt(v.mean_level, precision);
  row += "," + fmt(v.visibility, precision);
  row += "," + fmt(v.sensitivity, precision);
  row += v.normalization == noon::FringeNormalization::parity ? ",parity" : ",probability";
  row += "," + fmt(v.minmax_contrast, precision);
  row += "\n";
  return row;
}

constexpr const char* kVisibilityHeader =
    "signal,frequency,component_magnitude,mean_level,visibility,sensitivity,"
    "normalization,minmax_contrast\n";

int run_state(const std::string& kind, int n, double eta, const OutputOptions& opts) {
  noon::TwoModeFockState s;
  if (kind == "eta") s = noon::eta_state({n, eta});
  else if (kind == "noon-input") s = noon::noon_input_basis(n);
  else if (kind == "noon") s = noon::noon_interferometer(n);
  else if (kind == "gaussian-eta") s = noon::gaussian_eta_approx(n);
  else s = noon::gaussian_noon_approx(n);

  const char* basis = s.basis == noon::Basis::input ? "input" : "interferometer";
  if (opts.format == "csv") {
    std::string text = "m,re,im\n";
    for (int m = 0; m <= n; ++m)
      text += std::to_string(m) + "," + fmt(s.amplitudes[m].real(), opts.precision) + "," +
              fmt(s.amplitudes[m].imag(), opts.precision) + "\n";
    return emit(opts, text);
  }
  json j;
  j["command"] = "state";
  j["kind"] = kind;
  j["n"] = n;
  j["eta"] = fmt(eta, opts.precision);
  j["basis"] = basis;
  j["amplitudes"] = json::array();
  for (int m = 0; m <= n; ++m)
    j["amplitudes"].push_back({{"m", m},
                               {"re", fmt(s.amplitudes[m].real(), opts.precision)},
                               {"im", fmt(s.amplitudes[m].imag(), opts.precision)}});
  return emit(opts, j.dump(2) + "\n");
}

int run_fidelity(int n, double eta, const OutputOptions& opts) {
  const double f = noon::fidelity(n, eta);
  if (opts.format == "csv")
    return emit(opts, "n,eta,fidelity\n" + std::to_string(n) + "," + fmt(eta, opts.precision) +
                          "," + fmt(f, opts.precision) + "\n");
  json j;
  j["command"] = "fidelity";
  j["n"] = n;
  j["eta"] = fmt(eta, opts.precision);
  j["fidelity"] = fmt(f, opts.precision);
  return emit(opts, j.dump(2) + "\n");
}

json optimization_json(const noon::OptimizationResult& r, int precision) {
  json j;
  j["n"] = r.n;
  j["eta_star"] = fmt(r.eta_star, precision);
  j["fidelity_star"] = fmt(r.fidelity_star, precision);
  j["evaluations"] = r.evaluations;
  j["bracket_lo"] = fmt(r.bracket_lo, precision);
  j["bracket_hi"] = fmt(r.bracket_hi, precision);
  return j;
}

std::string optimization_csv_row(const noon::OptimizationResult& r, int precision) {
  return std::to_string(r.n) + "," + fmt(r.eta_star, precision) + "," +
         fmt(r.fidelity_star, precision) + "," + std::to_string(r.evaluations) + "," +
         fmt(r.bracket_lo, precision) + "," + fmt(r.bracket_hi, precision) + "\n";
}

constexpr const char* kOptimizeHeader = "n,eta_star,fidelity_star,evaluations,bracket_lo,bracket_hi\n";

int run_optimize(int n, double lo, double hi, double tol, const OutputOptions& opts) {
  const noon::OptimizationResult r = noon::optimize_eta(n, lo, hi, tol);
  if (opts.format == "csv")
    return emit(opts, std::string(kOptimizeHeader) + optimization_csv_row(r, opts.precision));
  json j;
  j["command"] = "optimize";
  j["result"] = optimization_json(r, opts.precision);
  return emit(opts, j.dump(2) + "\n");
}

int run_table1(std::vector<int> n_list, double lo, double hi, double tol,
               const OutputOptions& opts) {
  if (n_list.empty()) {
    for (int n = 2; n <= 15; ++n) n_list.push_back(n);
    n_list.push_back(100);
  }
  std::vector<noon::OptimizationResult> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) rows.push_back(noon::optimize_eta(n, lo, hi, tol));

  if (opts.format == "csv") {
    std::string text = kOptimizeHeader;
    for (const auto& r : rows) text += optimization_csv_row(r, opts.precision);
    return emit(opts, text);
  }
  json j;
  j["command"] = "table1";
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back(optimization_json(r, opts.precision));
  return emit(opts, j.dump(2) + "\n");
}

int run_fig2(int n_min, int n_max, double eta, const OutputOptions& opts) {
  const noon::OverlapCurve curve = noon::overlap_curve(eta, n_min, n_max);
  if (opts.format == "csv") {
    std::string text = "n,overlap\n";
    for (const auto& [n, overlap] : curve.points)
      text += std::to_string(n) + "," + fmt(overlap, opts.precision) + "\n";
    return emit(opts, text);
  }
  json j;
  j["command"] = "fig2";
  j["eta"] = fmt(eta, opts.precision);
  j["points"] = json::array();
  for (const auto& [n, overlap] : curve.points)
    j["points"].push_back({{"n", n}, {"overlap", fmt(overlap, opts.precision)}});
  return emit(opts, j.dump(2) + "\n");
}

int run_fringe(int n, double eta, int samples, const OutputOptions& opts) {
  const noon::FringeScan scan = noon::fringe_scan(n, eta, samples);
  const std::vector<double> parity(scan.parity.data(), scan.parity.data() + samples);
  const std::vector<double> extremal(scan.extremal.data(), scan.extremal.data() + samples);
  const noon::VisibilityReport parity_vis =
      noon::fourier_visibility(parity, n, noon::FringeNormalization::parity);
  const noon::VisibilityReport extremal_vis =
      noon::fourier_visibility(extremal, n, noon::FringeNormalization::probability);

  if (opts.format == "csv") {
    std::string text = "phi";
    for (int m = 0; m <= n; ++m) text += ",p_" + std::to_string(m);
    text += ",parity,extremal\n";
    for (int j = 0; j < samples; ++j) {
      text += fmt(scan.phases[j], opts.precision);
      for (int m = 0; m <= n; ++m) text += "," + fmt(scan.distributions(j, m), opts.precision);
      text += "," + fmt(scan.parity[j], opts.precision);
      text += "," + fmt(scan.extremal[j], opts.precision) + "\n";
    }
    const std::string sidecar = std::string(kVisibilityHeader) +
                                visibility_csv("parity", parity_vis, opts.precision) +
                                visibility_csv("extremal", extremal_vis, opts.precision);
    if (opts.out_path.empty()) return emit(opts, text + "\n" + sidecar);
    const int rc = emit(opts, text);
    if (rc != 0) return rc;
    OutputOptions sidecar_opts = opts;
    sidecar_opts.out_path = opts.out_path + ".visibility.csv";
    return emit(sidecar_opts, sidecar);
  }

  json j;
  j["command"] = "fringe";
  j["n"] = n;
  j["eta"] = fmt(eta, opts.precision);
  j["samples"] = samples;
  j["phases"] = json::array();
  for (int k = 0; k < samples; ++k) j["phases"].push_back(fmt(scan.phases[k], opts.precision));
  j["distributions"] = json::array();
  for (int k = 0; k < samples; ++k) {
    json row = json::array();
    for (int m = 0; m <= n; ++m) row.push_back(fmt(scan.distributions(k, m), opts.precision));
    j["distributions"].push_back(row);
  }
  j["parity"] = json::array();
  j["extremal"] = json::array();
  for (int k = 0; k < samples; ++k) {
    j["parity"].push_back(fmt(scan.parity[k], opts.precision));
    j["extremal"].push_back(fmt(scan.extremal[k], opts.precision));
  }
  j["visibility"] = {{"parity", visibility_json(parity_vis, opts.precision)},
                     {"extremal", visibility_json(extremal_vis, opts.precision)}};
  return emit(opts, j.dump(2) + "\n");
}

int run_check(bool inject_perturbation) {
  using std::numbers::pi;
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass, double measured, double bound) {
    all_pass = all_pass && pass;
    std::printf("%s  %-42s measured=%.3e  bound=%.1e\n", pass ? "PASS" : "FAIL", name.c_str(),
                measured, bound);
  };

  {
    double worst = 0.0;
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int n : {1, 2, 5, 13, 32, 64}) {
      const noon::Matrix u = noon::beam_splitter_block(n, angle(rng), angle(rng)).matrix;
      worst = std::max(worst, (u.adjoint() * u - noon::Matrix::Identity(n + 1, n + 1))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    report("beam-splitter unitarity", worst < 1e-12, worst, 1e-12);
  }
  {
    const noon::TwoModeFockState out = noon::apply_block(
        noon::beam_splitter_block(2, pi / 4.0), noon::TwoModeFockState::basis_ket(2, 1));
    const double r = 1.0 / std::numbers::sqrt2;
    const double err = std::max({std::abs(out.amplitudes[0] - noon::Complex(r)),
                                 std::abs(out.amplitudes[1]),
                                 std::abs(out.amplitudes[2] + noon::Complex(r))});
    report("Hong-Ou-Mandel cancellation", err < 1e-12, err, 1e-12);
  }
  {
    double worst = 0.0;
    for (int n = 2; n <= 40; ++n) {
      for (double eta : {0.5, 1.0, 2.0, 3.0}) {
        noon::TwoModeFockState psi = noon::eta_state({n, eta});
        if (inject_perturbation) {
          psi.amplitudes[2] += 1e-3;
          psi.normalize();
        }
        worst = std::max(worst, noon::defining_relation_residual(psi, eta));
      }
    }
    report("defining-relation residual", worst < 1e-10, worst, 1e-10);
  }
  {
    double worst = 0.0;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> alpha(0.5, 2.0), gamma(0.05, 0.6);
    std::uniform_int_distribution<int> pick_n(1, 12);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = pick_n(rng);
      const double a = alpha(rng), g = gamma(rng);
      const noon::TwoModeFockState projected =
          noon::project_total_n({noon::Complex(a), noon::Complex(g), 64}, n);
      const noon::TwoModeFockState exact = noon::eta_state({n, n * g / (a * a)});
      Eigen::Index pivot = 0;
      projected.amplitudes.cwiseAbs().maxCoeff(&pivot);
      const noon::Complex phase = exact.amplitudes[pivot] / projected.amplitudes[pivot];
      worst = std::max(worst, (projected.amplitudes * (phase / std::abs(phase)) - exact.amplitudes)
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    report("oracle equivalence (projection vs recurrence)", worst < 1e-10, worst, 1e-10);
  }
  {
    double worst_minus = 0.0, worst_coherence = 0.0;
    for (int n = 1; n <= 60; ++n) {
      for (double eta : {1.5, 2.0, 2.5, 3.0}) {
        const noon::CoherenceReport r = noon::coherence_check(n, eta);
        worst_minus = std::max(worst_minus, std::sqrt(r.noon_minus_overlap));
        worst_coherence = std::max(worst_coherence, std::abs(r.coherence - r.half_fidelity));
      }
    }
    report("opposite-phase NOON orthogonality", worst_minus < 1e-12, worst_minus, 1e-12);
    report("coherence equals half the fidelity", worst_coherence < 1e-10, worst_coherence, 1e-10);
  }
  {
    const double err = std::max(std::abs(noon::fidelity(2, 2.0) - 1.0),
                                std::abs(noon::fidelity(3, 3.0) - 1.0));
    report("exact cancellations at N=2,3", err < 1e-12, err, 1e-12);
  }
  {
    const double err = std::abs(noon::fidelity(10000, 2.0) - std::sqrt(8.0 / 9.0));
    report("sqrt(8/9) asymptote at N=10^4", err < 0.002, err, 2e-3);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Fock-space simulator for path-entangled N-photon states"};
  app.require_subcommand(1);

  OutputOptions opts;

  auto* state_cmd = app.add_subcommand("state", "Dump a constructed state's amplitudes");
  int state_n = 2;
  double state_eta = 2.0;
  std::string state_kind = "eta";
  state_cmd->add_option("--n", state_n, "Total photon number")->required()->check(CLI::Range(1, 32768));
  state_cmd->add_option("--eta", state_eta, "Mixing parameter")->capture_default_str();
  state_cmd->add_option("--kind", state_kind, "Which constructor")
      ->check(CLI::IsMember({"eta", "noon-input", "noon", "gaussian-eta", "gaussian-noon"}))
      ->capture_default_str();
  add_output_options(state_cmd, opts);

  auto* fid_cmd = app.add_subcommand("fidelity", "F = |<NOON|eta>|^2 for one (N, eta)");
  int fid_n = 2;
  double fid_eta = 2.0;
  fid_cmd->add_option("--n", fid_n, "Total photon number")->required()->check(CLI::Range(1, 32768));
  fid_cmd->add_option("--eta", fid_eta, "Mixing parameter")->required();
  add_output_options(fid_cmd, opts);

  auto* opt_cmd = app.add_subcommand("optimize", "Maximize the fidelity over eta for one N");
  int opt_n = 2;
  double eta_lo = 1.0, eta_hi = 5.0, tol = 1e-6;
  opt_cmd->add_option("--n", opt_n, "Total photon number")->required()->check(CLI::Range(1, 32768));
  opt_cmd->add_option("--eta-lo", eta_lo, "Lower search bound")->capture_default_str();
  opt_cmd->add_option("--eta-hi", eta_hi, "Upper search bound")->capture_default_str();
  opt_cmd->add_option("--tol", tol, "Bracket tolerance")->capture_default_str();
  add_output_options(opt_cmd, opts);

  auto* table_cmd = app.add_subcommand("table1", "Optimized eta and fidelity per N");
  std::vector<int> table_n;
  table_cmd->add_option("--n", table_n, "Photon numbers (default: 2..15 and 100)");
  table_cmd->add_option("--eta-lo", eta_lo, "Lower search bound")->capture_default_str();
  table_cmd->add_option("--eta-hi", eta_hi, "Upper search bound")->capture_default_str();
  table_cmd->add_option("--tol", tol, "Bracket tolerance")->capture_default_str();
  add_output_options(table_cmd, opts);

  auto* fig2_cmd = app.add_subcommand("fig2", "Overlap with the NOON state vs N at fixed eta");
  int n_min = 2, n_max = 30;
  double fig2_eta = 2.0;
  fig2_cmd->add_option("--n-min", n_min, "First N")->capture_default_str()->check(CLI::Range(1, 32768));
  fig2_cmd->add_option("--n-max", n_max, "Last N")->capture_default_str()->check(CLI::Range(1, 32768));
  fig2_cmd->add_option("--eta", fig2_eta, "Mixing parameter")->capture_default_str();
  add_output_options(fig2_cmd, opts);

  auto* fringe_cmd = app.add_subcommand("fringe", "Mach-Zehnder fringe scan for one eta state");
  int fringe_n = 2, samples = 64;
  double fringe_eta = 2.0;
  fringe_cmd->add_option("--n", fringe_n, "Total photon number")->required()->check(CLI::Range(1, 4096));
  fringe_cmd->add_option("--eta", fringe_eta, "Mixing parameter")->required();
  fringe_cmd->add_option("--samples", samples, "Phase samples (>= 4N+1)")->capture_default_str();
  add_output_options(fringe_cmd, opts);

  auto* check_cmd = app.add_subcommand("check", "Run the internal consistency suite");
  bool inject = false;
  check_cmd->add_flag("--inject-perturbation", inject)->group("");  // test hook, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (state_cmd->parsed()) return run_state(state_kind, state_n, state_eta, opts);
    if (fid_cmd->parsed()) return run_fidelity(fid_n, fid_eta, opts);
    if (opt_cmd->parsed()) return run_optimize(opt_n, eta_lo, eta_hi, tol, opts);
    if (table_cmd->parsed()) return run_table1(table_n, eta_lo, eta_hi, tol, opts);
    if (fig2_cmd->parsed()) return run_fig2(n_min, n_max, fig2_eta, opts);
    if (fringe_cmd->parsed()) {
      if (samples < 4 * fringe_n + 1) {
        std::cerr << "error: --samples must be at least 4N+1 = " << 4 * fringe_n + 1
                  << " for N = " << fringe_n << "\n";
        return 2;
      }
      return run_fringe(fringe_n, fringe_eta, samples, opts);
    }
    if (check_cmd->parsed()) return run_check(inject);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
