// qlimit: command-line front end for the verification harness.
//
//   qlimit identities [--N 3,5,7,9] [--two-k 1,2,3] [--dim 64] [--two-l-max 200]
//   qlimit contract   [--l 10000,100000,...] [--n-max 8]
//   qlimit phase      [--dim 32] [--cycles 1] [--omega 1]
//   qlimit figures    [--which fig1|fig2|all] --out DIR
//   qlimit spectrum   [--N 7] [--tau 1] [--branch 1]
//
// Common flags: --format csv|json, --tol, --out, --seed.
// Exit codes: 0 all assertions passed, 1 assertion failure, 2 usage/config error.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlimit/qlimit.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string format = "json";
  double tol = 1e-12;
  std::string out;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, const std::string& default_format) {
  opts.format = default_format;
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tol", opts.tol, "Absolute tolerance for O(1) identities")->check(CLI::PositiveNumber);
  cmd->add_option("--out", opts.out, "Output path (stdout when omitted)");
  cmd->add_option("--seed", opts.seed, "Seed for sampled checks");
}

/// Writes text to --out (or stdout) and a sidecar with run metadata.
void emit(const CommonOptions& opts, const std::string& command, const std::string& text, double elapsed) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path path(opts.out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
  }
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  const nlohmann::json meta{{"command", command}, {"finished_at", stamp}, {"elapsed_seconds", elapsed},
                            {"output", path.filename().string()}};
  std::ofstream m(path.string() + ".meta.json", std::ios::binary | std::ios::trunc);
  m << meta.dump(2) << '\n';
}

/// "3,5,7" -> {3, 5, 7}; an empty string is an empty list.
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  for (const auto& field : qlimit::csv::split_line(text)) out.push_back(qlimit::csv::parse_integer(field));
  return out;
}

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_identities(const CommonOptions& opts, qlimit::SuiteConfig cfg) {
  Stopwatch clock;
  cfg.tol = opts.tol;
  cfg.seed = opts.seed;
  const auto report = qlimit::run_identity_suite(cfg);
  std::ostringstream text;
  if (opts.format == "json")
    text << qlimit::to_json(report).dump(2) << '\n';
  else
    qlimit::write_results_csv(text, report.results);
  emit(opts, "identities", text.str(), clock.seconds());
  for (const auto& name : report.failed_names()) std::cerr << "FAIL " << name << '\n';
  return report.all_passed() ? kExitPass : kExitFail;
}

int run_contract(const CommonOptions& opts, const std::vector<std::int64_t>& l_values, std::int64_t n_max) {
  Stopwatch clock;
  const auto report = qlimit::run_contraction_study(l_values, n_max);
  const auto checks = qlimit::check_contraction(report, opts.tol);
  std::ostringstream text;
  if (opts.format == "json") {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& c : checks)
      results.push_back({{"name", c.name}, {"size", c.size}, {"residual", c.residual},
                         {"tolerance", c.tolerance}, {"pass", c.pass}});
    const nlohmann::json doc{{"schema", qlimit::kReportSchema}, {"suite", "contract"},
                             {"config", {{"l_values", l_values}, {"n_max", n_max}}},
                             {"rows", qlimit::to_json(report)}, {"results", results}};
    text << doc.dump(2) << '\n';
  } else {
    qlimit::write_convergence_csv(text, report);
  }
  emit(opts, "contract", text.str(), clock.seconds());
  bool ok = true;
  for (const auto& c : checks)
    if (!c.pass) {
      std::cerr << "FAIL " << c.name << '\n';
      ok = false;
    }
  return ok ? kExitPass : kExitFail;
}

int run_phase(const CommonOptions& opts, std::int64_t dim, std::int64_t cycles, double omega) {
  Stopwatch clock;
  const auto result = qlimit::run_phase_check(dim, cycles, omega, opts.tol);
  std::ostringstream text;
  if (opts.format == "json") {
    text << qlimit::to_json(result).dump(2) << '\n';
  } else {
    text << "period_count,phase_re,phase_im,max_deviation,is_geometric_minus_one,is_identity\n";
    qlimit::csv::write_row(text, result.period_count, qlimit::csv::format_number(result.resulting_phase.real()),
                           qlimit::csv::format_number(result.resulting_phase.imag()),
                           qlimit::csv::format_number(result.max_deviation),
                           result.is_geometric_minus_one ? "true" : "false", result.is_identity ? "true" : "false");
  }
  emit(opts, "phase", text.str(), clock.seconds());
  // One period gives −1; two periods close the loop.
  const bool expected = cycles % 2 == 1 ? result.is_geometric_minus_one : result.is_identity;
  if (!expected) std::cerr << "FAIL phase after " << cycles << " period(s)\n";
  return expected ? kExitPass : kExitFail;
}

int run_figures(const CommonOptions& opts, const std::string& which, std::int64_t points) {
  const std::filesystem::path dir = opts.out.empty() ? std::filesystem::path(".") : std::filesystem::path(opts.out);
  bool ok = true;
  nlohmann::json summary = nlohmann::json::object();
  auto export_one = [&](qlimit::Figure fig) {
    auto spec = qlimit::figure_spec(fig);
    spec.points_per_interval = points;
    const auto files = qlimit::export_figure_data(spec, dir);
    const auto scan = qlimit::scan_returns(spec.params, opts.tol, spec.touches);
    nlohmann::json entry{{"trajectory", files.trajectory.filename().string()},
                         {"touches", files.touches.filename().string()},
                         {"closest_return_j", scan.closest_j},
                         {"closest_return_distance", scan.closest_distance}};
    if (fig == qlimit::Figure::fig1) {
      const bool returns = scan.first_return && *scan.first_return == 7;
      const bool covers = qlimit::uniform_coverage_check(*spec.params.ratio_hint, 7);
      entry["returns_at_7"] = returns;
      entry["uniform_coverage"] = covers;
      ok = ok && returns && covers;
    }
    summary[spec.stem] = entry;
  };
  if (which == "fig1" || which == "all") export_one(qlimit::Figure::fig1);
  if (which == "fig2" || which == "all") export_one(qlimit::Figure::fig2);
  std::cout << summary.dump(2) << '\n';
  return ok ? kExitPass : kExitFail;
}

int run_spectrum(const CommonOptions& opts, std::int64_t n, double tau, std::int64_t branch) {
  Stopwatch clock;
  const auto spectrum = qlimit::hamiltonian_spectrum(n, tau, branch);
  std::ostringstream text;
  if (opts.format == "json") {
    const nlohmann::json doc{{"schema", qlimit::kReportSchema},
                             {"suite", "spectrum"},
                             {"config", {{"N", n}, {"tau", tau}, {"n_branch", branch}}},
                             {"omega", qlimit::formal_frequency(n, tau)},
                             {"entries", qlimit::to_json(spectrum)}};
    text << doc.dump(2) << '\n';
  } else {
    qlimit::write_spectrum_csv(text, spectrum);
  }
  emit(opts, "spectrum", text.str(), clock.seconds());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic cyclic models and their quantum limit"};
  app.require_subcommand(1);

  CommonOptions id_opts, contract_opts, phase_opts, figure_opts, spectrum_opts;
  qlimit::SuiteConfig suite;
  std::int64_t two_l_max = 200;
  std::string n_list, two_k_list, contraction_list;
  auto* identities = app.add_subcommand("identities", "Run the algebraic identity suite");
  add_common(identities, id_opts, "json");
  auto* n_opt = identities->add_option("--N", n_list, "Comma-separated cutoffs N (default 3,5,7,9)");
  auto* two_k_opt = identities->add_option("--two-k", two_k_list, "Comma-separated labels 2k (default 1,2,3)");
  identities->add_option("--dim", suite.dim, "Truncation dimension D")->check(CLI::Range(2, 4096));
  identities->add_option("--two-l-max", two_l_max, "Check SU(2) for 2l = 0..max (negative disables)");
  auto* contraction_opt =
      identities->add_option("--contraction-l", contraction_list, "Comma-separated l values for the contraction checks");
  identities->add_option("--inject-fault", suite.fault, "Perturb one generator entry")
      ->check(CLI::IsMember({"", "su11.lplus", "su2.lplus"}));

  std::string l_list = "10000,100000,1000000,10000000";
  std::int64_t n_max = 8;
  auto* contract = app.add_subcommand("contract", "SU(2) -> h(1) contraction study");
  add_common(contract, contract_opts, "csv");
  contract->add_option("--l", l_list, "Comma-separated ascending l values");
  contract->add_option("--n-max", n_max, "Largest oscillator level")->check(CLI::NonNegativeNumber);

  std::int64_t phase_dim = 32, cycles = 1;
  double omega = 1.0;
  auto* phase = app.add_subcommand("phase", "Geometric phase after whole periods");
  add_common(phase, phase_opts, "json");
  phase->add_option("--dim", phase_dim, "Truncation dimension D")->check(CLI::Range(2, 1 << 20));
  phase->add_option("--cycles", cycles, "Number of periods T = 2pi/omega")->check(CLI::PositiveNumber);
  phase->add_option("--omega", omega, "Formal frequency")->check(CLI::PositiveNumber);

  std::string which = "all";
  std::int64_t points = 1000;
  auto* figures = app.add_subcommand("figures", "Export trajectory and touch-event CSVs");
  add_common(figures, figure_opts, "csv");
  figures->add_option("--which", which, "fig1, fig2 or all")->check(CLI::IsMember({"fig1", "fig2", "all"}));
  figures->add_option("--points-per-interval", points, "Trajectory samples per touch interval")
      ->check(CLI::PositiveNumber);

  std::int64_t spectrum_n = 7, branch = 1;
  double tau = 1.0;
  auto* spectrum = app.add_subcommand("spectrum", "Finite-N pair Hamiltonian spectrum");
  add_common(spectrum, spectrum_opts, "csv");
  spectrum->add_option("--N", spectrum_n, "Cutoff N")->check(CLI::PositiveNumber);
  spectrum->add_option("--tau", tau, "Time step")->check(CLI::PositiveNumber);
  spectrum->add_option("--branch", branch, "Branch integer n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*identities) {
      if (*n_opt) suite.n_values = parse_int_list(n_list);
      if (*two_k_opt) suite.two_k_values = parse_int_list(two_k_list);
      if (*contraction_opt) suite.contraction_l = parse_int_list(contraction_list);
      suite.two_l_values.clear();
      for (std::int64_t l = 0; l <= two_l_max; ++l) suite.two_l_values.push_back(l);
      return run_identities(id_opts, suite);
    }
    if (*contract) return run_contract(contract_opts, parse_int_list(l_list), n_max);
    if (*phase) return run_phase(phase_opts, phase_dim, cycles, omega);
    if (*figures) return run_figures(figure_opts, which, points);
    if (*spectrum) return run_spectrum(spectrum_opts, spectrum_n, tau, branch);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
