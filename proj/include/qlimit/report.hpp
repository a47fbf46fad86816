#pragma once

// Verification harness: identity suite, contraction study, geometric-phase
// check and figure-data export, with JSON/CSV serialization.
//
// JSON report layout (schema 1):
//   {"schema": 1, "suite": ..., "config": {...},
//    "results": [{"name", "size", "residual", "tolerance", "pass"}, ...],
//    "metrics": [{"name", "size", "value"}, ...]}
// Results and metrics are sorted by (name, size) so identical configurations
// serialize to identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlimit/algebra.hpp"
#include "qlimit/automaton.hpp"
#include "qlimit/csv.hpp"
#include "qlimit/linalg.hpp"
#include "qlimit/magnetron.hpp"
#include "qlimit/spectral.hpp"

namespace qlimit {

inline constexpr int kReportSchema = 1;

struct CheckResult {
  std::string name;
  std::string size;
  double residual;
  double tolerance;
  bool pass;
};

/// Informational measurement without a pass/fail threshold.
struct Metric {
  std::string name;
  std::string size;
  double value;
};

/// A zero tolerance demands an exact zero; otherwise residual < tolerance.
inline bool within(double residual, double tolerance) {
  if (std::isnan(residual)) return false;
  return tolerance == 0.0 ? residual == 0.0 : residual < tolerance;
}

inline CheckResult make_check(std::string name, std::string size, double residual, double tolerance) {
  return {std::move(name), std::move(size), residual, tolerance, within(residual, tolerance)};
}

// ---------------------------------------------------------------------------
// Contraction study

struct ConvergenceRow {
  std::int64_t l;
  std::int64_t n;
  double measured_error;
  double predicted_error;
  std::optional<double> ratio_to_double;  // error(l)/error(2l); unset when both vanish
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
};

/// √(n+1)·(1 − √(1 − n/(2l))), written in a cancellation-free form.
inline double predicted_contraction_error(std::int64_t two_l, std::int64_t n) {
  const double x = static_cast<double>(n) / static_cast<double>(two_l);
  return std::sqrt(static_cast<double>(n + 1)) * x / (1.0 + std::sqrt(1.0 - x));
}

inline ConvergenceReport run_contraction_study(const std::vector<std::int64_t>& l_values, std::int64_t n_max) {
  if (l_values.empty()) throw std::invalid_argument("run_contraction_study: l_values must be nonempty");
  if (!std::is_sorted(l_values.begin(), l_values.end()) ||
      std::adjacent_find(l_values.begin(), l_values.end()) != l_values.end())
    throw std::invalid_argument("run_contraction_study: l_values must be strictly ascending");
  if (n_max < 0) throw std::invalid_argument("run_contraction_study: n_max must be >= 0");
  if (l_values.front() < 1 || 2 * l_values.front() <= n_max)
    throw std::invalid_argument("run_contraction_study: need 2l > n_max for every l");
  ConvergenceReport report;
  for (const auto l : l_values)
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const double e = contraction_error(2 * l, n);
      const double e2 = contraction_error(4 * l, n);
      std::optional<double> ratio;
      if (e2 > 0.0) ratio = e / e2;
      report.rows.push_back({l, n, e, predicted_contraction_error(2 * l, n), ratio});
    }
  return report;
}

/// Doubling ratios are only asserted from this l upward.
inline constexpr std::int64_t kAsymptoticL = 10'000;

inline std::vector<CheckResult> check_contraction(const ConvergenceReport& report, double match_tol = 1e-12) {
  double mismatch = 0.0, ratio_dev = 0.0, monotone_failures = 0.0, n0 = 0.0;
  for (const auto& row : report.rows) {
    mismatch = std::max(mismatch, std::abs(row.measured_error - row.predicted_error));
    if (row.n == 0) n0 = std::max(n0, row.measured_error);
    if (row.n > 0 && row.l >= kAsymptoticL)
      ratio_dev = std::max(ratio_dev, row.ratio_to_double ? std::abs(*row.ratio_to_double - 2.0) : INFINITY);
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i)
    for (std::size_t k = i + 1; k < report.rows.size(); ++k) {
      const auto& a = report.rows[i];
      const auto& b = report.rows[k];
      if (a.n == b.n && a.n > 0 && b.l > a.l && !(b.measured_error < a.measured_error)) ++monotone_failures;
    }
  std::string size = "rows=" + std::to_string(report.rows.size());
  return {make_check("algebra.contraction.closed_form", size, mismatch, match_tol),
          make_check("algebra.contraction.doubling_ratio", size, ratio_dev, 0.1),
          make_check("algebra.contraction.monotone", size, monotone_failures, 0.0),
          make_check("algebra.contraction.exact_at_n0", size, n0, 0.0)};
}

struct SuiteConfig {
  std::vector<std::int64_t> n_values{3, 5, 7, 9};
  std::vector<std::int64_t> two_k_values{1, 2, 3};
  std::int64_t dim = 64;
  std::vector<std::int64_t> two_l_values = default_two_l_values();
  std::vector<std::int64_t> contraction_l{10'000, 100'000, 1'000'000};
  double tol = 1e-12;
  std::uint64_t seed = 1;
  /// Named perturbation applied before the algebra checks: "su11.lplus" or
  /// "su2.lplus". Empty for a clean run.
  std::string fault;

  static std::vector<std::int64_t> default_two_l_values() {
    std::vector<std::int64_t> v(201);
    for (std::int64_t i = 0; i <= 200; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
  }
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckResult> results;
  std::vector<Metric> metrics;

  [[nodiscard]] bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
  }
  [[nodiscard]] std::vector<std::string> failed_names() const {
    std::vector<std::string> out;
    for (const auto& r : results)
      if (!r.pass) out.push_back(r.name + "[" + r.size + "]");
    return out;
  }
};

namespace detail {

inline std::string size_n(std::int64_t n) { return "N=" + std::to_string(n); }

inline void automaton_checks(std::int64_t n, std::mt19937_64& rng, std::vector<CheckResult>& out) {
  const auto size = size_n(n);
  const auto thooft = CyclicModel::thooft(n);
  const auto plain = CyclicModel::plain(n);
  const Matrix u_t = evolution_matrix(thooft);
  const Matrix u_p = evolution_matrix(plain);
  const Matrix u_pair = tensor_evolution(PairModel(n));
  const Matrix id = Matrix::Identity(n, n);

  out.push_back(make_check("automaton.unitarity.thooft", size, unitarity_residual(u_t), 1e-13));
  out.push_back(make_check("automaton.unitarity.plain", size, unitarity_residual(u_p), 0.0));
  out.push_back(make_check("automaton.unitarity.pair", size, unitarity_residual(u_pair), 0.0));
  out.push_back(make_check("automaton.periodicity.thooft", size,
                           max_abs(matrix_power(u_t, static_cast<unsigned long long>(n)) + id),
                           1e-14 * static_cast<double>(n)));
  out.push_back(make_check("automaton.periodicity.plain", size,
                           max_abs(matrix_power(u_p, static_cast<unsigned long long>(n)) - id), 0.0));

  double step_failures = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    DeterministicState s{k};
    for (std::int64_t i = 0; i < n; ++i) s = step(plain, s);
    if (s.k != k) ++step_failures;
  }
  out.push_back(make_check("automaton.step_period", size, step_failures, 0.0));

  std::uniform_int_distribution<std::int64_t> pos(1, n), steps(0, 4 * n);
  double additivity_failures = 0;
  for (int trial = 0; trial < 32; ++trial) {
    const DeterministicState s{pos(rng)};
    const auto a = steps(rng), b = steps(rng);
    const auto whole = evolve(thooft, s, a + b);
    const auto first = evolve(thooft, s, a);
    const auto second = evolve(thooft, first.state, b);
    if (!(whole.state == second.state && whole.phase == first.phase + second.phase)) ++additivity_failures;
  }
  out.push_back(make_check("automaton.evolve_additivity", size, additivity_failures, 0.0));
}

inline void spectral_checks(std::int64_t n, std::vector<CheckResult>& out) {
  const auto size = size_n(n);
  const Matrix u = evolution_matrix(CyclicModel::plain(n));
  const Matrix f = polar_basis(n);

  out.push_back(make_check("spectral.completeness", size, max_abs(f.adjoint() * f - Matrix::Identity(n, n)),
                           1e-13 * static_cast<double>(n)));

  double eigen_residual = 0.0;
  Matrix expected_diag = Matrix::Zero(n, n);
  for (std::int64_t k = 0; k < n; ++k) {
    const Complex lambda = eigenvalue_of(n, k);
    expected_diag(k, k) = lambda;
    eigen_residual = std::max(eigen_residual, max_abs(u * f.col(k) - lambda * f.col(k)));
  }
  out.push_back(make_check("spectral.eigen_relation", size, eigen_residual, 1e-13));
  out.push_back(make_check("spectral.polar_form", size, max_abs(f.adjoint() * u * f - expected_diag), 1e-12));

  const PairModel pair(n);
  const Matrix u_pair = tensor_evolution(pair);
  const Matrix u_counter = counter_evolution(pair);
  const auto labels = jm_labels(n);
  const Matrix basis = jm_basis(n, labels);
  double fwd = 0.0, counter = 0.0;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto col = basis.col(static_cast<Eigen::Index>(c));
    fwd = std::max(fwd, max_abs(u_pair * col - jm_evolution_phase(n, labels[c]).to_complex() * col));
    counter = std::max(counter, max_abs(u_counter * col - jm_counter_phase(n, labels[c]).to_complex() * col));
  }
  out.push_back(make_check("spectral.jm_evolution", size, fwd, 1e-12));
  out.push_back(make_check("spectral.jm_counter_evolution", size, counter, 1e-12));
  out.push_back(make_check("spectral.jm_orthogonality", size,
                           max_abs(basis.adjoint() * basis - Matrix::Identity(basis.cols(), basis.cols())), 1e-12));

  double bijection_failures = 0;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      const auto label = JMLabel::from_occupations(n, a, b);
      const auto back = JMLabel::from_twice(n, label.two_j(), label.two_m());
      if (back.n_a() != a || back.m_b() != b) ++bijection_failures;
    }
  out.push_back(make_check("spectral.label_bijection", size, bijection_failures, 0.0));

  const auto h = polar_hamiltonians(n, 1.0);
  out.push_back(make_check("spectral.invariant_commutes", size, max_abs(commutator(Matrix(h.h_a - h.h_b), Matrix(h.h_a + h.h_b))), 0.0));
}

inline void su2_checks(const SuiteConfig& cfg, std::vector<CheckResult>& out, std::vector<Metric>& metrics) {
  if (cfg.two_l_values.empty()) return;
  double raise = 0.0, lower = 0.0, closure = 0.0, relative = 0.0, exact = 0.0;
  for (const auto two_l : cfg.two_l_values) {
    auto rep = su2_generators<long double>(two_l);
    if (cfg.fault == "su2.lplus" && rep.dim() > 1) rep.perturb_lplus(1, 0, 1e-3);
    const auto r = algebra_residuals(rep);
    raise = std::max(raise, r.raise);
    lower = std::max(lower, r.lower);
    closure = std::max(closure, r.closure);
    exact += static_cast<double>(exact_closure_failures(rep));
    if (two_l > 0) {
      // Double-precision residual relative to the Casimir l(l+1).
      const auto rd = algebra_residuals(rep.template cast<double>());
      const double scale = 0.25 * static_cast<double>(two_l * (two_l + 2));
      relative = std::max({relative, rd.raise / scale, rd.lower / scale, rd.closure / scale});
    }
  }
  const auto [lo, hi] = std::minmax_element(cfg.two_l_values.begin(), cfg.two_l_values.end());
  const std::string size = "2l=" + std::to_string(*lo) + ".." + std::to_string(*hi);
  out.push_back(make_check("algebra.su2.raise", size, raise, 1e-13));
  out.push_back(make_check("algebra.su2.lower", size, lower, 1e-13));
  out.push_back(make_check("algebra.su2.closure", size, closure, 1e-13));
  out.push_back(make_check("algebra.su2.closure_exact", size, exact, 0.0));
  metrics.push_back({"algebra.su2.double_relative_residual", size, relative});
}

inline void su11_checks(const SuiteConfig& cfg, std::vector<CheckResult>& out, std::vector<Metric>& metrics) {
  const auto dim = cfg.dim;
  for (const auto two_k : cfg.two_k_values) {
    const std::string size = "2k=" + std::to_string(two_k) + ";D=" + std::to_string(dim);
    auto precise = su11_generators<long double>(two_k, dim);
    if (cfg.fault == "su11.lplus") precise.perturb_lplus(1, 0, 1e-3);
    const auto r = algebra_residuals(precise);
    const double tol = 1e-11 * static_cast<double>(dim);
    out.push_back(make_check("algebra.su11.raise", size, r.raise, tol));
    out.push_back(make_check("algebra.su11.lower", size, r.lower, tol));
    out.push_back(make_check("algebra.su11.closure", size, r.closure, tol));
    out.push_back(make_check("algebra.su11.closure_exact", size,
                             static_cast<double>(exact_closure_failures(precise)), 0.0));
    metrics.push_back({"algebra.su11.boundary_residual", size, r.boundary});

    const auto rep = precise.template cast<double>();

    const LadderPair hp = holstein_primakoff(rep);
    out.push_back(make_check("algebra.hp.adjoint", size, max_abs(hp.a_dagger - hp.a.adjoint()), 1e-14));
    double negative = 0;
    for (Eigen::Index i = 0; i + 1 < dim; ++i)
      if (hp.a_dagger(i + 1, i).real() < 0.0 || hp.a_dagger(i + 1, i).imag() != 0.0) ++negative;
    out.push_back(make_check("algebra.hp.nonnegative", size, negative, 0.0));
    if (two_k == 1) {
      double element = 0.0;
      for (Eigen::Index n = 0; n + 1 < dim; ++n) {
        element = std::max(element, std::abs(hp.a_dagger(n + 1, n) - std::sqrt(static_cast<double>(n + 1))));
        element = std::max(element, std::abs(hp.a(n, n + 1) - std::sqrt(static_cast<double>(n + 1))));
      }
      out.push_back(make_check("algebra.hp.h1_elements", size, element, 1e-13));
      const Matrix c = commutator(hp.a, hp.a_dagger) - Matrix::Identity(dim, dim);
      out.push_back(make_check("algebra.hp.commutator", size, max_abs_rows(c, dim - 1), cfg.tol));
      metrics.push_back({"algebra.hp.boundary_residual", size, max_abs(c.bottomRows(1))});
    }
  }
}

inline void contraction_checks(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  if (cfg.contraction_l.empty()) return;
  auto checks = check_contraction(run_contraction_study(cfg.contraction_l, 8));
  out.insert(out.end(), checks.begin(), checks.end());
}

inline void ladder_checks(std::int64_t n, double tol, std::vector<CheckResult>& out, std::vector<Metric>& metrics) {
  for (std::int64_t two_j = -(n - 1); two_j <= n - 1; ++two_j) {
    const PositionLadder ladder = ladder_from_positions(n, two_j);
    const auto size_m = static_cast<Eigen::Index>(ladder.sector.size());
    const std::string size = size_n(n) + ";2j=" + std::to_string(two_j);
    out.push_back(make_check("algebra.ladder.shift", size, ladder.shift_residual, tol));
    metrics.push_back({"algebra.ladder.finite_n_l3_offset", size, ladder.finite_n_l3_offset});
    if (size_m < 2) continue;
    // The last sector state has no partner above it; for j = 0 the shift
    // wraps it back to the bottom, so its row and column are left out.
    const Eigen::Index inner = size_m - 1;
    auto block = [inner](const Matrix& m) -> Matrix { return m.topLeftCorner(inner, inner); };
    out.push_back(make_check("algebra.ladder.lminus_forms", size,
                             max_abs(block(ladder.lminus) - block(ladder.lminus_alt)), tol));
    metrics.push_back({"algebra.ladder.boundary_wrap", size,
                       max_abs(ladder.lplus.col(inner))});
    const auto rep = su11_generators(std::abs(two_j) + 1, size_m);
    const double mismatch = std::max({max_abs(block(ladder.lplus) - block(rep.lplus())),
                                      max_abs(block(ladder.lminus) - block(rep.lminus())),
                                      max_abs(ladder.l3 - rep.l3()),
                                      max_abs(ladder.casimir - invariant_C(rep, two_j))});
    out.push_back(make_check("algebra.ladder.matches_su11", size, mismatch, 1e-11));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Identity suite

inline SuiteReport run_identity_suite(const SuiteConfig& cfg) {
  if (cfg.dim < 2) throw std::invalid_argument("identity suite: dim must be >= 2");
  for (auto n : cfg.n_values)
    if (n < 1) throw std::invalid_argument("identity suite: N must be >= 1");
  for (auto k : cfg.two_k_values)
    if (k < 1) throw std::invalid_argument("identity suite: 2k must be >= 1");
  for (auto l : cfg.two_l_values)
    if (l < 0) throw std::invalid_argument("identity suite: 2l must be >= 0");

  SuiteReport report{"identities", cfg, {}, {}};
  std::mt19937_64 rng(cfg.seed);
  for (const auto n : cfg.n_values) {
    detail::automaton_checks(n, rng, report.results);
    detail::spectral_checks(n, report.results);
    if (n >= 2) detail::ladder_checks(n, cfg.tol, report.results, report.metrics);
  }
  detail::su2_checks(cfg, report.results, report.metrics);
  detail::su11_checks(cfg, report.results, report.metrics);
  detail::contraction_checks(cfg, report.results);

  auto key = [](const auto& r) { return std::tie(r.name, r.size); };
  std::stable_sort(report.results.begin(), report.results.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::stable_sort(report.metrics.begin(), report.metrics.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return report;
}

// ---------------------------------------------------------------------------
// Geometric phase

struct PhaseCheckResult {
  std::int64_t period_count;
  Complex resulting_phase;   // common diagonal value of exp(−i𝓗T·cycles)
  double max_deviation;      // max |U − resulting_phase·I|
  bool is_geometric_minus_one;
  bool is_identity;
};

/// exp(−i𝓗·cycles·T) for 𝓗 = ωL3 on the D⁺_{1/2} truncation, T = 2π/ω.
/// 𝓗 is diagonal, so the exponential is taken entrywise.
inline Matrix periodic_evolution(std::int64_t dim, std::int64_t cycles, double omega = 1.0) {
  if (dim < 2) throw std::domain_error("periodic_evolution: dim must be >= 2");
  if (cycles < 1) throw std::domain_error("periodic_evolution: cycles must be >= 1");
  if (!(omega > 0.0)) throw std::domain_error("periodic_evolution: omega must be positive");
  const auto rep = su11_generators(1, dim);
  const double period = 2.0 * std::numbers::pi / omega;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double energy = omega * rep.l3()(i, i).real();
    u(i, i) = std::exp(Complex(0.0, -energy * period * static_cast<double>(cycles)));
  }
  return u;
}

inline PhaseCheckResult run_phase_check(std::int64_t dim, std::int64_t cycles, double omega = 1.0, double tol = 1e-12) {
  const Matrix u = periodic_evolution(dim, cycles, omega);
  const Complex phase = u(0, 0);
  const Matrix id = Matrix::Identity(dim, dim);
  PhaseCheckResult r{cycles, phase, max_abs(u - phase * id), false, false};
  r.is_geometric_minus_one = max_abs(u + id) < tol;
  r.is_identity = max_abs(u - id) < tol;
  return r;
}

// ---------------------------------------------------------------------------
// Figure data

enum class Figure { fig1, fig2 };

struct FigureSpec {
  std::string stem;
  TrajectoryParams params;
  std::int64_t touches;               // touch rows j = 0..touches
  std::int64_t trajectory_intervals;  // sampled touch intervals
  std::int64_t points_per_interval = 1000;
};

/// Fig. 1: β/α = 5/7 (N = 7 return). Fig. 2: β/α = 5/3 + π/40.
inline FigureSpec figure_spec(Figure which) {
  if (which == Figure::fig1) return {"fig1", TrajectoryParams::rational(Rational(5, 7)), 7, 7};
  return {"fig2", TrajectoryParams(1.0, 5.0 / 3.0 + std::numbers::pi / 40.0), 10'000, 40};
}

inline void write_trajectory_csv(std::ostream& out, const std::vector<std::pair<double, TrajectoryPoint>>& samples) {
  out << "t,x,y\n";
  for (const auto& [t, p] : samples)
    csv::write_row(out, csv::format_number(t), csv::format_number(p.x), csv::format_number(p.y));
}

inline void write_touch_csv(std::ostream& out, const std::vector<TouchEvent>& events) {
  out << "j,t,theta\n";
  for (const auto& ev : events)
    csv::write_row(out, csv::format_number(static_cast<long long>(ev.j)), csv::format_number(ev.time),
                   csv::format_number(ev.angle));
}

inline std::vector<std::pair<double, TrajectoryPoint>> read_trajectory_csv(std::istream& in) {
  const auto table = csv::read_table(in);
  if (table.header != std::vector<std::string>{"t", "x", "y"})
    throw std::invalid_argument("trajectory csv: expected header t,x,y");
  std::vector<std::pair<double, TrajectoryPoint>> out;
  for (const auto& row : table.rows)
    out.push_back({csv::parse_double(row[0]), {csv::parse_double(row[1]), csv::parse_double(row[2])}});
  return out;
}

inline std::vector<TouchEvent> read_touch_csv(std::istream& in) {
  const auto table = csv::read_table(in);
  if (table.header != std::vector<std::string>{"j", "t", "theta"})
    throw std::invalid_argument("touch csv: expected header j,t,theta");
  std::vector<TouchEvent> out;
  for (const auto& row : table.rows)
    out.push_back({csv::parse_integer(row[0]), csv::parse_double(row[1]), csv::parse_double(row[2]), std::nullopt});
  return out;
}

struct FigureFiles {
  std::filesystem::path trajectory;
  std::filesystem::path touches;
};

namespace detail {

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

inline void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace detail

/// Writes <stem>_trajectory.csv and <stem>_touches.csv into out_dir.
inline FigureFiles export_figure_data(const FigureSpec& spec, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());
  FigureFiles files{out_dir / (spec.stem + "_trajectory.csv"), out_dir / (spec.stem + "_touches.csv")};
  {
    auto out = detail::open_output(files.trajectory);
    write_trajectory_csv(out, sample_trajectory(spec.params, spec.trajectory_intervals, spec.points_per_interval));
    detail::finish_output(out, files.trajectory);
  }
  {
    auto out = detail::open_output(files.touches);
    write_touch_csv(out, touch_events(spec.params, spec.touches));
    detail::finish_output(out, files.touches);
  }
  return files;
}

inline FigureFiles export_figure_data(Figure which, const std::filesystem::path& out_dir) {
  return export_figure_data(figure_spec(which), out_dir);
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json to_json(const SuiteConfig& c) {
  return {{"n_values", c.n_values},   {"two_k_values", c.two_k_values},   {"dim", c.dim},
          {"two_l_values", c.two_l_values}, {"contraction_l", c.contraction_l}, {"tol", c.tol},
          {"seed", c.seed},           {"fault", c.fault}};
}

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : r.results)
    results.push_back({{"name", c.name}, {"size", c.size}, {"residual", c.residual},
                       {"tolerance", c.tolerance}, {"pass", c.pass}});
  nlohmann::json metrics = nlohmann::json::array();
  for (const auto& m : r.metrics) metrics.push_back({{"name", m.name}, {"size", m.size}, {"value", m.value}});
  return {{"schema", kReportSchema}, {"suite", r.suite},   {"config", to_json(r.config)},
          {"results", results},      {"metrics", metrics}, {"pass", r.all_passed()}};
}

inline void write_results_csv(std::ostream& out, const std::vector<CheckResult>& results) {
  out << "name,size,residual,tolerance,pass\n";
  for (const auto& c : results)
    csv::write_row(out, c.name, c.size, csv::format_number(c.residual), csv::format_number(c.tolerance),
                   c.pass ? "true" : "false");
}

inline nlohmann::json to_json(const ConvergenceReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json ratio = row.ratio_to_double ? nlohmann::json(*row.ratio_to_double) : nlohmann::json(nullptr);
    rows.push_back({{"l", row.l}, {"n", row.n}, {"measured_error", row.measured_error},
                    {"predicted_error", row.predicted_error}, {"ratio_to_double", ratio}});
  }
  return rows;
}

inline void write_convergence_csv(std::ostream& out, const ConvergenceReport& r) {
  out << "l,n,measured_error,predicted_error,ratio_to_double\n";
  for (const auto& row : r.rows)
    csv::write_row(out, csv::format_number(static_cast<long long>(row.l)), csv::format_number(static_cast<long long>(row.n)),
                   csv::format_number(row.measured_error), csv::format_number(row.predicted_error),
                   csv::format_number(row.ratio_to_double.value_or(std::nan(""))));
}

inline nlohmann::json to_json(const PhaseCheckResult& r) {
  return {{"period_count", r.period_count},
          {"phase_re", r.resulting_phase.real()},
          {"phase_im", r.resulting_phase.imag()},
          {"max_deviation", r.max_deviation},
          {"is_geometric_minus_one", r.is_geometric_minus_one},
          {"is_identity", r.is_identity}};
}

inline void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& spectrum) {
  out << "two_j,two_m,n_a,m_b,energy,phase_re,phase_im\n";
  for (const auto& e : spectrum)
    csv::write_row(out, csv::format_number(static_cast<long long>(e.label.two_j())),
                   csv::format_number(static_cast<long long>(e.label.two_m())),
                   csv::format_number(static_cast<long long>(e.label.n_a())),
                   csv::format_number(static_cast<long long>(e.label.m_b())), csv::format_number(e.energy),
                   csv::format_number(e.phase_eigenvalue.real()), csv::format_number(e.phase_eigenvalue.imag()));
}

inline nlohmann::json to_json(const std::vector<SpectrumEntry>& spectrum) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : spectrum)
    rows.push_back({{"two_j", e.label.two_j()}, {"two_m", e.label.two_m()}, {"n_a", e.label.n_a()},
                    {"m_b", e.label.m_b()}, {"energy", e.energy}, {"phase_re", e.phase_eigenvalue.real()},
                    {"phase_im", e.phase_eigenvalue.imag()}});
  return rows;
}

}  // namespace qlimit
