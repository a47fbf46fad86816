#pragma once

// Generator matrices for SU(2) and the SU(1,1) discrete series, the ladder
// operators rebuilt from the pair model's position operators, the
// Holstein–Primakoff map and the SU(2) → h(1) contraction.
//
// Basis ordering is always by increasing L3 eigenvalue. A raising operator
// therefore lives on the subdiagonal: L+(i+1, i) = ⟨i+1|L+|i⟩.
//
// Truncated SU(1,1) representations cannot satisfy [L+, L−] = −2L3 on their
// last row. Identity checks skip that row and report it separately.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlimit/automaton.hpp"
#include "qlimit/linalg.hpp"
#include "qlimit/phase.hpp"
#include "qlimit/spectral.hpp"

namespace qlimit {

enum class AlgebraKind { su2, su11_discrete };

/// Matrix element √(num/den) kept as its exact radicand.
struct Radicand {
  std::int64_t num;
  std::int64_t den;
  template <typename Real = double>
  [[nodiscard]] Real root() const {
    using std::sqrt;
    return sqrt(static_cast<Real>(num) / static_cast<Real>(den));
  }
  friend bool operator==(const Radicand&, const Radicand&) = default;
};

/// Generator triple (L3, L+, L−). Real selects the working precision; the
/// exact radicands are kept alongside so any precision can be rebuilt.
template <typename Real = double>
class AlgebraRep {
 public:
  using MatrixType = BasicMatrix<Real>;

  AlgebraRep(AlgebraKind kind, std::int64_t two_index, std::vector<Radicand> raising, std::vector<Rational> weights)
      : kind_(kind), two_index_(two_index), raising_(std::move(raising)), weights_(std::move(weights)) {
    const auto dim = static_cast<Eigen::Index>(weights_.size());
    if (static_cast<Eigen::Index>(raising_.size()) + 1 != dim)
      throw std::invalid_argument("AlgebraRep: need dim-1 raising elements");
    l3_ = MatrixType::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      l3_(i, i) = static_cast<Real>(weights_[static_cast<std::size_t>(i)].numerator()) /
                  static_cast<Real>(weights_[static_cast<std::size_t>(i)].denominator());
    lplus_ = MatrixType::Zero(dim, dim);
    for (Eigen::Index i = 0; i + 1 < dim; ++i) lplus_(i + 1, i) = raising_[static_cast<std::size_t>(i)].template root<Real>();
    lminus_ = lplus_.adjoint();
  }

  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  /// 2l for su2, 2k for su11.
  [[nodiscard]] std::int64_t two_index() const { return two_index_; }
  [[nodiscard]] Eigen::Index dim() const { return l3_.rows(); }
  [[nodiscard]] const MatrixType& l3() const { return l3_; }
  [[nodiscard]] const MatrixType& lplus() const { return lplus_; }
  [[nodiscard]] const MatrixType& lminus() const { return lminus_; }
  /// ⟨i+1|L+|i⟩² as exact rationals, i = 0..dim−2.
  [[nodiscard]] const std::vector<Radicand>& raising_radicands() const { return raising_; }
  /// Exact L3 eigenvalues.
  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }

  /// Same representation at another precision.
  template <typename Other>
  [[nodiscard]] AlgebraRep<Other> cast() const {
    AlgebraRep<Other> out(kind_, two_index_, raising_, weights_);
    if (perturbed_) out.perturb_lplus(perturb_row_, perturb_col_, perturb_delta_);
    return out;
  }

  /// Adds delta to one L+ entry. Only used to exercise failure paths.
  void perturb_lplus(Eigen::Index row, Eigen::Index col, double delta) {
    lplus_(row, col) += static_cast<Real>(delta);
    perturbed_ = true;
    perturb_row_ = row;
    perturb_col_ = col;
    perturb_delta_ = delta;
  }

 private:
  AlgebraKind kind_;
  std::int64_t two_index_;
  std::vector<Radicand> raising_;
  std::vector<Rational> weights_;
  MatrixType l3_;
  MatrixType lplus_;
  MatrixType lminus_;
  bool perturbed_ = false;
  Eigen::Index perturb_row_ = 0;
  Eigen::Index perturb_col_ = 0;
  double perturb_delta_ = 0.0;
};

/// Spin-l representation, basis |l,m⟩ for m = −l..l, n = m + l:
/// L+|l,m⟩ = √((2l−n)(n+1)) |l,m+1⟩.
template <typename Real = double>
AlgebraRep<Real> su2_generators(std::int64_t two_l) {
  if (two_l < 0) throw std::domain_error("su2_generators: 2l must be >= 0");
  std::vector<Radicand> raising;
  raising.reserve(static_cast<std::size_t>(two_l));
  for (std::int64_t n = 0; n < two_l; ++n) raising.push_back({(two_l - n) * (n + 1), 1});
  std::vector<Rational> weights;
  for (std::int64_t n = 0; n <= two_l; ++n) weights.emplace_back(2 * n - two_l, 2);
  return {AlgebraKind::su2, two_l, std::move(raising), std::move(weights)};
}

/// Discrete series D⁺_k truncated to n = 0..dim−1:
/// L3 = n + k, L+|k,n⟩ = √((n+2k)(n+1)) |k,n+1⟩.
template <typename Real = double>
AlgebraRep<Real> su11_generators(std::int64_t two_k, std::int64_t dim) {
  if (two_k < 1) throw std::domain_error("su11_generators: 2k must be >= 1");
  if (dim < 2) throw std::domain_error("su11_generators: dim must be >= 2");
  std::vector<Radicand> raising;
  raising.reserve(static_cast<std::size_t>(dim - 1));
  for (std::int64_t n = 0; n + 1 < dim; ++n) raising.push_back({(n + two_k) * (n + 1), 1});
  std::vector<Rational> weights;
  for (std::int64_t n = 0; n < dim; ++n) weights.emplace_back(2 * n + two_k, 2);
  return {AlgebraKind::su11_discrete, two_k, std::move(raising), std::move(weights)};
}

struct AlgebraResiduals {
  double raise;     // ‖[L3, L+] − L+‖_max
  double lower;     // ‖[L3, L−] + L−‖_max
  double closure;   // ‖[L+, L−] ∓ 2L3‖_max, boundary row excluded for su11
  double boundary;  // closure residual on the excluded row (0 for su2)
};

/// Commutator residuals evaluated at the representation's own precision.
/// The generators are bidiagonal, so the products are taken sparse.
template <typename Real>
AlgebraResiduals algebra_residuals(const AlgebraRep<Real>& rep) {
  using Sparse = BasicSparse<Real>;
  using Dense = BasicMatrix<Real>;
  const Sparse l3 = rep.l3().sparseView();
  const Sparse lp = rep.lplus().sparseView();
  const Sparse lm = rep.lminus().sparseView();
  AlgebraResiduals r{};
  r.raise = max_abs(Dense(commutator(l3, lp) - lp));
  r.lower = max_abs(Dense(commutator(l3, lm) + lm));
  const Real two(2);
  if (rep.kind() == AlgebraKind::su2) {
    r.closure = max_abs(Dense(commutator(lp, lm) - two * l3));
    r.boundary = 0.0;
  } else {
    const Dense c = commutator(lp, lm) + two * l3;
    r.closure = max_abs_rows(c, rep.dim() - 1);
    r.boundary = max_abs(c.bottomRows(1));
  }
  return r;
}

/// Closure relation checked on the exact radicands: [L+, L−] is diagonal with
/// entries r_{n−1} − r_n, which must equal ±2·L3 exactly. Returns the number
/// of failing interior rows.
template <typename Real>
std::int64_t exact_closure_failures(const AlgebraRep<Real>& rep) {
  const auto& r = rep.raising_radicands();
  const auto& w = rep.weights();
  const auto dim = static_cast<std::int64_t>(w.size());
  const std::int64_t rows = rep.kind() == AlgebraKind::su2 ? dim : dim - 1;
  const Rational sign = rep.kind() == AlgebraKind::su2 ? Rational(2) : Rational(-2);
  std::int64_t failures = 0;
  for (std::int64_t n = 0; n < rows; ++n) {
    const Rational below = n > 0 ? Rational(r[n - 1].num, r[n - 1].den) : Rational(0);
    const Rational above = n + 1 < dim ? Rational(r[n].num, r[n].den) : Rational(0);
    if (below - above != sign * w[static_cast<std::size_t>(n)]) ++failures;
  }
  return failures;
}

enum class LadderSource { contraction, holstein_primakoff };

struct LadderPair {
  Matrix a;
  Matrix a_dagger;
  LadderSource source;
};

/// ⟨n+1|a†|n⟩ = √((2l−n)(n+1)/(2l)) for the contracted spin-l generators.
inline double su2_contract_element(std::int64_t two_l, std::int64_t n) {
  if (two_l < 1) throw std::domain_error("su2_contract_element: 2l must be >= 1");
  if (n < 0 || n >= two_l) throw std::domain_error("su2_contract_element: n outside 0..2l-1");
  return std::sqrt(static_cast<double>((two_l - n) * (n + 1)) / static_cast<double>(two_l));
}

/// a† = L+/√(2l), a = L−/√(2l).
inline LadderPair su2_contract(std::int64_t two_l) {
  if (two_l < 2) throw std::domain_error("su2_contract: 2l must be >= 2");
  const Eigen::Index dim = two_l + 1;
  Matrix ad = Matrix::Zero(dim, dim);
  for (std::int64_t n = 0; n < two_l; ++n) ad(n + 1, n) = su2_contract_element(two_l, n);
  return {ad.adjoint(), ad, LadderSource::contraction};
}

/// |h(1) element − √(n+1)| for the contracted generators.
inline double contraction_error(std::int64_t two_l, std::int64_t n) {
  return std::abs(su2_contract_element(two_l, n) - std::sqrt(static_cast<double>(n + 1)));
}

/// The fixed-j invariant 𝒞 = j·I on the D⁺_{|j|+1/2} representation.
template <typename Real>
BasicMatrix<Real> invariant_C(const AlgebraRep<Real>& rep, std::int64_t two_j) {
  if (rep.kind() != AlgebraKind::su11_discrete)
    throw std::domain_error("invariant_C: requires an su11 discrete-series representation");
  if (rep.two_index() != std::abs(two_j) + 1)
    throw std::domain_error("invariant_C: j=" + std::to_string(two_j) + "/2 does not label D+ with 2k=" +
                            std::to_string(rep.two_index()));
  return BasicMatrix<Real>::Identity(rep.dim(), rep.dim()) * (static_cast<Real>(two_j) / Real(2));
}

/// Discrete-series label: k = |j| + 1/2, n = m − |j|.
struct SeriesLabel {
  std::int64_t two_k;
  std::int64_t n;
  friend bool operator==(const SeriesLabel&, const SeriesLabel&) = default;
};

struct TwiceJM {
  std::int64_t two_j;
  std::int64_t two_m;
  friend bool operator==(const TwiceJM&, const TwiceJM&) = default;
};

inline SeriesLabel series_label(TwiceJM jm) {
  const std::int64_t abs_two_j = std::abs(jm.two_j);
  if (jm.two_m < abs_two_j || (jm.two_m - abs_two_j) % 2 != 0)
    throw std::domain_error("series_label: need m - |j| a non-negative integer");
  return {abs_two_j + 1, (jm.two_m - abs_two_j) / 2};
}

/// Inverse of series_label. The sign of j is not recoverable from k.
inline TwiceJM jm_from_series(SeriesLabel s, bool negative_j) {
  if (s.two_k < 1 || s.n < 0) throw std::domain_error("jm_from_series: need 2k >= 1 and n >= 0");
  const std::int64_t abs_two_j = s.two_k - 1;
  return {negative_j ? -abs_two_j : abs_two_j, 2 * s.n + abs_two_j};
}

/// Time pointers on the pair space: N_A (k)_A = k (k)_A, N_B (l)_B = l (l)_B.
struct PositionOperators {
  Matrix n_a;
  Matrix n_b;
};

inline PositionOperators position_operators(std::int64_t n_states) {
  const auto dim = n_states * n_states;
  PositionOperators p{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
  for (std::int64_t k = 1; k <= n_states; ++k)
    for (std::int64_t l = 1; l <= n_states; ++l) {
      const auto idx = pair_index(n_states, {k, l});
      p.n_a(idx, idx) = static_cast<double>(k);
      p.n_b(idx, idx) = static_cast<double>(l);
    }
  return p;
}

/// e^{−i2πζ(N_A + N_B)} as a diagonal phase matrix in the position basis.
inline Matrix position_shift_operator(std::int64_t n_states) {
  const PositionOperators pos = position_operators(n_states);
  const ZetaPhase zeta(n_states);
  const auto dim = n_states * n_states;
  Matrix s = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto total = static_cast<std::int64_t>(std::llround(pos.n_a(i, i).real() + pos.n_b(i, i).real()));
    s(i, i) = (-zeta.turns(total)).to_complex();
  }
  return s;
}

/// SU(1,1) generators of one fixed-j sector, rebuilt from the pair model.
struct PositionLadder {
  std::int64_t n_states;
  std::int64_t two_j;
  std::vector<JMLabel> sector;  // ascending m; last entry is the raising boundary
  Matrix shift;                 // e^{−i2πζ(N_A+N_B)} restricted to the sector
  Matrix l3;                    // diag(m + 1/2)
  Matrix casimir;               // j·I
  Matrix lplus;                 // shift · √((L3 + 1/2)² − 𝒞²)
  Matrix lminus;                // √((L3 + 1/2)² − 𝒞²) · shift†
  Matrix lminus_alt;            // shift† · √((L3 − 1/2)² − 𝒞²)
  double shift_residual;        // max_m ‖S|j,m−1⟩ − |j,m⟩‖_max on the full pair space
  double finite_n_l3_offset;    // |N/(2(N−1)) − 1/2|: the L3 offset before N → ∞

  [[nodiscard]] Eigen::Index boundary_index() const { return static_cast<Eigen::Index>(sector.size()) - 1; }
};

inline PositionLadder ladder_from_positions(std::int64_t n_states, std::int64_t two_j) {
  if (n_states < 2) throw std::domain_error("ladder_from_positions: N must be >= 2");
  PositionLadder out;
  out.n_states = n_states;
  out.two_j = two_j;
  out.sector = jm_sector(n_states, two_j);
  const auto size = static_cast<Eigen::Index>(out.sector.size());

  const Matrix s_full = position_shift_operator(n_states);
  const Matrix basis = jm_basis(n_states, out.sector);
  out.shift = basis.adjoint() * s_full * basis;

  out.shift_residual = 0.0;
  for (Eigen::Index i = 1; i < size; ++i) {
    const Vector shifted = s_full * basis.col(i - 1);
    out.shift_residual = std::max(out.shift_residual, max_abs(shifted - basis.col(i)));
  }

  // In twice-units: (L3 ± 1/2)² − j² = ((2m + 1 ± 1)² − (2j)²)/4 with L3 = m + 1/2.
  auto root_factor = [&](int sign) {
    Matrix d = Matrix::Zero(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      const std::int64_t two_shifted = out.sector[static_cast<std::size_t>(i)].two_m() + 1 + sign;
      const std::int64_t radicand = (two_shifted - two_j) * (two_shifted + two_j);
      d(i, i) = std::sqrt(static_cast<double>(radicand) / 4.0);
    }
    return d;
  };
  out.l3 = Matrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) out.l3(i, i) = out.sector[static_cast<std::size_t>(i)].m() + 0.5;
  out.casimir = Matrix::Identity(size, size) * (0.5 * static_cast<double>(two_j));

  const Matrix root_up = root_factor(+1);
  const Matrix root_down = root_factor(-1);
  out.lplus = out.shift * root_up;
  out.lminus = root_up * out.shift.adjoint();
  out.lminus_alt = out.shift.adjoint() * root_down;
  out.finite_n_l3_offset = std::abs(static_cast<double>(n_states) / (2.0 * static_cast<double>(n_states - 1)) - 0.5);
  return out;
}

/// a = (L3 + 1/2)^{−1/2} L−,  a† = L+ (L3 + 1/2)^{−1/2}.
inline LadderPair holstein_primakoff(const AlgebraRep<double>& rep) {
  if (rep.kind() != AlgebraKind::su11_discrete)
    throw std::domain_error("holstein_primakoff: requires an su11 discrete-series representation");
  const Eigen::Index dim = rep.dim();
  Matrix inv_root = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double shifted = rep.l3()(i, i).real() + 0.5;
    if (!(shifted > 0.0)) throw std::domain_error("holstein_primakoff: L3 + 1/2 must be positive");
    inv_root(i, i) = 1.0 / std::sqrt(shifted);
  }
  return {inv_root * rep.lminus(), rep.lplus() * inv_root, LadderSource::holstein_primakoff};
}

}  // namespace qlimit
