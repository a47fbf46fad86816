#pragma once

// Analytic eigenbases of the cyclic evolution operators.
//
// Two sign conventions are in use for the discrete-Fourier vectors:
//   forward: Σ_k e^{+i2πnk/N} (k)   eigenstates of the 't Hooft model
//   polar:   Σ_k e^{−i2πζnk} (k)    eigenstates of each pair-model factor
// with ζ = (1 − N)/N. All vectors are normalized to unit length.
//
// The pair eigenstates |n_A⟩ ⊗ |m_B⟩ are relabelled by j = (n_A − m_B)/2 and
// m = (n_A + m_B)/2. Half-integers are kept as twice their value.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlimit/automaton.hpp"
#include "qlimit/linalg.hpp"
#include "qlimit/phase.hpp"

namespace qlimit {

enum class FourierConvention { forward, polar };

namespace detail {

inline void check_mode(std::int64_t n_states, std::int64_t n) {
  if (n_states < 1) throw std::domain_error("N must be >= 1");
  if (n < 0 || n >= n_states)
    throw std::domain_error("mode " + std::to_string(n) + " outside 0.." + std::to_string(n_states - 1));
}

}  // namespace detail

/// Exponent of the k-th component (k = 1..N) of the n-th Fourier vector.
inline RationalAngle fourier_phase(std::int64_t n_states, std::int64_t n, std::int64_t k,
                                   FourierConvention convention) {
  if (convention == FourierConvention::forward)
    return RationalAngle::full_turns(Rational((n * k) % n_states, n_states));
  return -ZetaPhase(n_states).turns(n * k);
}

inline BasisVector fourier_eigenvector(std::int64_t n_states, std::int64_t n,
                                       FourierConvention convention = FourierConvention::polar) {
  detail::check_mode(n_states, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_states));
  BasisVector v(n_states);
  for (std::int64_t k = 1; k <= n_states; ++k) v(k - 1) = norm * fourier_phase(n_states, n, k, convention).to_complex();
  return v;
}

/// Columns are the polar-convention eigenvectors n = 0..N−1.
inline Matrix polar_basis(std::int64_t n_states) {
  Matrix f(n_states, n_states);
  for (std::int64_t n = 0; n < n_states; ++n) f.col(n) = fourier_eigenvector(n_states, n);
  return f;
}

/// λ_n = e^{i2πn/N} as an exact angle.
inline RationalAngle eigenphase_of(std::int64_t n_states, std::int64_t n) {
  detail::check_mode(n_states, n);
  return RationalAngle::full_turns(Rational(n, n_states));
}

/// Eigenvalue of a phase-free factor on the polar vector n.
inline Complex eigenvalue_of(std::int64_t n_states, std::int64_t n) { return eigenphase_of(n_states, n).to_complex(); }

/// Eigenphase of the 't Hooft matrix on the forward vector n:
/// e^{−iπ/N}·e^{−i2πn/N} = e^{−iπ(2n+1)/N}, i.e. e^{−iHτ} with H = ω(n + 1/2).
inline RationalAngle thooft_eigenphase(std::int64_t n_states, std::int64_t n) {
  detail::check_mode(n_states, n);
  return RationalAngle(-(2 * n + 1), n_states);
}

/// Label |j,m⟩ ≡ |n_A⟩ ⊗ |m_B⟩ with j and m stored doubled.
class JMLabel {
 public:
  static JMLabel from_occupations(std::int64_t n_states, std::int64_t n_a, std::int64_t m_b) {
    detail::check_mode(n_states, n_a);
    detail::check_mode(n_states, m_b);
    return JMLabel(n_a - m_b, n_a + m_b, n_a, m_b);
  }

  static JMLabel from_twice(std::int64_t n_states, std::int64_t two_j, std::int64_t two_m) {
    if ((two_j - two_m) % 2 != 0)
      throw std::domain_error("JMLabel: 2j and 2m must have equal parity");
    if (std::abs(two_j) > two_m)
      throw std::domain_error("JMLabel: need |j| <= m");
    const std::int64_t n_a = (two_m + two_j) / 2;
    const std::int64_t m_b = (two_m - two_j) / 2;
    if (n_a > n_states - 1 || m_b > n_states - 1)
      throw std::domain_error("JMLabel: (j=" + std::to_string(two_j) + "/2, m=" + std::to_string(two_m) +
                              "/2) outside the N=" + std::to_string(n_states) + " cutoff");
    return JMLabel(two_j, two_m, n_a, m_b);
  }

  [[nodiscard]] std::int64_t two_j() const { return two_j_; }
  [[nodiscard]] std::int64_t two_m() const { return two_m_; }
  [[nodiscard]] std::int64_t n_a() const { return n_a_; }
  [[nodiscard]] std::int64_t m_b() const { return m_b_; }
  [[nodiscard]] double j() const { return 0.5 * static_cast<double>(two_j_); }
  [[nodiscard]] double m() const { return 0.5 * static_cast<double>(two_m_); }

  /// Index of |n_A⟩ ⊗ |m_B⟩ in the A-major polar product basis.
  [[nodiscard]] std::int64_t polar_index(std::int64_t n_states) const { return n_a_ * n_states + m_b_; }

  friend bool operator==(const JMLabel&, const JMLabel&) = default;
  friend auto operator<=>(const JMLabel& a, const JMLabel& b) {
    if (auto c = a.two_j_ <=> b.two_j_; c != 0) return c;
    return a.two_m_ <=> b.two_m_;
  }

 private:
  JMLabel(std::int64_t two_j, std::int64_t two_m, std::int64_t n_a, std::int64_t m_b)
      : two_j_(two_j), two_m_(two_m), n_a_(n_a), m_b_(m_b) {}

  std::int64_t two_j_;
  std::int64_t two_m_;
  std::int64_t n_a_;
  std::int64_t m_b_;
};

/// All N² labels ordered by (2j, 2m).
inline std::vector<JMLabel> jm_labels(std::int64_t n_states) {
  std::vector<JMLabel> out;
  out.reserve(static_cast<std::size_t>(n_states * n_states));
  for (std::int64_t two_j = -(n_states - 1); two_j <= n_states - 1; ++two_j)
    for (std::int64_t two_m = std::abs(two_j); two_m + std::abs(two_j) <= 2 * (n_states - 1); two_m += 2)
      out.push_back(JMLabel::from_twice(n_states, two_j, two_m));
  return out;
}

/// Labels with fixed j, ascending m = |j|, |j|+1, …, N−1−|j|.
inline std::vector<JMLabel> jm_sector(std::int64_t n_states, std::int64_t two_j) {
  if (std::abs(two_j) > n_states - 1)
    throw std::domain_error("jm_sector: |j| exceeds (N-1)/2");
  std::vector<JMLabel> out;
  for (std::int64_t two_m = std::abs(two_j); two_m + std::abs(two_j) <= 2 * (n_states - 1); two_m += 2)
    out.push_back(JMLabel::from_twice(n_states, two_j, two_m));
  return out;
}

/// |j,m⟩ = (1/N) Σ_{k,l} e^{−i2πζ(m(k+l) + j(k−l))} (k)_A ⊗ (l)_B.
/// The exponent equals −2πζ(k·n_A + l·m_B), which is how it is evaluated.
inline BasisVector jm_state(std::int64_t n_states, const JMLabel& label) {
  // Re-validate against this N.
  const JMLabel checked = JMLabel::from_twice(n_states, label.two_j(), label.two_m());
  const ZetaPhase zeta(n_states);
  const double norm = 1.0 / static_cast<double>(n_states);
  BasisVector v(n_states * n_states);
  for (std::int64_t k = 1; k <= n_states; ++k)
    for (std::int64_t l = 1; l <= n_states; ++l) {
      const RationalAngle phase = -zeta.turns(k * checked.n_a() + l * checked.m_b());
      v(pair_index(n_states, {k, l})) = norm * phase.to_complex();
    }
  return v;
}

/// Columns jm_state(label) for the given labels.
inline Matrix jm_basis(std::int64_t n_states, const std::vector<JMLabel>& labels) {
  Matrix v(n_states * n_states, static_cast<Eigen::Index>(labels.size()));
  for (std::size_t c = 0; c < labels.size(); ++c) v.col(static_cast<Eigen::Index>(c)) = jm_state(n_states, labels[c]);
  return v;
}

/// Eigenvalue of U(τ) = U_A ⊗ U_B on |j,m⟩: e^{i2πζ·2m}.
inline RationalAngle jm_evolution_phase(std::int64_t n_states, const JMLabel& label) {
  return ZetaPhase(n_states).turns(label.two_m());
}

/// Eigenvalue of U_A(τ) ⊗ U_B(−τ) on |j,m⟩: e^{i2πζ·2j}.
inline RationalAngle jm_counter_phase(std::int64_t n_states, const JMLabel& label) {
  return ZetaPhase(n_states).turns(label.two_j());
}

/// ω = −ζ·2π/τ; tends to 2π/τ as N → ∞.
inline double formal_frequency(std::int64_t n_states, double tau) {
  return 2.0 * std::numbers::pi / tau * boost::rational_cast<double>(-ZetaPhase(n_states).value());
}

struct SpectrumEntry {
  JMLabel label;
  double energy;            // units of 1/τ
  Complex phase_eigenvalue;  // e^{−iEτ}
};

/// E = (2π/τ)(−ζ·2m + n_branch) for every label of the cutoff N.
inline std::vector<SpectrumEntry> hamiltonian_spectrum(std::int64_t n_states, double tau, std::int64_t n_branch = 1) {
  if (!(tau > 0.0)) throw std::domain_error("hamiltonian_spectrum: tau must be positive");
  const Rational minus_zeta = -ZetaPhase(n_states).value();
  std::vector<SpectrumEntry> out;
  for (const auto& label : jm_labels(n_states)) {
    const Rational turns = minus_zeta * label.two_m() + n_branch;
    const double energy = 2.0 * std::numbers::pi / tau * boost::rational_cast<double>(turns);
    out.push_back({label, energy, RationalAngle::full_turns(-turns).to_complex()});
  }
  return out;
}

/// (H_A − H_B)/2 on |j,m⟩ at finite N: −(2πζ/τ)·j = ω·j.
inline double invariant_excess(std::int64_t n_states, double tau, const JMLabel& label) {
  return formal_frequency(n_states, tau) * label.j();
}

struct PairHamiltonians {
  Matrix h_a;
  Matrix h_b;
};

/// H_A and H_B as diagonal matrices in the polar product basis
/// (index n_A·N + m_B). The branch integer is split evenly between the two
/// factors so that H_A + H_B matches hamiltonian_spectrum.
inline PairHamiltonians polar_hamiltonians(std::int64_t n_states, double tau, std::int64_t n_branch = 1) {
  const double omega = formal_frequency(n_states, tau);
  const double offset = std::numbers::pi / tau * static_cast<double>(n_branch);
  const auto dim = n_states * n_states;
  PairHamiltonians h{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
  for (std::int64_t n_a = 0; n_a < n_states; ++n_a)
    for (std::int64_t m_b = 0; m_b < n_states; ++m_b) {
      const auto idx = n_a * n_states + m_b;
      h.h_a(idx, idx) = omega * static_cast<double>(n_a) + offset;
      h.h_b(idx, idx) = omega * static_cast<double>(m_b) + offset;
    }
  return h;
}

}  // namespace qlimit
