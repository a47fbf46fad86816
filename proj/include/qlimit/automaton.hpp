#pragma once

// Deterministic cyclic automata and their one-step evolution operators.
//
// Positions are labelled k = 1..N with (0) ≡ (N). The position (k) is the
// unit vector e_k, stored at 0-based index k − 1. One step maps (k) → (k+1)
// and wraps (N) → (1), so the evolution matrix has ones on the subdiagonal
// and a single one in the top-right corner.
//
// Pair states (k)_A ⊗ (l)_B live at index (k − 1)·N + (l − 1) (A-major).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qlimit/linalg.hpp"
#include "qlimit/phase.hpp"

namespace qlimit {

class CyclicModel {
 public:
  /// Cyclic shift with a global phase e^{iπ·phase} applied on every step.
  CyclicModel(std::int64_t n_states, double tau, RationalAngle phase_per_step)
      : n_states_(n_states), tau_(tau), phase_(phase_per_step) {
    if (n_states < 1) throw std::domain_error("CyclicModel: N must be >= 1");
    if (!(tau > 0.0)) throw std::domain_error("CyclicModel: tau must be positive");
  }

  /// 't Hooft's phase choice e^{−iπ/N}; U^N = −1.
  static CyclicModel thooft(std::int64_t n_states, double tau = 1.0) {
    if (n_states < 1) throw std::domain_error("CyclicModel: N must be >= 1");
    return {n_states, tau, RationalAngle(-1, n_states)};
  }

  /// Phase-free factor used by each particle of the pair model; U^N = 1.
  static CyclicModel plain(std::int64_t n_states, double tau = 1.0) {
    return {n_states, tau, RationalAngle::zero()};
  }

  [[nodiscard]] std::int64_t n_states() const { return n_states_; }
  [[nodiscard]] double tau() const { return tau_; }
  [[nodiscard]] RationalAngle phase_per_step() const { return phase_; }

 private:
  std::int64_t n_states_;
  double tau_;
  RationalAngle phase_;
};

/// Two synchronized phase-free factors sharing the cutoff N and time step.
class PairModel {
 public:
  PairModel(CyclicModel a, CyclicModel b) : a_(a), b_(b) {
    if (a.n_states() != b.n_states())
      throw std::invalid_argument("PairModel: factors must share N (" + std::to_string(a.n_states()) +
                                  " vs " + std::to_string(b.n_states()) + ")");
    if (a.tau() != b.tau()) throw std::invalid_argument("PairModel: factors must share tau");
    if (!a.phase_per_step().is_zero() || !b.phase_per_step().is_zero())
      throw std::invalid_argument("PairModel: factors must be phase-free");
  }

  explicit PairModel(std::int64_t n_states, double tau = 1.0)
      : PairModel(CyclicModel::plain(n_states, tau), CyclicModel::plain(n_states, tau)) {}

  [[nodiscard]] const CyclicModel& model_a() const { return a_; }
  [[nodiscard]] const CyclicModel& model_b() const { return b_; }
  [[nodiscard]] std::int64_t n_states() const { return a_.n_states(); }
  [[nodiscard]] double tau() const { return a_.tau(); }

 private:
  CyclicModel a_;
  CyclicModel b_;
};

struct DeterministicState {
  std::int64_t k;  // 1..N
  friend bool operator==(const DeterministicState&, const DeterministicState&) = default;
};

struct PairState {
  std::int64_t k_a;  // 1..N
  std::int64_t k_b;  // 1..N
  friend bool operator==(const PairState&, const PairState&) = default;
};

/// A deterministic state together with the global phase it has picked up.
template <typename State>
struct Phased {
  State state;
  RationalAngle phase;
};

namespace detail {

inline void check_position(std::int64_t n_states, std::int64_t k) {
  if (k < 1 || k > n_states)
    throw std::domain_error("position " + std::to_string(k) + " outside 1.." + std::to_string(n_states));
}

/// (k + steps) reduced into 1..N.
inline std::int64_t shift_position(std::int64_t n_states, std::int64_t k, std::int64_t steps) {
  std::int64_t z = (k - 1 + steps % n_states) % n_states;
  if (z < 0) z += n_states;
  return z + 1;
}

}  // namespace detail

/// Embeds (k) as the one-hot vector e_k.
inline BasisVector one_hot(std::int64_t n_states, DeterministicState s) {
  detail::check_position(n_states, s.k);
  BasisVector v = BasisVector::Zero(n_states);
  v(s.k - 1) = 1.0;
  return v;
}

inline std::int64_t pair_index(std::int64_t n_states, PairState s) {
  return (s.k_a - 1) * n_states + (s.k_b - 1);
}

inline BasisVector one_hot(std::int64_t n_states, PairState s) {
  detail::check_position(n_states, s.k_a);
  detail::check_position(n_states, s.k_b);
  BasisVector v = BasisVector::Zero(n_states * n_states);
  v(pair_index(n_states, s)) = 1.0;
  return v;
}

inline DeterministicState step(const CyclicModel& model, DeterministicState s) {
  detail::check_position(model.n_states(), s.k);
  return {detail::shift_position(model.n_states(), s.k, 1)};
}

inline PairState step(const PairModel& pair, PairState s) {
  const auto n = pair.n_states();
  detail::check_position(n, s.k_a);
  detail::check_position(n, s.k_b);
  return {detail::shift_position(n, s.k_a, 1), detail::shift_position(n, s.k_b, 1)};
}

/// Phase times the cyclic permutation (k) → (k+1).
inline Matrix evolution_matrix(const CyclicModel& model) {
  const auto n = model.n_states();
  const Complex phase = model.phase_per_step().to_complex();
  Matrix u = Matrix::Zero(n, n);
  for (std::int64_t col = 0; col < n; ++col) u((col + 1) % n, col) = phase;
  return u;
}

/// U_A ⊗ U_B in the A-major convention.
inline Matrix tensor_evolution(const PairModel& pair) {
  return kron(evolution_matrix(pair.model_a()), evolution_matrix(pair.model_b()));
}

/// U_A(τ) ⊗ U_B(−τ): A forward one step, B backward one step.
inline Matrix counter_evolution(const PairModel& pair) {
  return kron(evolution_matrix(pair.model_a()), evolution_matrix(pair.model_b()).adjoint());
}

/// Applies U^steps to a position state by index arithmetic. The phase is
/// accumulated exactly.
inline Phased<DeterministicState> evolve(const CyclicModel& model, DeterministicState s, std::int64_t steps) {
  if (steps < 0) throw std::domain_error("evolve: steps must be >= 0");
  detail::check_position(model.n_states(), s.k);
  return {{detail::shift_position(model.n_states(), s.k, steps)}, steps * model.phase_per_step()};
}

inline Phased<PairState> evolve(const PairModel& pair, PairState s, std::int64_t steps) {
  if (steps < 0) throw std::domain_error("evolve: steps must be >= 0");
  const auto n = pair.n_states();
  detail::check_position(n, s.k_a);
  detail::check_position(n, s.k_b);
  return {{detail::shift_position(n, s.k_a, steps), detail::shift_position(n, s.k_b, steps)},
          RationalAngle::zero()};
}

/// U^steps on an arbitrary amplitude vector: a cyclic rotation of the
/// amplitudes followed by one multiplication by the accumulated phase.
inline BasisVector evolve(const CyclicModel& model, const BasisVector& v, std::int64_t steps) {
  if (steps < 0) throw std::domain_error("evolve: steps must be >= 0");
  const auto n = model.n_states();
  if (v.size() != n) throw std::invalid_argument("evolve: vector length must equal N");
  BasisVector out(n);
  for (std::int64_t k = 1; k <= n; ++k) out(detail::shift_position(n, k, steps) - 1) = v(k - 1);
  const RationalAngle phase = steps * model.phase_per_step();
  if (!phase.is_zero()) out *= phase.to_complex();
  return out;
}

inline BasisVector evolve(const PairModel& pair, const BasisVector& v, std::int64_t steps) {
  if (steps < 0) throw std::domain_error("evolve: steps must be >= 0");
  const auto n = pair.n_states();
  if (v.size() != n * n) throw std::invalid_argument("evolve: vector length must equal N^2");
  BasisVector out(n * n);
  for (std::int64_t ka = 1; ka <= n; ++ka)
    for (std::int64_t kb = 1; kb <= n; ++kb) {
      const PairState to{detail::shift_position(n, ka, steps), detail::shift_position(n, kb, steps)};
      out(pair_index(n, to)) = v(pair_index(n, {ka, kb}));
    }
  return out;
}

}  // namespace qlimit
