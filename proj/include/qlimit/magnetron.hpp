#pragma once

// Continuous trajectory behind the discrete models:
//   x(t) = cos(αt) cos(βt),  y(t) = −cos(αt) sin(βt).
// The orbit touches the unit circle at t_j = jπ/α, at the angle
// θ_j = jπ − βt_j = j(1 − β/α)π. Observing only these touch points gives the
// discrete evolution; a rational β/α makes it periodic.

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlimit/phase.hpp"

namespace qlimit {

struct TrajectoryParams {
  double alpha;
  double beta;
  std::optional<Rational> ratio_hint;  // exact β/α when it is rational

  TrajectoryParams(double alpha_, double beta_, std::optional<Rational> hint = std::nullopt)
      : alpha(alpha_), beta(beta_), ratio_hint(hint) {
    if (!(alpha > 0.0)) throw std::domain_error("TrajectoryParams: alpha must be positive");
    if (ratio_hint && std::abs(beta / alpha - boost::rational_cast<double>(*ratio_hint)) >= 1e-12)
      throw std::domain_error("TrajectoryParams: beta/alpha disagrees with ratio_hint");
  }

  /// α = 1, β = q, with q kept exact.
  static TrajectoryParams rational(Rational q, double alpha = 1.0) {
    return {alpha, alpha * boost::rational_cast<double>(q), q};
  }

  [[nodiscard]] double ratio() const { return beta / alpha; }
};

struct TrajectoryPoint {
  double x;
  double y;
};

inline TrajectoryPoint trajectory_point(const TrajectoryParams& p, double t) {
  const double envelope = std::cos(p.alpha * t);
  return {envelope * std::cos(p.beta * t), -envelope * std::sin(p.beta * t)};
}

struct TouchEvent {
  std::int64_t j;
  double time;   // jπ/α
  double angle;  // θ_j reduced into [0, 2π)
  std::optional<RationalAngle> exact_angle;  // set when β/α is rational
};

namespace detail {

/// Distance of an angle from 0 modulo 2π.
inline double circle_distance_from_zero(double radians) {
  double r = std::fmod(radians, 2.0 * std::numbers::pi);
  if (r < 0) r += 2.0 * std::numbers::pi;
  return std::min(r, 2.0 * std::numbers::pi - r);
}

/// θ_j / (2π) reduced into [0, 1), computed as j·(1 − q)/2 mod 1.
inline double touch_turns(double ratio, std::int64_t j) {
  const double per_step = std::fmod((1.0 - ratio) / 2.0, 1.0);
  double t = std::fmod(static_cast<double>(j) * per_step, 1.0);
  if (t < 0) t += 1.0;
  return t;
}

}  // namespace detail

/// θ_j as an exact multiple of π, available only for rational β/α.
inline RationalAngle exact_touch_angle(Rational q, std::int64_t j) {
  return j * RationalAngle(1 - q);
}

inline TouchEvent touch_event(const TrajectoryParams& p, std::int64_t j) {
  TouchEvent ev{j, static_cast<double>(j) * std::numbers::pi / p.alpha, 0.0, std::nullopt};
  if (p.ratio_hint) {
    ev.exact_angle = exact_touch_angle(*p.ratio_hint, j);
    ev.angle = ev.exact_angle->radians();
  } else {
    ev.angle = 2.0 * std::numbers::pi * detail::touch_turns(p.ratio(), j);
  }
  return ev;
}

/// Touch events j = 0..j_max.
inline std::vector<TouchEvent> touch_events(const TrajectoryParams& p, std::int64_t j_max) {
  if (j_max < 0) throw std::domain_error("touch_events: j_max must be >= 0");
  std::vector<TouchEvent> out;
  out.reserve(static_cast<std::size_t>(j_max + 1));
  for (std::int64_t j = 0; j <= j_max; ++j) out.push_back(touch_event(p, j));
  return out;
}

/// First j ≥ 1 whose touch angle lies within tol of θ_0 = 0 (mod 2π), plus
/// the closest approach seen while scanning.
struct ReturnScan {
  std::optional<std::int64_t> first_return;
  std::int64_t closest_j = 0;
  double closest_distance = std::numeric_limits<double>::infinity();
};

inline ReturnScan scan_returns(const TrajectoryParams& p, double tol, std::int64_t max_steps) {
  if (!(tol > 0.0)) throw std::domain_error("scan_returns: tol must be positive");
  ReturnScan scan;
  for (std::int64_t j = 1; j <= max_steps; ++j) {
    double distance;
    if (p.ratio_hint) {
      const RationalAngle theta = exact_touch_angle(*p.ratio_hint, j);
      distance = theta.is_zero() ? 0.0 : detail::circle_distance_from_zero(theta.radians());
    } else {
      const double turns = detail::touch_turns(p.ratio(), j);
      distance = 2.0 * std::numbers::pi * std::min(turns, 1.0 - turns);
    }
    if (distance < scan.closest_distance) {
      scan.closest_distance = distance;
      scan.closest_j = j;
    }
    if (distance < tol && !scan.first_return) {
      scan.first_return = j;
      break;
    }
  }
  return scan;
}

struct Commensurability {
  bool periodic;
  std::int64_t period;  // valid when periodic
};

/// periodic(N) for the least N with θ_N ≡ 0 within tol, otherwise aperiodic.
/// Exhausting max_steps is the aperiodic verdict. Rational ratios are decided
/// exactly.
inline Commensurability classify_commensurability(const TrajectoryParams& p, double tol, std::int64_t max_steps) {
  if (!(tol > 0.0)) throw std::domain_error("classify_commensurability: tol must be positive");
  if (p.ratio_hint) {
    // θ_N ≡ 0 (mod 2π) iff N(1 − q)/2 is an integer; with (1 − q)/2 = a/b in
    // lowest terms the least such N is b.
    const Rational half_turn = (1 - *p.ratio_hint) / 2;
    const std::int64_t period = half_turn.denominator();
    if (period <= max_steps) return {true, period};
    return {false, 0};
  }
  const ReturnScan scan = scan_returns(p, tol, max_steps);
  if (scan.first_return) return {true, *scan.first_return};
  return {false, 0};
}

/// True iff {θ_j mod 2π : j = 0..N−1} is exactly {2πi/N : i = 0..N−1}.
inline bool uniform_coverage_check(Rational q, std::int64_t n_states) {
  if (n_states < 1) throw std::domain_error("uniform_coverage_check: N must be >= 1");
  std::set<Rational> angles;
  for (std::int64_t j = 0; j < n_states; ++j) angles.insert(exact_touch_angle(q, j).pi_multiple());
  std::set<Rational> roots;
  for (std::int64_t i = 0; i < n_states; ++i) roots.insert(RationalAngle(2 * i, n_states).pi_multiple());
  return angles == roots;
}

/// Samples the trajectory on [0, intervals·π/α] with points_per_interval
/// points per touch interval (the final endpoint included).
inline std::vector<std::pair<double, TrajectoryPoint>> sample_trajectory(const TrajectoryParams& p,
                                                                         std::int64_t intervals,
                                                                         std::int64_t points_per_interval = 1000) {
  if (intervals < 0 || points_per_interval < 1)
    throw std::domain_error("sample_trajectory: need intervals >= 0 and points_per_interval >= 1");
  const std::int64_t total = intervals * points_per_interval;
  const double dt = std::numbers::pi / p.alpha / static_cast<double>(points_per_interval);
  std::vector<std::pair<double, TrajectoryPoint>> out;
  out.reserve(static_cast<std::size_t>(total + 1));
  for (std::int64_t i = 0; i <= total; ++i) {
    const double t = static_cast<double>(i) * dt;
    out.emplace_back(t, trajectory_point(p, t));
  }
  return out;
}

}  // namespace qlimit
