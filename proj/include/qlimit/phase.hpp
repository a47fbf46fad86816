#pragma once

// Exact phases. Every phase produced by the cyclic models is e^{iπ·r} with r
// rational, so angles are carried as r (a multiple of π) reduced into [0, 2)
// and only turned into a complex number at the linear-algebra boundary.

#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace qlimit {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

/// Angle π·r with r rational, reduced modulo 2 into [0, 2).
class RationalAngle {
 public:
  RationalAngle() = default;

  explicit RationalAngle(Rational pi_multiple) : value_(reduce(pi_multiple)) {}

  RationalAngle(std::int64_t num, std::int64_t den) : RationalAngle(Rational(num, den)) {}

  static RationalAngle zero() { return RationalAngle{}; }

  /// e^{i2π·fraction}, i.e. the angle 2·fraction in units of π.
  static RationalAngle full_turns(Rational fraction) { return RationalAngle(fraction * 2); }

  /// Multiple of π in [0, 2).
  [[nodiscard]] Rational pi_multiple() const { return value_; }

  [[nodiscard]] double radians() const {
    return std::numbers::pi * boost::rational_cast<double>(value_);
  }

  [[nodiscard]] bool is_zero() const { return value_.numerator() == 0; }

  /// Unit complex number e^{iπr}. Quarter turns are returned exactly.
  [[nodiscard]] Complex to_complex() const {
    if (value_ == Rational(0)) return {1.0, 0.0};
    if (value_ == Rational(1, 2)) return {0.0, 1.0};
    if (value_ == Rational(1)) return {-1.0, 0.0};
    if (value_ == Rational(3, 2)) return {0.0, -1.0};
    // Map into (-1, 1] before evaluating so the argument stays small.
    Rational centred = value_ > Rational(1) ? value_ - Rational(2) : value_;
    double x = std::numbers::pi * boost::rational_cast<double>(centred);
    return {std::cos(x), std::sin(x)};
  }

  RationalAngle operator-() const { return RationalAngle(-value_); }

  RationalAngle& operator+=(const RationalAngle& o) {
    value_ = reduce(value_ + o.value_);
    return *this;
  }
  RationalAngle& operator-=(const RationalAngle& o) {
    value_ = reduce(value_ - o.value_);
    return *this;
  }

  friend RationalAngle operator+(RationalAngle a, const RationalAngle& b) { return a += b; }
  friend RationalAngle operator-(RationalAngle a, const RationalAngle& b) { return a -= b; }

  /// Repeated addition; the integer factor is reduced before multiplying so
  /// large step counts do not overflow.
  friend RationalAngle operator*(std::int64_t times, const RationalAngle& a) {
    const std::int64_t den = a.value_.denominator();
    const std::int64_t period = 2 * den;  // k·π·num/den repeats with period 2·den in k
    std::int64_t t = times % period;
    if (t < 0) t += period;
    return RationalAngle(a.value_ * t);
  }
  friend RationalAngle operator*(const RationalAngle& a, std::int64_t times) { return times * a; }

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) { return a.value_ == b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const RationalAngle& a) {
    return os << a.value_ << "pi";
  }

 private:
  static Rational reduce(Rational r) {
    const std::int64_t den = r.denominator();
    std::int64_t num = r.numerator() % (2 * den);
    if (num < 0) num += 2 * den;
    return {num, den};
  }

  Rational value_{0};
};

/// ζ = (1 − N)/N for a cutoff N. All pair-model phases are integer multiples
/// of 2πζ.
class ZetaPhase {
 public:
  explicit ZetaPhase(std::int64_t n_states) : n_states_(n_states) {
    if (n_states < 1) throw std::domain_error("ZetaPhase: N must be >= 1");
  }

  [[nodiscard]] std::int64_t n_states() const { return n_states_; }
  [[nodiscard]] Rational value() const { return {1 - n_states_, n_states_}; }
  [[nodiscard]] double as_double() const { return boost::rational_cast<double>(value()); }

  /// The angle 2πζ·n.
  [[nodiscard]] RationalAngle turns(std::int64_t n) const {
    // Reduce n modulo N first: 2πζ·N is a whole number of turns.
    std::int64_t r = n % n_states_;
    if (r < 0) r += n_states_;
    return RationalAngle::full_turns(value() * r);
  }

 private:
  std::int64_t n_states_;
};

}  // namespace qlimit
