#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "aq/error.hpp"

namespace aq {

using Complex = std::complex<double>;

/**
 * A point of the extended complex plane C ∪ {∞}.
 *
 * The point at infinity is carried by a flag instead of IEEE infinities in
 * the components, so abs/arg of finite points stay well defined and no NaN
 * can leak out of an operation. Arithmetic follows the Möbius conventions
 * 1/0 = ∞, 1/∞ = 0 and a·∞ = ∞ for a ≠ 0; the undefined forms
 * (∞ ± ∞, 0·∞, 0/0, ∞/∞) throw DomainError.
 */
class ExtendedComplex {
 public:
  constexpr ExtendedComplex() = default;
  constexpr ExtendedComplex(Complex value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  constexpr ExtendedComplex(double re, double im = 0.0) : value_(re, im) {}  // NOLINT

  static constexpr ExtendedComplex infinity() {
    ExtendedComplex z;
    z.at_infinity_ = true;
    return z;
  }

  constexpr bool is_infinite() const { return at_infinity_; }
  constexpr bool is_finite() const { return !at_infinity_; }

  /// Finite value. Calling this on ∞ is a logic error.
  Complex value() const {
    if (at_infinity_) throw DomainError("value() of the point at infinity");
    return value_;
  }
  double real() const { return value().real(); }
  double imag() const { return value().imag(); }

  /// |z|, +inf for the point at infinity.
  double abs() const { return at_infinity_ ? HUGE_VAL : std::abs(value_); }

  bool is_zero() const { return !at_infinity_ && value_ == Complex{}; }

  ExtendedComplex conj() const { return at_infinity_ ? *this : ExtendedComplex(std::conj(value_)); }

  ExtendedComplex reciprocal() const {
    if (at_infinity_) return ExtendedComplex{};
    if (value_ == Complex{}) return infinity();
    return ExtendedComplex(1.0 / value_);
  }

  friend ExtendedComplex operator+(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.at_infinity_ && b.at_infinity_) throw DomainError("undefined form: inf + inf");
    if (a.at_infinity_ || b.at_infinity_) return infinity();
    return ExtendedComplex(a.value_ + b.value_);
  }

  friend ExtendedComplex operator-(const ExtendedComplex& a) { return a.at_infinity_ ? a : ExtendedComplex(-a.value_); }

  friend ExtendedComplex operator-(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.at_infinity_ && b.at_infinity_) throw DomainError("undefined form: inf - inf");
    if (a.at_infinity_ || b.at_infinity_) return infinity();
    return ExtendedComplex(a.value_ - b.value_);
  }

  friend ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.at_infinity_ || b.at_infinity_) {
      if (a.is_zero() || b.is_zero()) throw DomainError("undefined form: 0 * inf");
      return infinity();
    }
    return ExtendedComplex(a.value_ * b.value_);
  }

  friend ExtendedComplex operator/(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.at_infinity_ && b.at_infinity_) throw DomainError("undefined form: inf / inf");
    if (a.at_infinity_) return infinity();
    if (b.at_infinity_) return ExtendedComplex{};
    if (b.value_ == Complex{}) {
      if (a.value_ == Complex{}) throw DomainError("undefined form: 0 / 0");
      return infinity();
    }
    return ExtendedComplex(a.value_ / b.value_);
  }

  /// Exact equality; every point at infinity compares equal.
  friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.at_infinity_ || b.at_infinity_) return a.at_infinity_ == b.at_infinity_;
    return a.value_ == b.value_;
  }

 private:
  Complex value_{};
  bool at_infinity_ = false;
};

inline ExtendedComplex conj(const ExtendedComplex& z) { return z.conj(); }

/// Absolute closeness; two infinities are close, infinity is never close to a finite point.
inline bool approx_equal(const ExtendedComplex& a, const ExtendedComplex& b, double tol = tolerance::kGeometry) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.value() - b.value()) <= tol;
}

/// "inf" or "re+imi" printed with 15 significant digits.
inline std::string to_string(const ExtendedComplex& z) {
  if (z.is_infinite()) return "inf";
  char buf[80];
  const Complex v = z.value();
  // + 0.0 turns -0 into 0.
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real() + 0.0, v.imag() + 0.0);
  return buf;
}

}  // namespace aq
