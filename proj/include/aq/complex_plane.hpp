#pragma once

// Geometry of the Apollonius circle family with foci 0 and 1: distance
// ratio, circle parameters, the two reflection maps and the bipolar chart.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "aq/error.hpp"
#include "aq/extended_complex.hpp"

namespace aq {

inline constexpr double kPi = std::numbers::pi;

/// Reduces an angle into (-π, π]; -π itself maps to π.
inline double reduce_angle(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r + 0.0;  // no -0
}

/// |z| / |z - 1|: 0 at z = 0, +inf at z = 1 and 1 at z = ∞.
inline double ratio(const ExtendedComplex& z) {
  if (z.is_infinite()) return 1.0;
  const Complex v = z.value();
  if (v == Complex{1.0, 0.0}) return HUGE_VAL;
  return std::abs(v) / std::abs(v - 1.0);
}

/// Plain circle in the finite plane.
struct Circle {
  Complex center;
  double radius = 0.0;
};

/**
 * Intersection points of two circles, or nullopt when they do not meet.
 *
 * The chord position is measured from the smaller circle and the big
 * circle's power is factored as (d - R)(d + R); near-line Apollonius circles
 * have radii in the thousands and the naive R² - d² loses every digit of h.
 */
inline std::optional<std::pair<Complex, Complex>> intersect(const Circle& a, const Circle& b) {
  const Circle& small = a.radius <= b.radius ? a : b;
  const Circle& big = a.radius <= b.radius ? b : a;
  const Complex axis = big.center - small.center;
  const double d = std::abs(axis);
  if (d == 0.0) return std::nullopt;
  const double rs = small.radius;
  const double rb = big.radius;
  const double along = (rs * rs + (d - rb) * (d + rb)) / (2.0 * d);
  const double h2 = rs * rs - along * along;
  if (h2 < 0.0) return std::nullopt;
  const double h = std::sqrt(h2);
  const Complex unit = axis / d;
  const Complex foot = small.center + along * unit;
  const Complex normal = unit * Complex{0.0, 1.0};
  return std::make_pair(foot + h * normal, foot - h * normal);
}

enum class CircleKind { circle, line, point };

/**
 * Member of the Apollonius family |z| / |z - 1| = r.
 *
 * r = 1 is the vertical line Re z = 1/2, r = 0 and r = ∞ collapse to the
 * foci 0 and 1. center() and radius() are only meaningful for proper
 * circles and throw otherwise.
 */
class ApolloniusCircle {
 public:
  explicit ApolloniusCircle(double r) : ratio_(r) {
    if (!(r >= 0.0)) throw DomainError("Apollonius ratio must be non-negative");
    if (r == 0.0 || std::isinf(r)) {
      kind_ = CircleKind::point;
    } else if (r == 1.0) {
      kind_ = CircleKind::line;
    } else {
      const double r2 = r * r;
      kind_ = CircleKind::circle;
      center_ = r2 / (r2 - 1.0);
      radius_ = r / std::abs(r2 - 1.0);
    }
  }

  double ratio() const { return ratio_; }
  CircleKind kind() const { return kind_; }

  Complex center() const {
    require_circle("center");
    return {center_, 0.0};
  }
  double radius() const {
    require_circle("radius");
    return radius_;
  }
  Circle as_circle() const { return {center(), radius()}; }

  /// The focus a degenerate (point) member collapses to.
  Complex focus() const {
    if (kind_ != CircleKind::point) throw DomainError("focus() of a non-degenerate Apollonius circle");
    return ratio_ == 0.0 ? Complex{0.0, 0.0} : Complex{1.0, 0.0};
  }

  /**
   * Point at parameter angle t. Circles use center + radius·e^{it}; the line
   * is parameterized as 1/2 + i·tan(t/2) so that t = π reaches ∞; a point
   * member returns its focus for every t.
   */
  ExtendedComplex point_at(double t) const {
    switch (kind_) {
      case CircleKind::circle:
        return ExtendedComplex(Complex{center_, 0.0} + radius_ * std::polar(1.0, t));
      case CircleKind::line: {
        const double half = reduce_angle(t) / 2.0;
        if (std::abs(half) == kPi / 2.0) return ExtendedComplex::infinity();
        return ExtendedComplex(0.5, std::tan(half));
      }
      case CircleKind::point:
        break;
    }
    return ExtendedComplex(focus());
  }

  bool contains(const ExtendedComplex& z, double tol = tolerance::kGeometry) const {
    const double rz = aq::ratio(z);
    if (std::isinf(ratio_) || std::isinf(rz)) return std::isinf(ratio_) && std::isinf(rz);
    return std::abs(rz - ratio_) <= tol;
  }

 private:
  void require_circle(const char* what) const {
    if (kind_ != CircleKind::circle) {
      throw DomainError(std::string(what) + " is undefined for a degenerate Apollonius circle");
    }
  }

  double ratio_;
  CircleKind kind_ = CircleKind::point;
  double center_ = 0.0;
  double radius_ = 0.0;
};

inline ApolloniusCircle circle_from_ratio(double r) { return ApolloniusCircle(r); }

/// The circle through both foci, |z - 1/2| = 1/2; it meets every Apollonius circle at right angles.
inline Circle focal_circle() { return {{0.5, 0.0}, 0.5}; }

/// Mirror in the line Re z = 1/2: z ↦ 1 - z̄. Maps circle r onto circle 1/r.
inline ExtendedComplex reflect_vertical(const ExtendedComplex& z) {
  if (z.is_infinite()) return z;
  return ExtendedComplex(1.0 - std::conj(z.value()));
}

/// Inversion in |ξ - 1/2| = 1/2: ξ ↦ 1/2 + (1/4)/(ξ̄ - 1/2).
inline ExtendedComplex invert_in_circle(const ExtendedComplex& xi) {
  if (xi.is_infinite()) return ExtendedComplex(0.5, 0.0);
  const Complex shifted = std::conj(xi.value()) - 0.5;
  if (shifted == Complex{}) return ExtendedComplex::infinity();
  return ExtendedComplex(0.5 + 0.25 / shifted);
}

/// Bipolar chart with foci 0 and 1. tau = ln r labels the Apollonius circle, sigma is kept in (-π, π].
class BipolarCoords {
 public:
  BipolarCoords(double tau, double sigma) : tau_(tau), sigma_(reduce_angle(sigma)) {}

  double tau() const { return tau_; }
  double sigma() const { return sigma_; }

 private:
  double tau_;
  double sigma_;
};

/// Inverse of from_bipolar via w = z/(z - 1) = e^{τ - iσ}. The foci have no chart.
inline BipolarCoords to_bipolar(const ExtendedComplex& z) {
  if (z.is_infinite()) return {0.0, 0.0};
  const Complex v = z.value();
  if (v == Complex{0.0, 0.0} || v == Complex{1.0, 0.0}) {
    throw DomainError("focus has no bipolar coordinates");
  }
  const Complex w = v / (v - 1.0);
  return {std::log(std::abs(w)), -std::arg(w)};
}

/// z = e^τ / (e^τ - e^{iσ}); the pole (0, 0) is the point at infinity.
inline ExtendedComplex from_bipolar(const BipolarCoords& c) {
  const double e = std::exp(c.tau());
  const Complex denom = e - std::polar(1.0, c.sigma());
  if (denom == Complex{}) return ExtendedComplex::infinity();
  return ExtendedComplex(e / denom);
}

/// Same chart through the Cartesian form 1/2 + (sinh τ + i sin σ) / (2(cosh τ - cos σ)).
inline ExtendedComplex from_bipolar_cartesian(const BipolarCoords& c) {
  const double denom = std::cosh(c.tau()) - std::cos(c.sigma());
  if (denom == 0.0) return ExtendedComplex::infinity();
  return ExtendedComplex(0.5 + 0.5 * std::sinh(c.tau()) / denom, 0.5 * std::sin(c.sigma()) / denom);
}

}  // namespace aq
