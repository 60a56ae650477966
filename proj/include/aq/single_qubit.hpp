#pragma once

// One-qubit states on the Apollonius family: Bloch/coherent/Apollonius
// constructors, the H and Y-then-H circuits, and the measures that stay
// constant along each circle (entropy, symmetric-state fidelity, distance).

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "aq/complex_plane.hpp"
#include "aq/error.hpp"
#include "aq/extended_complex.hpp"
#include "aq/state.hpp"

namespace aq {

/// 2×2 gate, row-major.
struct Gate2 {
  std::array<Complex, 4> m{};

  Complex operator()(std::size_t row, std::size_t col) const { return m[2 * row + col]; }

  bool is_unitary(double tol = tolerance::kState) const {
    // G†G entrywise against the identity.
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        Complex sum{};
        for (std::size_t k = 0; k < 2; ++k) sum += std::conj((*this)(k, i)) * (*this)(k, j);
        if (std::abs(sum - Complex{i == j ? 1.0 : 0.0, 0.0}) > tol) return false;
      }
    }
    return true;
  }
};

inline Gate2 hadamard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {{Complex{h, 0.0}, Complex{h, 0.0}, Complex{h, 0.0}, Complex{-h, 0.0}}};
}

inline Gate2 pauli_y() { return {{Complex{}, Complex{0.0, -1.0}, Complex{0.0, 1.0}, Complex{}}}; }

inline OneQubitState apply_gate(const Gate2& g, const OneQubitState& s) {
  if (!g.is_unitary(tolerance::kGeometry)) throw DomainError("apply_gate: gate is not unitary");
  return {{g(0, 0) * s.amp[0] + g(0, 1) * s.amp[1], g(1, 0) * s.amp[0] + g(1, 1) * s.amp[1]}};
}

/// cos(θ/2)|0⟩ + sin(θ/2)e^{iφ}|1⟩.
inline OneQubitState from_bloch(double theta, double phi) {
  return {{Complex{std::cos(theta / 2.0), 0.0}, std::sin(theta / 2.0) * std::polar(1.0, phi)}};
}

/// Stereographic image z = tan(θ/2)e^{iφ}; the south pole θ = π is ∞.
inline ExtendedComplex coherent_parameter(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  // cos(π/2) evaluates to ~6e-17, not zero.
  if (std::abs(c) < 1e-15) return ExtendedComplex::infinity();
  return ExtendedComplex(std::sin(theta / 2.0) / c * std::polar(1.0, phi));
}

/// (|0⟩ + z|1⟩)/√(1 + |z|²), with |∞⟩ = |1⟩.
inline OneQubitState coherent_state(const ExtendedComplex& z) {
  if (z.is_infinite()) return ket1();
  return normalize(OneQubitState{{Complex{1.0, 0.0}, z.value()}});
}

/**
 * ((z - 1)|0⟩ + (z + 1)|1⟩)/(√2 √(1 + |z|²)): the output of Y followed by H
 * on |z⟩, up to a global phase. It places |0⟩ at -1 and |1⟩ at +1.
 */
inline OneQubitState symmetric_circuit_state(const ExtendedComplex& z) {
  if (z.is_infinite()) return normalize(OneQubitState{{Complex{1.0, 0.0}, Complex{1.0, 0.0}}});
  const Complex v = z.value();
  return normalize(OneQubitState{{v - 1.0, v + 1.0}});
}

/// Apollonius qubit ((z - 1)|0⟩ + z|1⟩)/√(|z - 1|² + |z|²); |0⟩ sits at z = 0 and |1⟩ at z = 1.
inline OneQubitState apollonius_state(const ExtendedComplex& z) {
  const auto pair = apollonius_pair(z);
  return {{pair[0], pair[1]}};
}

struct Probabilities {
  double p0;
  double p1;
};

/// Measurement probabilities of the Apollonius state; p0/p1 = 1/r².
inline Probabilities probabilities(const ExtendedComplex& z) {
  if (z.is_infinite()) return {0.5, 0.5};
  const Complex v = z.value();
  const double p0 = std::norm(v - 1.0) / apollonius_norm2(v);
  return {p0, 1.0 - p0};
}

namespace detail {
inline void require_ratio(double r, const char* who) {
  if (!(r >= 0.0)) throw DomainError(std::string(who) + ": ratio must be non-negative");
}
}  // namespace detail

/**
 * Shannon entropy in bits of the Apollonius state on circle r:
 * H = log₂(1 + r²) - r²/(1 + r²)·log₂ r², extended by continuity to
 * H(0) = H(∞) = 0.
 */
inline double shannon_entropy(double r) {
  detail::require_ratio(r, "shannon_entropy");
  if (r == 0.0 || std::isinf(r)) return 0.0;
  double r2 = r * r;
  // The expression is symmetric under r² ↦ 1/r², so fold past overflow.
  if (std::isinf(r2)) r2 = (1.0 / r) * (1.0 / r);
  // r² below the smallest subnormal: H ~ r² log r², which is 0 here.
  if (r2 == 0.0) return 0.0;
  return std::log2(1.0 + r2) - r2 / (1.0 + r2) * std::log2(r2);
}

struct EntropyDerivatives {
  double first;   // dH/d(r²)
  double second;  // d²H/d(r²)²
};

/**
 * Closed-form derivatives of H with respect to x = r²:
 *   H'  = -log₂x / (1 + x)²
 *   H'' = 2·log₂x / (1 + x)³ - 1 / ((1 + x)²·x·ln 2)
 * Stationary at x = 1 with H''(1) = -1/(4 ln 2). The log term of H'' is often
 * printed with a minus sign; that form only agrees with H at x = 1.
 */
inline EntropyDerivatives entropy_derivatives(double r2) {
  if (!(r2 > 0.0) || std::isinf(r2)) throw DomainError("entropy_derivatives: r² must be positive and finite");
  const double q = 1.0 + r2;
  const double l = std::log2(r2);
  return {-l / (q * q), 2.0 * l / (q * q * q) - 1.0 / (q * q * r2 * std::numbers::ln2)};
}

/// The Apollonius state mirrored in Re z = 1/2: (-z̄|0⟩ + (1 - z̄)|1⟩)/√(|z - 1|² + |z|²).
inline OneQubitState symmetric_state(const ExtendedComplex& z) {
  if (z.is_infinite()) return apollonius_state(z);
  const Complex zb = std::conj(z.value());
  const double n = std::sqrt(apollonius_norm2(z.value()));
  return {{-zb / n, (1.0 - zb) / n}};
}

namespace detail {
// |z| and |z - 1| rescaled so that their squares cannot overflow.
inline std::array<double, 2> scaled_distances(const Complex& v) {
  const double a = std::abs(v);
  const double b = std::abs(v - 1.0);
  const double s = std::max(a, b);
  return {a / s, b / s};
}
}  // namespace detail

/// F = 2|z||z - 1|/(|z - 1|² + |z|²) = 2r/(1 + r²).
inline double fidelity_symmetric(const ExtendedComplex& z) {
  if (z.is_infinite()) return 1.0;
  const auto [a, b] = detail::scaled_distances(z.value());
  return 2.0 * a * b / (a * a + b * b);
}

/// Same fidelity read off the amplitudes: |⟨a_s|a⟩|.
inline double fidelity_symmetric_overlap(const ExtendedComplex& z) {
  return fidelity(symmetric_state(z), apollonius_state(z));
}

/**
 * ‖|a⟩ - |a_s⟩‖, the plain Euclidean norm of the amplitude difference:
 * √2·|2 Re z - 1|/√(|z - 1|² + |z|²). Orthogonal foci states give √2.
 */
inline double euclidean_distance_symmetric(const ExtendedComplex& z) {
  return norm(apollonius_state(z) - symmetric_state(z));
}

/// The distance above divided by √2, so that it peaks at 1 on the foci: 2|Re z - 1/2|/√(|z - 1|² + |z|²).
inline double euclidean_distance_symmetric_unit(const ExtendedComplex& z) {
  return euclidean_distance_symmetric(z) / std::numbers::sqrt2;
}

/// d = √(1 - F²) = |1 - r²|/(1 + r²); invariant under r ↦ 1/r.
inline double fidelity_distance(const ExtendedComplex& z) {
  if (z.is_infinite()) return 0.0;
  const auto [a, b] = detail::scaled_distances(z.value());
  return std::abs((b - a) * (b + a)) / (a * a + b * b);
}

/// (e^{iσ}|0⟩ + e^τ|1⟩)/√(1 + e^{2τ}), the Apollonius qubit of from_bipolar(c) up to phase.
inline OneQubitState bipolar_one_qubit(const BipolarCoords& c) {
  const Complex phase = std::polar(1.0, c.sigma());
  // Divide through by the larger of 1 and e^τ so large |τ| cannot overflow.
  if (c.tau() > 0.0) {
    const double t = std::exp(-c.tau());
    const double n = std::sqrt(1.0 + t * t);
    return {{phase * t / n, Complex{1.0 / n, 0.0}}};
  }
  const double t = std::exp(c.tau());
  const double n = std::sqrt(1.0 + t * t);
  return {{phase / n, Complex{t / n, 0.0}}};
}

}  // namespace aq
