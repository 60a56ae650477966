#pragma once

// Apollonius representation of an arbitrary two-qubit state by three points
// (η, ζ, ξ) of the extended plane:
//
//   |ψ⟩ = e^{iγ} ((ξ - 1)|η⟩ + ξ|ζ⟩) / √(|ξ - 1|² + |ξ|²)
//   |η⟩ = ((η - 1)|00⟩ + η|11⟩) / √(|η - 1|² + |η|²)
//   |ζ⟩ = ((ζ - 1)|01⟩ + ζ|10⟩) / √(|ζ - 1|² + |ζ|²)
//
// plus the concurrence formula in these parameters, the reflected state whose
// overlap with |ψ⟩ is the concurrence, and the superposition rule for the
// complex concurrence that yields a law of cosines.

#include <cmath>
#include <complex>
#include <optional>

#include "aq/complex_plane.hpp"
#include "aq/error.hpp"
#include "aq/extended_complex.hpp"
#include "aq/multi_qubit.hpp"
#include "aq/state.hpp"

namespace aq {

struct ApolloniusDecomposition {
  ExtendedComplex eta;
  ExtendedComplex zeta;
  ExtendedComplex xi;
  double global_phase = 0.0;
};

/// Apollonius state on the {|00⟩, |11⟩} sector.
inline TwoQubitState sector_state_eta(const ExtendedComplex& eta) {
  const auto u = apollonius_pair(eta);
  return {{u[0], Complex{}, Complex{}, u[1]}};
}

/// Apollonius state on the {|01⟩, |10⟩} sector.
inline TwoQubitState sector_state_zeta(const ExtendedComplex& zeta) {
  const auto w = apollonius_pair(zeta);
  return {{Complex{}, w[0], w[1], Complex{}}};
}

inline TwoQubitState reconstruct(const ApolloniusDecomposition& d) {
  const auto v = apollonius_pair(d.xi);
  const TwoQubitState psi = v[0] * sector_state_eta(d.eta) + v[1] * sector_state_zeta(d.zeta);
  return std::polar(1.0, d.global_phase) * psi;
}

namespace detail {
// Point x with (lo, hi) ∝ (x - 1, x). A vanishing pair has no parameter and
// gets the canonical 0; equal entries give ∞.
inline ExtendedComplex pair_parameter(const Complex& lo, const Complex& hi) {
  if (std::max(std::abs(lo), std::abs(hi)) <= tolerance::kDegenerate) return ExtendedComplex{};
  const Complex gap = hi - lo;
  if (std::abs(gap) <= tolerance::kDegenerate) return ExtendedComplex::infinity();
  return ExtendedComplex(hi / gap);
}
}  // namespace detail

/**
 * Inverse of reconstruct. η and ζ come from the amplitude ratios of each
 * sector, ξ from the sector weights α = ⟨η|ψ⟩ and β = ⟨ζ|ψ⟩, and the leftover
 * phase is stored so that reconstruct(decompose(s)) returns s itself.
 * An empty sector gets the canonical parameter 0, which forces ξ to 0 or 1.
 */
inline ApolloniusDecomposition decompose(const TwoQubitState& s) {
  require_normalized(s, "decompose");
  ApolloniusDecomposition d;
  d.eta = detail::pair_parameter(s.c00(), s.c11());
  d.zeta = detail::pair_parameter(s.c01(), s.c10());
  const Complex alpha = inner(sector_state_eta(d.eta), s);
  const Complex beta = inner(sector_state_zeta(d.zeta), s);
  d.xi = detail::pair_parameter(alpha, beta);
  d.global_phase = std::arg(inner(reconstruct(d), s));
  return d;
}

namespace detail {
// x(x - 1)/(|x - 1|² + |x|²), with the ∞ limit matching apollonius_pair.
inline Complex pair_product(const ExtendedComplex& x) {
  if (x.is_infinite()) return {0.5, 0.0};
  const Complex v = x.value();
  return v * (v - 1.0) / apollonius_norm2(v);
}

// (ξ - 1)²/N² and ξ²/N².
inline std::array<Complex, 2> squared_weights(const ExtendedComplex& xi) {
  if (xi.is_infinite()) return {Complex{0.5, 0.0}, Complex{0.5, 0.0}};
  const Complex v = xi.value();
  const double n2 = apollonius_norm2(v);
  return {(v - 1.0) * (v - 1.0) / n2, v * v / n2};
}
}  // namespace detail

/**
 * C = 2|(ξ - 1)²·η(η - 1)/N_η² - ξ²·ζ(ζ - 1)/N_ζ²| / N_ξ², with
 * N_x² = |x - 1|² + |x|². The normalizations enter squared.
 */
inline double concurrence_parametric(const ApolloniusDecomposition& d) {
  const auto w = detail::squared_weights(d.xi);
  return 2.0 * std::abs(w[0] * detail::pair_product(d.eta) - w[1] * detail::pair_product(d.zeta));
}

namespace detail {
// |η*⟩ = -(η̄|00⟩ + (η̄ - 1)|11⟩)/N_η, the sector state of 1 - η̄.
inline TwoQubitState mirrored_sector_eta(const ExtendedComplex& eta) {
  const auto u = apollonius_pair(eta);
  return {{-std::conj(u[1]), Complex{}, Complex{}, -std::conj(u[0])}};
}

// |ζ*⟩ = -(ζ̄|01⟩ + (ζ̄ - 1)|10⟩)/N_ζ.
inline TwoQubitState mirrored_sector_zeta(const ExtendedComplex& zeta) {
  const auto w = apollonius_pair(zeta);
  return {{Complex{}, -std::conj(w[1]), -std::conj(w[0]), Complex{}}};
}
}  // namespace detail

/**
 * Symmetric partner |ψ_s⟩ = e^{-iγ}((ξ̄ - 1)|η*⟩ - ξ̄|ζ*⟩)/N_ξ.
 *
 * This is the phase-normalized form of the three-step reflection (η and ζ
 * mirrored in Re = 1/2, ξ inverted in the focal circle), and it coincides
 * exactly with phase_flip_reflection(reconstruct(d)).
 * |⟨ψ_s|ψ⟩| is the concurrence of reconstruct(d).
 */
inline TwoQubitState reflected_state(const ApolloniusDecomposition& d) {
  const auto v = apollonius_pair(d.xi);
  const TwoQubitState mirrored =
      std::conj(v[0]) * detail::mirrored_sector_eta(d.eta) - std::conj(v[1]) * detail::mirrored_sector_zeta(d.zeta);
  return std::polar(1.0, -d.global_phase) * mirrored;
}

/**
 * The reflection built literally from the three geometric steps:
 * η* = 1 - η̄, ζ* = 1 - ζ̄, ξ* = 1/2 + (1/4)/(ξ̄ - 1/2), assembled as
 * ((ξ* - 1)|η*⟩ + ξ*|ζ*⟩)/N_ξ*. Agrees with reflected_state up to phase.
 */
inline TwoQubitState reflected_state_three_step(const ApolloniusDecomposition& d) {
  const ExtendedComplex eta_s = reflect_vertical(d.eta);
  const ExtendedComplex zeta_s = reflect_vertical(d.zeta);
  const ExtendedComplex xi_s = invert_in_circle(d.xi);
  // A sector at ∞ is the +∞ limit; its mirror image is approached from -∞,
  // where the sector state tends to -(1, 1)/√2 rather than +(1, 1)/√2.
  const Complex eta_sign = d.eta.is_infinite() ? -1.0 : 1.0;
  const Complex zeta_sign = d.zeta.is_infinite() ? -1.0 : 1.0;
  const auto v = apollonius_pair(xi_s);
  return v[0] * (eta_sign * sector_state_eta(eta_s)) + v[1] * (zeta_sign * sector_state_zeta(zeta_s));
}

/// Y⊗Y applied to the complex conjugate of s (the spin flip).
inline TwoQubitState phase_flip_reflection(const TwoQubitState& s) {
  require_normalized(s, "phase_flip_reflection");
  return {{-std::conj(s.c11()), std::conj(s.c10()), std::conj(s.c01()), -std::conj(s.c00())}};
}

struct PartialConcurrences {
  Complex eta;
  Complex zeta;
};

/// 𝒞_η = 2η(η - 1)/N_η² and 𝒞_ζ = 2ζ(ζ - 1)/N_ζ²; each modulus is the concurrence of that sector state.
inline PartialConcurrences partial_concurrences(const ApolloniusDecomposition& d) {
  return {2.0 * detail::pair_product(d.eta), 2.0 * detail::pair_product(d.zeta)};
}

struct SuperpositionCoefficients {
  Complex mu;
  Complex nu;
  bool at_infinity = false;  // ξ = ∞, limit values (1/2, -1/2)
};

/// μ = (ξ - 1)²/N_ξ², ν = -ξ²/N_ξ². |μ| + |ν| = 1 and |ν|/|μ| = |ξ|²/|ξ - 1|².
inline SuperpositionCoefficients superposition_coefficients(const ExtendedComplex& xi) {
  const auto w = detail::squared_weights(xi);
  return {w[0], -w[1], xi.is_infinite()};
}

/**
 * Complex concurrence 𝒞 = μ𝒞_η + ν𝒞_ζ = 2(c00·c11 - c01·c10) of the
 * phase-free state. The literal overlap ⟨ψ_s|ψ⟩ equals -e^{2iγ}𝒞.
 */
inline Complex complex_concurrence(const ApolloniusDecomposition& d) {
  const auto pc = partial_concurrences(d);
  const auto sc = superposition_coefficients(d.xi);
  return sc.mu * pc.eta + sc.nu * pc.zeta;
}

struct LawOfCosines {
  Complex eta_term;             // μ𝒞_η
  Complex zeta_term;            // ν𝒞_ζ
  double concurrence = 0.0;     // |μ𝒞_η + ν𝒞_ζ|
  std::optional<double> angle;  // Φ; undefined when a term vanishes
  double residual = 0.0;        // |C² - ((|μ|C_η)² + (|ν|C_ζ)² - 2|μ|C_η|ν|C_ζ cos Φ)|
};

/// Φ = π - (arg μ𝒞_η - arg ν𝒞_ζ); the cosine term is dropped when a summand vanishes.
inline LawOfCosines law_of_cosines(const ApolloniusDecomposition& d) {
  const auto pc = partial_concurrences(d);
  const auto sc = superposition_coefficients(d.xi);
  LawOfCosines out;
  out.eta_term = sc.mu * pc.eta;
  out.zeta_term = sc.nu * pc.zeta;
  out.concurrence = std::abs(out.eta_term + out.zeta_term);
  const double a = std::abs(out.eta_term);
  const double b = std::abs(out.zeta_term);
  double rhs = a * a + b * b;
  if (a > 0.0 && b > 0.0) {
    out.angle = kPi - (std::arg(out.eta_term) - std::arg(out.zeta_term));
    rhs -= 2.0 * a * b * std::cos(*out.angle);
  }
  out.residual = std::abs(out.concurrence * out.concurrence - rhs);
  return out;
}

inline double law_of_cosines_residual(const ApolloniusDecomposition& d) { return law_of_cosines(d).residual; }

}  // namespace aq
