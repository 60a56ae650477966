#pragma once

// Two- and n-qubit Apollonius states, built by CNOT circuits from a single
// Apollonius qubit, and the concurrence of those states computed along the
// determinant, closed-form, reflection and intersection-distance routes.

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "aq/complex_plane.hpp"
#include "aq/error.hpp"
#include "aq/extended_complex.hpp"
#include "aq/single_qubit.hpp"
#include "aq/state.hpp"

namespace aq {

/// CNOT with qubit 0 as control: swaps c10 and c11.
inline TwoQubitState cnot(const TwoQubitState& s) { return {{s.amp[0], s.amp[1], s.amp[3], s.amp[2]}}; }

/// Dense n-qubit vectors are capped at this many qubits.
inline constexpr std::size_t kMaxDenseQubits = 20;

using DenseState = std::vector<Complex>;

/// In-place CNOT on a dense register; qubit 0 is the most significant bit.
inline void apply_cnot(DenseState& amps, std::size_t control, std::size_t target, std::size_t qubits) {
  if (control >= qubits || target >= qubits || control == target) throw DomainError("apply_cnot: bad qubit index");
  if (amps.size() != (std::size_t{1} << qubits)) throw DomainError("apply_cnot: register size mismatch");
  const std::size_t cbit = std::size_t{1} << (qubits - 1 - control);
  const std::size_t tbit = std::size_t{1} << (qubits - 1 - target);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  }
}

/**
 * State supported on |0…0⟩ and |1…1⟩ only, stored sparsely.
 *
 * apollonius_n_state(z, n) yields ((z - 1)|0…0⟩ + z|1…1⟩)/√(|z - 1|² + |z|²);
 * the bipolar constructors reuse the same shape with other amplitudes.
 */
class NQubitApolloniusState {
 public:
  NQubitApolloniusState(std::size_t qubits, Complex zeros, Complex ones)
      : qubits_(qubits), zeros_(zeros), ones_(ones) {
    if (qubits == 0) throw DomainError("n-qubit state needs at least one qubit");
  }

  std::size_t qubits() const { return qubits_; }
  Complex amp_zeros() const { return zeros_; }
  Complex amp_ones() const { return ones_; }

  DenseState dense() const {
    if (qubits_ > kMaxDenseQubits) throw DomainError("dense expansion is capped at 20 qubits");
    DenseState out(std::size_t{1} << qubits_);
    out.front() = zeros_;
    out.back() = ones_;
    return out;
  }

  TwoQubitState two_qubit() const {
    if (qubits_ != 2) throw DomainError("two_qubit() requires a two-qubit register");
    return {{zeros_, Complex{}, Complex{}, ones_}};
  }

 private:
  std::size_t qubits_;
  Complex zeros_;
  Complex ones_;
};

/// ⟨bra|ket⟩ for two sparse states of the same width.
inline Complex inner(const NQubitApolloniusState& bra, const NQubitApolloniusState& ket) {
  if (bra.qubits() != ket.qubits()) throw DomainError("inner: register widths differ");
  return std::conj(bra.amp_zeros()) * ket.amp_zeros() + std::conj(bra.amp_ones()) * ket.amp_ones();
}

inline NQubitApolloniusState apollonius_n_state(const ExtendedComplex& z, std::size_t qubits) {
  const auto pair = apollonius_pair(z);
  return {qubits, pair[0], pair[1]};
}

/// Runs the CNOT ladder on |a⟩ ⊗ |0…0⟩ densely; the circuit form of apollonius_n_state.
inline DenseState cnot_chain_state(const ExtendedComplex& z, std::size_t qubits) {
  if (qubits == 0) throw DomainError("cnot_chain_state: n must be positive");
  if (qubits > kMaxDenseQubits) throw DomainError("dense expansion is capped at 20 qubits");
  const OneQubitState a = apollonius_state(z);
  DenseState amps(std::size_t{1} << qubits);
  amps[0] = a.amp[0];
  amps[std::size_t{1} << (qubits - 1)] = a.amp[1];
  for (std::size_t k = 0; k + 1 < qubits; ++k) apply_cnot(amps, k, k + 1, qubits);
  return amps;
}

/// Pure-state concurrence 2|c00·c11 - c01·c10|. Rejects inputs that are not unit vectors.
inline double concurrence_determinant(const TwoQubitState& s) {
  require_normalized(s, "concurrence_determinant");
  return 2.0 * std::abs(s.c00() * s.c11() - s.c01() * s.c10());
}

/// 2r/(1 + r²), zero at the foci and one on the line r = 1.
inline double concurrence_closed_form(double r) {
  detail::require_ratio(r, "concurrence_closed_form");
  if (std::isinf(r)) return 0.0;
  if (r > 1.0) return 2.0 / (r + 1.0 / r);
  return 2.0 * r / (1.0 + r * r);
}

/// The mirrored partner (-z̄|0…0⟩ + (1 - z̄)|1…1⟩)/√(|z - 1|² + |z|²).
inline NQubitApolloniusState symmetric_n_state(const ExtendedComplex& z, std::size_t qubits) {
  if (z.is_infinite()) return apollonius_n_state(z, qubits);
  const Complex zb = std::conj(z.value());
  const double n = std::sqrt(apollonius_norm2(z.value()));
  return {qubits, -zb / n, (1.0 - zb) / n};
}

/// |⟨A_s|A⟩| computed on the amplitudes; the same value for every register width.
inline double fidelity_symmetric_n(const ExtendedComplex& z, std::size_t qubits) {
  return std::abs(inner(symmetric_n_state(z, qubits), apollonius_n_state(z, qubits)));
}

/**
 * Concurrence as a length: the chord cut from circle r by the focal circle
 * |z - 1/2| = 1/2. The two intersection points are conjugate, so the chord
 * is vertical. Degenerate members (r = 0, ∞) give 0.
 */
inline double geometric_concurrence(double r) {
  detail::require_ratio(r, "geometric_concurrence");
  if (r == 0.0 || std::isinf(r)) return 0.0;
  const Circle focal = focal_circle();
  // Circle 1/r is the mirror image of circle r and cuts the same chord; folding keeps r² finite.
  const ApolloniusCircle member(r > 1.0 ? 1.0 / r : r);
  if (member.kind() == CircleKind::line) {
    // Re z = 1/2 passes through the focal center.
    return 2.0 * focal.radius;
  }
  const auto points = intersect(member.as_circle(), focal);
  if (!points) return 0.0;
  return std::abs(points->first - points->second);
}

namespace detail {
// Bipolar-gauge pair: |A⟩ = (e^{iσ}, e^τ)/√(1 + e^{2τ}) and its mirror
// |A_s⟩ = (e^τ, e^{-iσ})/√(1 + e^{2τ}) on the |0…0⟩, |1…1⟩ amplitudes.
inline std::array<Complex, 2> bipolar_pair(const BipolarCoords& c) {
  const OneQubitState s = bipolar_one_qubit(c);
  return {s.amp[0], s.amp[1]};
}
}  // namespace detail

inline NQubitApolloniusState bipolar_n_state(const BipolarCoords& c, std::size_t qubits) {
  const auto p = detail::bipolar_pair(c);
  return {qubits, p[0], p[1]};
}

/// Mirror image of bipolar_n_state in Re z = 1/2, written in the same gauge.
inline NQubitApolloniusState bipolar_symmetric_n_state(const BipolarCoords& c, std::size_t qubits) {
  const auto p = detail::bipolar_pair(c);
  return {qubits, p[1], std::conj(p[0])};
}

/**
 * Complex fidelity F·e^{-iσ} = e^{-iσ}/cosh τ of the bipolar symmetric pair,
 * taken as the transition amplitude ⟨A|A_s⟩. The modulus is gauge
 * independent; the phase is pinned by this ordering and gauge.
 */
inline Complex complex_fidelity_bipolar(const BipolarCoords& c, std::size_t qubits) {
  return inner(bipolar_n_state(c, qubits), bipolar_symmetric_n_state(c, qubits));
}

}  // namespace aq
