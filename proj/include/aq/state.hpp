#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "aq/error.hpp"
#include "aq/extended_complex.hpp"

namespace aq {

/**
 * Pure state of a small register as a dense amplitude array.
 *
 * Basis order is lexicographic with qubit 0 most significant, so for two
 * qubits the amplitudes are c00, c01, c10, c11. Constructors in this library
 * always return unit vectors; the type itself does not enforce it so that
 * intermediate, unnormalized vectors can be expressed too.
 */
template <std::size_t Dim>
struct StateVector {
  static_assert(Dim >= 2 && (Dim & (Dim - 1)) == 0, "dimension must be a power of two");
  static constexpr std::size_t dimension = Dim;

  std::array<Complex, Dim> amp{};

  Complex& operator[](std::size_t i) { return amp[i]; }
  const Complex& operator[](std::size_t i) const { return amp[i]; }

  // Named accessors for the one- and two-qubit cases.
  Complex amp0() const requires(Dim == 2) { return amp[0]; }
  Complex amp1() const requires(Dim == 2) { return amp[1]; }
  Complex c00() const requires(Dim == 4) { return amp[0]; }
  Complex c01() const requires(Dim == 4) { return amp[1]; }
  Complex c10() const requires(Dim == 4) { return amp[2]; }
  Complex c11() const requires(Dim == 4) { return amp[3]; }

  friend StateVector operator*(Complex k, StateVector s) {
    for (auto& a : s.amp) a *= k;
    return s;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) {
    for (std::size_t i = 0; i < Dim; ++i) a.amp[i] += b.amp[i];
    return a;
  }
  friend StateVector operator-(StateVector a, const StateVector& b) {
    for (std::size_t i = 0; i < Dim; ++i) a.amp[i] -= b.amp[i];
    return a;
  }
};

using OneQubitState = StateVector<2>;
using TwoQubitState = StateVector<4>;

/// ⟨bra|ket⟩, antilinear in the first argument.
template <std::size_t Dim>
Complex inner(const StateVector<Dim>& bra, const StateVector<Dim>& ket) {
  Complex sum{};
  for (std::size_t i = 0; i < Dim; ++i) sum += std::conj(bra.amp[i]) * ket.amp[i];
  return sum;
}

template <std::size_t Dim>
double norm(const StateVector<Dim>& s) {
  double sum = 0.0;
  for (const auto& a : s.amp) sum += std::norm(a);
  return std::sqrt(sum);
}

/// |⟨u|v⟩|.
template <std::size_t Dim>
double fidelity(const StateVector<Dim>& u, const StateVector<Dim>& v) {
  return std::abs(inner(u, v));
}

template <std::size_t Dim>
StateVector<Dim> normalize(StateVector<Dim> s) {
  const double n = norm(s);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero or non-finite state");
  for (auto& a : s.amp) a /= n;
  return s;
}

/// Rejects inputs whose norm is off by more than tolerance::kNormalization.
template <std::size_t Dim>
void require_normalized(const StateVector<Dim>& s, const char* who) {
  if (!(std::abs(norm(s) - 1.0) <= tolerance::kNormalization)) {
    throw DomainError(std::string(who) + ": state is not normalized");
  }
}

/// Norm of v - e^{iφ}u for the phase φ that best aligns u onto v.
template <std::size_t Dim>
double phase_aligned_distance(const StateVector<Dim>& u, const StateVector<Dim>& v) {
  const Complex overlap = inner(u, v);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return norm(v - phase * u);
}

/// Equality up to a global phase. For unit vectors this is |⟨u|v⟩| = 1, tested through the aligned distance.
template <std::size_t Dim>
bool equal_up_to_phase(const StateVector<Dim>& u, const StateVector<Dim>& v, double tol = tolerance::kState) {
  return phase_aligned_distance(u, v) <= tol;
}

/// Normal form for serialization: the first nonzero amplitude is made real and positive.
template <std::size_t Dim>
StateVector<Dim> canonical_phase(StateVector<Dim> s) {
  for (const auto& a : s.amp) {
    if (std::abs(a) > 0.0) {
      const Complex phase = std::abs(a) / a;
      for (auto& b : s.amp) b *= phase;
      break;
    }
  }
  return s;
}

template <std::size_t DimA, std::size_t DimB>
StateVector<DimA * DimB> tensor(const StateVector<DimA>& a, const StateVector<DimB>& b) {
  StateVector<DimA * DimB> out;
  for (std::size_t i = 0; i < DimA; ++i) {
    for (std::size_t j = 0; j < DimB; ++j) out.amp[i * DimB + j] = a.amp[i] * b.amp[j];
  }
  return out;
}

inline OneQubitState ket0() { return {{Complex{1.0, 0.0}, Complex{}}}; }
inline OneQubitState ket1() { return {{Complex{}, Complex{1.0, 0.0}}}; }

/// Computational basis state |index⟩ of a Dim-level register.
template <std::size_t Dim>
StateVector<Dim> basis_state(std::size_t index) {
  StateVector<Dim> s;
  s.amp.at(index) = 1.0;
  return s;
}

/**
 * Normalized pair ((x - 1), x) / √(|x - 1|² + |x|²), the coefficient pattern
 * shared by every Apollonius state. x = ∞ gives the limit (1, 1)/√2.
 */
inline std::array<Complex, 2> apollonius_pair(const ExtendedComplex& x) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (x.is_infinite()) return {Complex{inv_sqrt2, 0.0}, Complex{inv_sqrt2, 0.0}};
  const Complex v = x.value();
  const Complex lo = v - 1.0;
  const double scale = std::max(std::abs(lo), std::abs(v));
  const double n = scale * std::hypot(std::abs(lo) / scale, std::abs(v) / scale);
  return {lo / n, v / n};
}

/// |x - 1|² + |x|², the squared Apollonius normalization.
inline double apollonius_norm2(const Complex& x) { return std::norm(x - 1.0) + std::norm(x); }

}  // namespace aq
