#pragma once

// Two-qubit Apollonius states in bipolar coordinates. Their concurrence is
// the sech profile 1/cosh τ, and the complex concurrence e^{-iσ}/cosh τ is a
// stationary one-soliton of i𝒞_σ = 𝒞_ττ + 2|𝒞|²𝒞, checked here by finite
// differences.

#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "aq/complex_plane.hpp"
#include "aq/error.hpp"
#include "aq/multi_qubit.hpp"
#include "aq/state.hpp"

namespace aq {

/// (e^{iσ}|00⟩ + e^τ|11⟩)/√(1 + e^{2τ}).
inline TwoQubitState bipolar_two_qubit(const BipolarCoords& c) { return bipolar_n_state(c, 2).two_qubit(); }

/// sech τ.
inline double concurrence_sech(double tau) { return 1.0 / std::cosh(tau); }

/// ⟨A|A_s⟩ on the explicit two-qubit bipolar pair; equals e^{-iσ}/cosh τ.
inline Complex complex_concurrence(const BipolarCoords& c) {
  const TwoQubitState a = bipolar_two_qubit(c);
  const TwoQubitState a_s = bipolar_symmetric_n_state(c, 2).two_qubit();
  return inner(a, a_s);
}

inline Complex complex_concurrence_closed_form(const BipolarCoords& c) {
  return std::polar(concurrence_sech(c.tau()), -c.sigma());
}

/// A complex field 𝒞(τ, σ) on the bipolar chart.
class ConcurrenceField {
 public:
  using Function = std::function<Complex(double tau, double sigma)>;

  explicit ConcurrenceField(Function f) : f_(std::move(f)) {}

  /// e^{-iσ}/cosh τ.
  static ConcurrenceField soliton() {
    return ConcurrenceField([](double tau, double sigma) { return std::polar(1.0 / std::cosh(tau), -sigma); });
  }

  /// amplitude·e^{-iσ}/cosh τ; any amplitude other than ±1 breaks the equation.
  static ConcurrenceField scaled_soliton(double amplitude) {
    return ConcurrenceField(
        [amplitude](double tau, double sigma) { return amplitude * std::polar(1.0 / std::cosh(tau), -sigma); });
  }

  Complex operator()(double tau, double sigma) const { return f_(tau, sigma); }

 private:
  Function f_;
};

inline constexpr double kDefaultNlsStep = 1e-3;
inline constexpr double kDefaultNlsTolerance = 1e-4;

/**
 * i·∂σ𝒞 - ∂ττ𝒞 - 2|𝒞|²𝒞 with second-order central differences of step h
 * in both directions. Truncation error is O(h²); round-off grows like ε/h².
 */
inline Complex nls_residual(const ConcurrenceField& field, double tau, double sigma, double h = kDefaultNlsStep) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("nls_residual: step must be positive");
  const Complex c = field(tau, sigma);
  const Complex d_sigma = (field(tau, sigma + h) - field(tau, sigma - h)) / (2.0 * h);
  const Complex d_tau_tau = (field(tau + h, sigma) - 2.0 * c + field(tau - h, sigma)) / (h * h);
  return Complex{0.0, 1.0} * d_sigma - d_tau_tau - 2.0 * std::norm(c) * c;
}

struct NlsGrid {
  double tau_min = -3.0;
  double tau_max = 3.0;
  double sigma_min = -kPi;  // exclusive
  double sigma_max = kPi;   // inclusive
  std::size_t tau_steps = 50;
  std::size_t sigma_steps = 50;

  double tau_at(std::size_t i) const {
    return tau_steps == 1 ? tau_min : tau_min + (tau_max - tau_min) * static_cast<double>(i) / static_cast<double>(tau_steps - 1);
  }
  /// σ runs over (σ_min, σ_max], endpoint included.
  double sigma_at(std::size_t j) const {
    return sigma_min + (sigma_max - sigma_min) * static_cast<double>(j + 1) / static_cast<double>(sigma_steps);
  }
};

/// Largest |nls_residual| over the grid.
inline double max_nls_residual(const ConcurrenceField& field, const NlsGrid& grid, double h = kDefaultNlsStep) {
  if (grid.tau_steps == 0 || grid.sigma_steps == 0) throw DomainError("max_nls_residual: empty grid");
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.tau_steps; ++i) {
    for (std::size_t j = 0; j < grid.sigma_steps; ++j) {
      worst = std::max(worst, std::abs(nls_residual(field, grid.tau_at(i), grid.sigma_at(j), h)));
    }
  }
  return worst;
}

}  // namespace aq
