#pragma once

// Cross-route self-verification. Every suite evaluates one identity of the
// library along two or more independent routes over seeded random inputs
// and reports the worst deviation against a fixed tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aq/bipolar_nls.hpp"
#include "aq/complex_plane.hpp"
#include "aq/generic_two_qubit.hpp"
#include "aq/multi_qubit.hpp"
#include "aq/single_qubit.hpp"

namespace aq {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  // Shifts one route of the concurrence suite by 1e-6 so the harness can be shown to fail.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  double observed = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;  // observed must exceed tolerance instead of staying below it
  std::size_t checks = 0;
  std::string failure;  // exception text, if the suite threw

  bool passed() const {
    if (!failure.empty() || !std::isfinite(observed)) return false;
    return lower_bound ? observed > tolerance : observed <= tolerance;
  }
};

namespace detail {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Uniform point in the disk |z| ≤ radius, away from the foci.
  Complex point(double radius = 10.0) {
    for (;;) {
      const Complex z{uniform(-radius, radius), uniform(-radius, radius)};
      if (std::abs(z) <= radius && std::abs(z) > 1e-6 && std::abs(z - 1.0) > 1e-6) return z;
    }
  }

  TwoQubitState haar_state() {
    std::normal_distribution<double> gauss;
    TwoQubitState s;
    for (auto& a : s.amp) a = Complex{gauss(rng_), gauss(rng_)};
    return normalize(s);
  }

  ApolloniusDecomposition decomposition() {
    return {ExtendedComplex(point(3.0)), ExtendedComplex(point(3.0)), ExtendedComplex(point(3.0)), uniform(-kPi, kPi)};
  }

 private:
  std::mt19937_64 rng_;
};

inline SuiteResult run_suite(std::string name, double tolerance, const std::function<void(SuiteResult&)>& body,
                             bool lower_bound = false) {
  SuiteResult out;
  out.name = std::move(name);
  out.tolerance = tolerance;
  out.lower_bound = lower_bound;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failure = e.what();
  }
  return out;
}

inline void record(SuiteResult& r, double error) {
  // NaN must fail, so it is kept rather than swallowed by max.
  r.observed = std::isnan(error) || std::isnan(r.observed) ? NAN : std::max(r.observed, error);
  ++r.checks;
}

inline double binary_entropy(const Probabilities& p) {
  double h = 0.0;
  for (const double q : {p.p0, p.p1}) {
    if (q > 0.0) h -= q * std::log2(q);
  }
  return h;
}

}  // namespace detail

/// Runs every suite; deterministic for a given seed and trial count.
inline std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
  using detail::record;
  using detail::run_suite;
  const std::size_t n = std::max<std::size_t>(opts.trials, 1);
  detail::Sampler rng(opts.seed);
  std::vector<SuiteResult> out;

  out.push_back(run_suite("bipolar-round-trip", tolerance::kGeometry, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtendedComplex z(rng.point());
      const BipolarCoords c = to_bipolar(z);
      record(r, std::abs(from_bipolar(c).value() - z.value()));
      record(r, std::abs(from_bipolar_cartesian(c).value() - z.value()));
    }
  }));

  out.push_back(run_suite("reflection-involutions", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtendedComplex z(rng.point());
      record(r, std::abs(reflect_vertical(reflect_vertical(z)).value() - z.value()));
      record(r, std::abs(invert_in_circle(invert_in_circle(z)).value() - z.value()));
      const ExtendedComplex on_focal(0.5 + 0.5 * std::polar(1.0, rng.uniform(-kPi, kPi)));
      record(r, std::abs(invert_in_circle(on_focal).value() - on_focal.value()));
    }
  }));

  out.push_back(run_suite("circle-ratio", tolerance::kGeometry, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < std::max<std::size_t>(n / 20, 1); ++i) {
      const double ratio_value = std::exp(rng.uniform(-3.0, 3.0));
      const ApolloniusCircle circle(ratio_value);
      for (int k = 0; k < 100; ++k) {
        const ExtendedComplex z = circle.point_at(2.0 * kPi * k / 100.0);
        record(r, std::abs(ratio(z) - ratio_value));
        record(r, std::abs(ratio(reflect_vertical(z)) - 1.0 / ratio_value));
      }
    }
  }));

  out.push_back(run_suite("entropy-circle-constancy", tolerance::kGeometry, [&](SuiteResult& r) {
    for (const double ratio_value : {0.5, 2.0, 5.0}) {
      const ApolloniusCircle circle(ratio_value);
      double lo = HUGE_VAL;
      double hi = -HUGE_VAL;
      for (int k = 0; k < 100; ++k) {
        const double h = detail::binary_entropy(probabilities(circle.point_at(2.0 * kPi * k / 100.0)));
        lo = std::min(lo, h);
        hi = std::max(hi, h);
      }
      record(r, hi - lo);
      record(r, std::abs(hi - shannon_entropy(ratio_value)));
    }
  }));

  out.push_back(run_suite("entropy-mirror-symmetry", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio_value = std::exp(rng.uniform(-5.0, 5.0));
      record(r, std::abs(shannon_entropy(ratio_value) - shannon_entropy(1.0 / ratio_value)));
    }
  }));

  out.push_back(run_suite("entropy-derivatives", 1e-6, [&](SuiteResult& r) {
    // H'' uses the five-point stencil: the three-point one at a step wide
    // enough to beat round-off (ε/h²) is truncation-bound near r² = 0.1.
    const double step1 = 1e-5;
    const double step2 = 1e-3;
    const auto entropy_of_r2 = [](double r2) { return shannon_entropy(std::sqrt(r2)); };
    for (std::size_t i = 0; i < n; ++i) {
      const double x = rng.uniform(0.1, 10.0);
      const auto d = entropy_derivatives(x);
      const auto h = [&](double k) { return entropy_of_r2(x + k * step2); };
      const double second = (-h(2) + 16.0 * h(1) - 30.0 * h(0) + 16.0 * h(-1) - h(-2)) / (12.0 * step2 * step2);
      record(r, std::abs(d.first - (entropy_of_r2(x + step1) - entropy_of_r2(x - step1)) / (2.0 * step1)));
      record(r, std::abs(d.second - second));
    }
  }));

  out.push_back(run_suite("fidelity-routes", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtendedComplex z(rng.point());
      const double f = fidelity_symmetric(z);
      const double d = fidelity_distance(z);
      record(r, std::abs(f - fidelity_symmetric_overlap(z)));
      record(r, std::abs(d * d + f * f - 1.0));
      record(r, phase_aligned_distance(symmetric_state(z), apollonius_state(reflect_vertical(z))));
    }
  }));

  out.push_back(run_suite("circuit-identity", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtendedComplex z(rng.point());
      const OneQubitState via_gates = apply_gate(hadamard(), apply_gate(pauli_y(), coherent_state(z)));
      record(r, phase_aligned_distance(via_gates, symmetric_circuit_state(z)));
      const OneQubitState h = apply_gate(hadamard(), coherent_state(z));
      const Complex v = z.value();
      const double scale = std::sqrt(2.0) * std::sqrt(1.0 + std::norm(v));
      record(r, norm(h - OneQubitState{{(1.0 + v) / scale, (1.0 - v) / scale}}));
    }
  }));

  out.push_back(run_suite("concurrence-agreement", tolerance::kGeometry, [&](SuiteResult& r) {
    const double fault = opts.inject_fault ? 1e-6 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const ExtendedComplex z(rng.point());
      const TwoQubitState psi = cnot(tensor(apollonius_state(z), ket0()));
      const double det = concurrence_determinant(psi);
      const double rz = ratio(z);
      record(r, std::abs(det - (concurrence_closed_form(rz) + fault)));
      record(r, std::abs(det - fidelity_symmetric_n(z, 2)));
      record(r, std::abs(det - geometric_concurrence(rz)));
      record(r, norm(psi - apollonius_n_state(z, 2).two_qubit()));
    }
  }));

  out.push_back(run_suite("n-qubit-fidelity", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < std::max<std::size_t>(n / 10, 1); ++i) {
      const ExtendedComplex z(rng.point());
      const double f1 = fidelity_symmetric(z);
      for (const std::size_t q : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{10}}) {
        record(r, std::abs(fidelity_symmetric_n(z, q) - f1));
        const DenseState circuit = cnot_chain_state(z, q);
        const DenseState sparse = apollonius_n_state(z, q).dense();
        double diff = 0.0;
        for (std::size_t k = 0; k < circuit.size(); ++k) diff += std::norm(circuit[k] - sparse[k]);
        record(r, std::sqrt(diff));
      }
    }
  }));

  out.push_back(run_suite("bipolar-concurrence", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < std::max<std::size_t>(n / 10, 1); ++i) {
      const double tau = rng.uniform(-3.0, 3.0);
      record(r, std::abs(concurrence_sech(tau) - concurrence_closed_form(std::exp(tau))));
      for (int k = 0; k < 32; ++k) {
        const BipolarCoords c(tau, -kPi + 2.0 * kPi * (k + 1) / 32.0);
        record(r, std::abs(concurrence_determinant(bipolar_two_qubit(c)) - concurrence_sech(tau)));
        record(r, std::abs(complex_concurrence(c) - complex_concurrence_closed_form(c)));
      }
    }
  }));

  out.push_back(run_suite("nls-soliton-residual", kDefaultNlsTolerance, [&](SuiteResult& r) {
    record(r, max_nls_residual(ConcurrenceField::soliton(), NlsGrid{}));
  }));

  out.push_back(run_suite("nls-convergence-order", 1.0, [&](SuiteResult& r) {
    const double coarse = max_nls_residual(ConcurrenceField::soliton(), NlsGrid{}, kDefaultNlsStep);
    const double fine = max_nls_residual(ConcurrenceField::soliton(), NlsGrid{}, kDefaultNlsStep / 2.0);
    record(r, std::abs(coarse / fine - 4.0));
  }));

  out.push_back(run_suite(
      "nls-negative-control", 0.1,
      [&](SuiteResult& r) {
        r.observed = std::abs(nls_residual(ConcurrenceField::scaled_soliton(1.1), 0.0, 0.0));
        r.checks = 1;
      },
      /*lower_bound=*/true));

  out.push_back(run_suite("decomposition-round-trip", tolerance::kGeometry, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const TwoQubitState s = rng.haar_state();
      const TwoQubitState back = reconstruct(decompose(s));
      record(r, phase_aligned_distance(back, s));
      record(r, norm(back - s));
    }
  }));

  out.push_back(run_suite("reflection-principle", tolerance::kGeometry, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ApolloniusDecomposition d = rng.decomposition();
      const TwoQubitState psi = reconstruct(d);
      const double det = concurrence_determinant(psi);
      record(r, std::abs(concurrence_parametric(d) - det));
      record(r, std::abs(fidelity(reflected_state(d), psi) - det));
      record(r, phase_aligned_distance(phase_flip_reflection(psi), reflected_state(d)));
      record(r, phase_aligned_distance(reflected_state_three_step(d), reflected_state(d)));
    }
  }));

  out.push_back(run_suite("law-of-cosines", tolerance::kGeometry, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ApolloniusDecomposition d = rng.decomposition();
      const LawOfCosines law = law_of_cosines(d);
      record(r, law.residual);
      record(r, std::abs(law.concurrence - concurrence_parametric(d)));
    }
  }));

  out.push_back(run_suite("superposition-coefficients", tolerance::kState, [&](SuiteResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const ApolloniusDecomposition d = rng.decomposition();
      const auto sc = superposition_coefficients(d.xi);
      record(r, std::abs(std::abs(sc.mu) + std::abs(sc.nu) - 1.0));
      ApolloniusDecomposition phase_free = d;
      phase_free.global_phase = 0.0;
      const Complex overlap = inner(reflected_state(phase_free), reconstruct(phase_free));
      record(r, std::abs(complex_concurrence(d) + overlap));
    }
  }));

  return out;
}

inline bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
}

}  // namespace aq
