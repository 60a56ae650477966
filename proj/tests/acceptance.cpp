// Acceptance gate: one line per criterion, exit status 0 only if all pass.
// Usage: aq_acceptance <path-to-aq>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "aq/aq.hpp"
#include "cli_runner.hpp"
#include "oracles.hpp"

namespace {

using aq::Complex;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

oracle::Amps amps4(const aq::TwoQubitState& s) { return {s.amp.begin(), s.amp.end()}; }

Outcome entropy_constancy() {
  const auto start = Clock::now();
  double spread = 0.0;
  for (double r : {0.5, 2.0, 5.0}) {
    const auto circle = aq::circle_from_ratio(r);
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 100; ++k) {
      const Complex z = circle.point_at(2.0 * aq::kPi * k / 100.0).value();
      const double h = aq::shannon_entropy(aq::ratio(z));
      // Binary entropy of the measured distribution must agree with the closed form.
      spread = std::max(spread, std::abs(h - oracle::binary_entropy(aq::probabilities(z).p1)));
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    spread = std::max(spread, hi - lo);
  }
  const double at_one = std::abs(aq::shannon_entropy(1.0) - 1.0);
  const bool ends = aq::shannon_entropy(0.0) == 0.0 && aq::shannon_entropy(HUGE_VAL) == 0.0;
  const double t = seconds_since(start);
  return {spread < 1e-10 && at_one < 1e-12 && ends && t < 1.0,
          "spread=" + fmt("%.2e", spread) + " |H(1)-1|=" + fmt("%.2e", at_one) + " H(0)=H(inf)=0:" +
              (ends ? "yes" : "no") + " t=" + fmt("%.3fs", t)};
}

Outcome entropy_curvature() {
  const double closed = aq::entropy_derivatives(1.0).second;
  const double target = -1.0 / (4.0 * std::log(2.0));
  double worst = 0.0;
  for (double x = 0.1; x <= 10.0; x += 0.01) {
    const auto d = aq::entropy_derivatives(x);
    worst = std::max(worst, std::abs(d.first - oracle::first_derivative(oracle::entropy_of_r2, x, 1e-5)));
    worst = std::max(worst, std::abs(d.second - oracle::second_derivative(oracle::entropy_of_r2, x, 1e-3)));
  }
  const double err = std::abs(closed - target);
  return {err < 1e-9 && worst < 1e-6 && std::abs(closed + 0.360674) < 1e-6,
          "H''(1)=" + fmt("%.9f", closed) + " fd_max_err=" + fmt("%.2e", worst)};
}

Outcome concurrence_agreement() {
  const auto start = Clock::now();
  std::mt19937_64 rng(42);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z = oracle::random_point(rng, 10.0);
    const double r = aq::ratio(z);
    const double det = oracle::concurrence(oracle::circuit_state(z, 2));
    for (double c : {aq::concurrence_determinant(aq::apollonius_n_state(z, 2).two_qubit()),
                     aq::concurrence_closed_form(r), aq::fidelity_symmetric_n(z, 2), aq::fidelity_symmetric(z),
                     aq::geometric_concurrence(r)}) {
      worst = std::max(worst, std::abs(c - det));
    }
  }
  const double t = seconds_since(start);
  return {worst < 1e-10 && t < 1.0, "max_dev=" + fmt("%.2e", worst) + " t=" + fmt("%.3fs", t)};
}

Outcome n_independence() {
  std::mt19937_64 rng(43);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex z = oracle::random_point(rng, 10.0);
    const double base = aq::fidelity_symmetric_n(z, 1);
    for (std::size_t n : {2u, 5u, 10u}) {
      worst = std::max(worst, std::abs(aq::fidelity_symmetric_n(z, n) - base));
      const double dense = std::abs(oracle::dot(aq::symmetric_n_state(z, n).dense(), aq::apollonius_n_state(z, n).dense()));
      worst = std::max(worst, std::abs(dense - base));
    }
  }
  return {worst < 1e-12, "max_dev=" + fmt("%.2e", worst)};
}

Outcome bipolar_consistency() {
  double sech_dev = 0.0, sigma_dev = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double tau = -3.0 + 6.0 * i / 600.0;
    const double r = std::exp(tau);
    sech_dev = std::max(sech_dev, std::abs(aq::concurrence_sech(tau) - 2.0 * r / (1.0 + r * r)));
    const double ref = oracle::concurrence(amps4(aq::bipolar_two_qubit({tau, 0.0})));
    for (int j = 1; j <= 36; ++j) {
      const double sigma = -aq::kPi + 2.0 * aq::kPi * j / 36.0;
      sigma_dev = std::max(sigma_dev, std::abs(oracle::concurrence(amps4(aq::bipolar_two_qubit({tau, sigma}))) - ref));
    }
  }
  return {sech_dev < 1e-12 && sigma_dev < 1e-12, "sech_dev=" + fmt("%.2e", sech_dev) + " sigma_dev=" + fmt("%.2e", sigma_dev)};
}

Outcome nls_identity() {
  const auto start = Clock::now();
  const aq::NlsGrid grid;  // 50×50 over τ ∈ [-3, 3], σ ∈ (-π, π]
  const auto soliton = aq::ConcurrenceField::soliton();
  const double coarse = aq::max_nls_residual(soliton, grid, 1e-3);
  const double fine = aq::max_nls_residual(soliton, grid, 5e-4);
  const double control = aq::max_nls_residual(aq::ConcurrenceField::scaled_soliton(1.1), grid, 1e-3);
  const double ratio = coarse / fine;
  const double t = seconds_since(start);
  return {coarse < 1e-4 && std::abs(ratio - 4.0) < 1.0 && control > 0.1 && t < 1.0,
          "residual=" + fmt("%.2e", coarse) + " halving_ratio=" + fmt("%.2f", ratio) + " control=" + fmt("%.3f", control) +
              " t=" + fmt("%.3fs", t)};
}

Outcome decomposition_round_trip() {
  std::mt19937_64 rng(44);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = oracle::haar_state(rng);
    const aq::TwoQubitState state{{s[0], s[1], s[2], s[3]}};
    worst = std::max(worst, oracle::distance_up_to_phase(amps4(aq::reconstruct(aq::decompose(state))), s));
  }
  const aq::ApolloniusDecomposition worked{2.0, 0.5, 0.5, 0.0};
  const auto psi = aq::reconstruct(worked);
  const double c_param = aq::concurrence_parametric(worked);
  const double c_det = oracle::concurrence(amps4(psi));
  const double c_refl = std::abs(oracle::dot(amps4(aq::reflected_state(worked)), amps4(psi)));
  const double worked_dev = std::max({std::abs(c_param - 0.9), std::abs(c_det - 0.9), std::abs(c_refl - 0.9)});
  return {worst < 1e-10 && worked_dev < 1e-12,
          "round_trip_max=" + fmt("%.2e", worst) + " worked_C_dev=" + fmt("%.2e", worked_dev)};
}

aq::ApolloniusDecomposition random_decomposition(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(-aq::kPi, aq::kPi);
  return {oracle::random_point(rng, 3.0), oracle::random_point(rng, 3.0), oracle::random_point(rng, 3.0), phase(rng)};
}

Outcome reflection_principle() {
  std::mt19937_64 rng(45);
  double overlap_dev = 0.0, construction_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_decomposition(rng);
    const auto psi = aq::reconstruct(d);
    const double c = oracle::concurrence(amps4(psi));
    overlap_dev = std::max(overlap_dev, std::abs(std::abs(oracle::dot(amps4(aq::reflected_state(d)), amps4(psi))) - c));
    construction_dev = std::max(construction_dev, oracle::distance_up_to_phase(amps4(aq::phase_flip_reflection(psi)),
                                                                               amps4(aq::reflected_state_three_step(d))));
  }
  return {overlap_dev < 1e-10 && construction_dev < 1e-10,
          "overlap_dev=" + fmt("%.2e", overlap_dev) + " flip_vs_three_step=" + fmt("%.2e", construction_dev)};
}

Outcome law_of_cosines() {
  std::mt19937_64 rng(46);
  double residual = 0.0, weights = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_decomposition(rng);
    residual = std::max(residual, aq::law_of_cosines_residual(d));
    const auto sc = aq::superposition_coefficients(d.xi);
    weights = std::max(weights, std::abs(std::abs(sc.mu) + std::abs(sc.nu) - 1.0));
  }
  return {residual < 1e-10 && weights < 1e-12, "residual=" + fmt("%.2e", residual) + " |mu|+|nu|-1=" + fmt("%.2e", weights)};
}

Outcome cli_reproducibility(const std::string& aq_path) {
  const auto start = Clock::now();
  const auto verify = cli::run(aq_path, "verify --seed 42 --trials 1000");
  const double t = seconds_since(start);
  bool identical = true;
  for (const char* cmd : {"entropy-grid", "concurrence-grid", "circles --ratios 0.5,1,2,inf", "bipolar-grid"}) {
    const auto a = cli::run(aq_path, cmd);
    const auto b = cli::run(aq_path, cmd);
    identical = identical && a.exit_code == 0 && !a.out.empty() && a.out == b.out;
  }
  return {verify.exit_code == 0 && t < 10.0 && identical,
          "verify_exit=" + std::to_string(verify.exit_code) + " t=" + fmt("%.2fs", t) +
              " grids_identical=" + (identical ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-aq>\n", argv[0]);
    return 2;
  }
  const std::string aq_path = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"entropy constant on circles, H(1)=1, H(0)=H(inf)=0", entropy_constancy},
      {"entropy curvature at r=1 and finite differences", entropy_curvature},
      {"concurrence routes agree on 1000 points", concurrence_agreement},
      {"symmetric fidelity independent of n", n_independence},
      {"bipolar sech profile, sigma independence", bipolar_consistency},
      {"NLS soliton residual, order, negative control", nls_identity},
      {"decomposition round trip and worked point", decomposition_round_trip},
      {"reflection principle", reflection_principle},
      {"law of cosines and |mu|+|nu|=1", law_of_cosines},
      {"CLI verify and grid determinism", [&] { return cli_reproducibility(aq_path); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[AC-%zu] %-52s %s  %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
