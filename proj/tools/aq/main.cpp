// aq: plot-ready grids, state decomposition and cross-route verification
// for the Apollonius representation of qubits.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or domain error,
// 3 verification failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aq/aq.hpp"
#include "table_writer.hpp"

namespace {

using aq::cli::Format;
using aq::cli::TableWriter;

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double xmin = -1.0;
  double xmax = 2.0;
  double ymin = -1.5;
  double ymax = 1.5;
  std::size_t nx = 300;
  std::size_t ny = 300;

  void validate() const {
    if (!(xmin < xmax) || !(ymin < ymax)) throw UsageError("grid bounds must satisfy xmin < xmax and ymin < ymax");
    if (nx < 2 || ny < 2) throw UsageError("grid needs nx >= 2 and ny >= 2");
  }
  double x_at(std::size_t i) const { return xmin + (xmax - xmin) * static_cast<double>(i) / static_cast<double>(nx - 1); }
  double y_at(std::size_t j) const { return ymin + (ymax - ymin) * static_cast<double>(j) / static_cast<double>(ny - 1); }
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;

  Format parsed_format() const { return format == "json" ? Format::json : Format::csv; }
};

/// stdout, or the file named by --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw IoError("failed writing output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_grid_flags(CLI::App* cmd, GridSpec& grid) {
  cmd->add_option("--xmin", grid.xmin, "Left edge of the grid")->capture_default_str();
  cmd->add_option("--xmax", grid.xmax, "Right edge of the grid")->capture_default_str();
  cmd->add_option("--ymin", grid.ymin, "Bottom edge of the grid")->capture_default_str();
  cmd->add_option("--ymax", grid.ymax, "Top edge of the grid")->capture_default_str();
  cmd->add_option("--nx", grid.nx, "Samples along x")->capture_default_str();
  cmd->add_option("--ny", grid.ny, "Samples along y")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", out.path, "Output file (default: stdout)");
}

int run_entropy_grid(const GridSpec& grid, const OutputOptions& out) {
  grid.validate();
  Sink sink(out.path);
  {
    TableWriter table(sink.stream(), out.parsed_format(), {"x", "y", "r", "entropy"});
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const aq::ExtendedComplex z(grid.x_at(i), grid.y_at(j));
        const double r = aq::ratio(z);
        table.row({grid.x_at(i), grid.y_at(j), r, aq::shannon_entropy(r)});
      }
    }
  }
  sink.close();
  return 0;
}

int run_concurrence_grid(const GridSpec& grid, const OutputOptions& out, std::uint64_t seed) {
  grid.validate();
  Sink sink(out.path);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t sampled = 0;
  {
    TableWriter table(sink.stream(), out.parsed_format(), {"x", "y", "r", "concurrence"});
    for (std::size_t j = 0; j < grid.ny; ++j) {
      for (std::size_t i = 0; i < grid.nx; ++i) {
        const aq::ExtendedComplex z(grid.x_at(i), grid.y_at(j));
        const double r = aq::ratio(z);
        const double c = aq::concurrence_closed_form(r);
        // About 1% of the points are re-derived from the amplitudes.
        if (rng() % 100 == 0) {
          const double det = aq::concurrence_determinant(aq::apollonius_n_state(z, 2).two_qubit());
          worst = std::max(worst, std::abs(det - c));
          ++sampled;
        }
        table.row({grid.x_at(i), grid.y_at(j), r, c});
      }
    }
  }
  sink.close();
  if (!(worst <= aq::tolerance::kGeometry)) {
    std::cerr << "concurrence cross-check failed: max deviation " << aq::cli::format_number(worst) << " over "
              << sampled << " sampled points\n";
    return kExitVerification;
  }
  return 0;
}

std::vector<double> parse_ratios(const std::vector<std::string>& items) {
  std::vector<double> ratios;
  for (const auto& item : items) {
    std::stringstream parts(item);
    std::string token;
    while (std::getline(parts, token, ',')) {
      if (token.empty()) continue;
      double r = 0.0;
      if (token == "inf") {
        r = HUGE_VAL;
      } else {
        std::size_t used = 0;
        try {
          r = std::stod(token, &used);
        } catch (const std::exception&) {
          throw UsageError("not a number: " + token);
        }
        if (used != token.size()) throw UsageError("not a number: " + token);
      }
      if (!(r >= 0.0)) throw UsageError("ratios must be non-negative: " + token);
      ratios.push_back(r);
    }
  }
  if (ratios.empty()) throw UsageError("no ratios given");
  return ratios;
}

int run_circles(const std::vector<std::string>& ratio_items, std::size_t samples, double ymin, double ymax,
                const OutputOptions& out) {
  const std::vector<double> ratios = parse_ratios(ratio_items);
  if (samples < 1) throw UsageError("--samples must be at least 1");
  if (!(ymin < ymax)) throw UsageError("--ymin must be below --ymax");
  Sink sink(out.path);
  {
    TableWriter table(sink.stream(), out.parsed_format(), {"r", "k", "x", "y"});
    for (const double r : ratios) {
      const aq::ApolloniusCircle circle(r);
      switch (circle.kind()) {
        case aq::CircleKind::point: {
          const aq::Complex f = circle.focus();
          table.row({r, 0.0, f.real(), f.imag()});
          break;
        }
        case aq::CircleKind::line:
          for (std::size_t k = 0; k < samples; ++k) {
            const double t = samples == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(samples - 1);
            table.row({r, static_cast<double>(k), 0.5, ymin + (ymax - ymin) * t});
          }
          break;
        case aq::CircleKind::circle:
          for (std::size_t k = 0; k < samples; ++k) {
            const aq::Complex z =
                circle.point_at(2.0 * aq::kPi * static_cast<double>(k) / static_cast<double>(samples)).value();
            table.row({r, static_cast<double>(k), z.real(), z.imag()});
          }
          break;
      }
    }
  }
  sink.close();
  return 0;
}

struct BipolarGridSpec {
  double tau_min = -3.0;
  double tau_max = 3.0;
  std::size_t ntau = 61;
  std::size_t nsigma = 72;
};

int run_bipolar_grid(const BipolarGridSpec& mesh, const OutputOptions& out) {
  if (!(mesh.tau_min < mesh.tau_max) || mesh.ntau < 2 || mesh.nsigma < 2) {
    throw UsageError("bipolar grid needs tau-min < tau-max, ntau >= 2 and nsigma >= 2");
  }
  Sink sink(out.path);
  {
    TableWriter table(sink.stream(), out.parsed_format(),
                      {"tau", "sigma", "x", "y", "concurrence", "complex_concurrence_re", "complex_concurrence_im"});
    aq::NlsGrid grid{mesh.tau_min, mesh.tau_max, -aq::kPi, aq::kPi, mesh.ntau, mesh.nsigma};
    for (std::size_t i = 0; i < mesh.ntau; ++i) {
      for (std::size_t j = 0; j < mesh.nsigma; ++j) {
        const aq::BipolarCoords c(grid.tau_at(i), grid.sigma_at(j));
        const aq::ExtendedComplex z = aq::from_bipolar(c);
        const double x = z.is_infinite() ? HUGE_VAL : z.real();
        const double y = z.is_infinite() ? HUGE_VAL : z.imag();
        const aq::Complex cc = aq::complex_concurrence(c);
        table.row({c.tau(), c.sigma(), x, y, aq::concurrence_sech(c.tau()), cc.real(), cc.imag()});
      }
    }
  }
  sink.close();
  return 0;
}

struct NlsOptions {
  aq::NlsGrid grid;
  double h = aq::kDefaultNlsStep;
  double tolerance = aq::kDefaultNlsTolerance;
  double perturb = 1.0;
};

int run_nls_check(const NlsOptions& o) {
  if (!(o.h > 0.0) || !std::isfinite(o.h)) throw UsageError("--h must be a positive step");
  if (!(o.grid.tau_min <= o.grid.tau_max) || !(o.grid.sigma_min < o.grid.sigma_max) || o.grid.tau_steps < 1 ||
      o.grid.sigma_steps < 1) {
    throw UsageError("invalid tau/sigma ranges");
  }
  const aq::ConcurrenceField field = aq::ConcurrenceField::scaled_soliton(o.perturb);
  const double worst = aq::max_nls_residual(field, o.grid, o.h);
  const bool pass = worst < o.tolerance;
  std::cout << "field: " << aq::cli::format_number(o.perturb) << " * exp(-i sigma) / cosh(tau)\n"
            << "grid: tau [" << aq::cli::format_number(o.grid.tau_min) << ", " << aq::cli::format_number(o.grid.tau_max)
            << "] x " << o.grid.tau_steps << ", sigma (" << aq::cli::format_number(o.grid.sigma_min) << ", "
            << aq::cli::format_number(o.grid.sigma_max) << "] x " << o.grid.sigma_steps << "\n"
            << "step: " << aq::cli::format_number(o.h) << "\n"
            << "max residual: " << aq::cli::format_number(worst) << "\n"
            << "tolerance: " << aq::cli::format_number(o.tolerance) << "\n"
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitVerification;
}

int run_decompose(const std::vector<double>& values, const std::string& format) {
  if (values.size() != 8) throw UsageError("decompose expects 8 numbers: re/im pairs of c00 c01 c10 c11");
  aq::TwoQubitState s;
  for (std::size_t k = 0; k < 4; ++k) s.amp[k] = aq::Complex{values[2 * k], values[2 * k + 1]};
  const double input_norm = aq::norm(s);
  if (!(input_norm > 0.0) || !std::isfinite(input_norm)) throw UsageError("amplitudes must form a nonzero vector");
  if (std::abs(input_norm - 1.0) > aq::tolerance::kState) {
    std::cerr << "warning: input norm " << aq::cli::format_number(input_norm) << " != 1, normalizing\n";
  }
  s = aq::normalize(s);

  const aq::ApolloniusDecomposition d = aq::decompose(s);
  const aq::TwoQubitState psi = aq::reconstruct(d);
  const double c_det = aq::concurrence_determinant(psi);
  const double c_param = aq::concurrence_parametric(d);
  const double c_refl = aq::fidelity(aq::reflected_state(d), psi);
  const aq::LawOfCosines law = aq::law_of_cosines(d);
  const double round_trip = aq::norm(psi - s);

  if (format == "json") {
    const auto point = [](const aq::ExtendedComplex& z) {
      if (z.is_infinite()) return nlohmann::json("inf");
      return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
    };
    nlohmann::json j = {
        {"eta", point(d.eta)},
        {"zeta", point(d.zeta)},
        {"xi", point(d.xi)},
        {"global_phase", d.global_phase},
        {"concurrence", {{"determinant", c_det}, {"parametric", c_param}, {"reflection", c_refl}}},
        {"law_of_cosines_residual", law.residual},
        {"round_trip_error", round_trip},
    };
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const auto num = aq::cli::format_number;
  std::cout << "eta: " << aq::to_string(d.eta) << "\n"
            << "zeta: " << aq::to_string(d.zeta) << "\n"
            << "xi: " << aq::to_string(d.xi) << "\n"
            << "global_phase: " << num(d.global_phase) << "\n"
            << "concurrence_determinant: " << num(c_det) << "\n"
            << "concurrence_parametric: " << num(c_param) << "\n"
            << "concurrence_reflection: " << num(c_refl) << "\n"
            << "law_of_cosines_residual: " << num(law.residual) << "\n"
            << "round_trip_error: " << num(round_trip) << "\n";
  return 0;
}

int run_verify(const aq::VerifyOptions& opts) {
  if (opts.trials < 1) throw UsageError("--trials must be at least 1");
  const auto results = aq::run_verification(opts);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed()) ++failed;
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "  observed=" << aq::cli::format_number(r.observed)
              << (r.lower_bound ? " min=" : " tol=") << aq::cli::format_number(r.tolerance) << " checks=" << r.checks;
    if (!r.failure.empty()) std::cout << " error=\"" << r.failure << "\"";
    std::cout << "\n";
  }
  if (failed == 0) {
    std::cout << "all " << results.size() << " suites passed\n";
    return 0;
  }
  std::cout << failed << " of " << results.size() << " suites failed\n";
  return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apollonius representation of qubit states: grids, decomposition and verification"};
  app.require_subcommand(1);

  GridSpec grid;
  OutputOptions output;
  std::uint64_t seed = 42;

  auto* entropy = app.add_subcommand("entropy-grid", "Shannon entropy over a rectangular grid of z");
  add_grid_flags(entropy, grid);
  add_output_flags(entropy, output);
  entropy->add_option("--seed", seed, "Unused; accepted for a uniform flag set");

  auto* concurrence = app.add_subcommand("concurrence-grid", "Two-qubit concurrence over a rectangular grid of z");
  add_grid_flags(concurrence, grid);
  add_output_flags(concurrence, output);
  concurrence->add_option("--seed", seed, "Seed for the sampled determinant cross-check")->capture_default_str();

  std::vector<std::string> ratio_items;
  std::size_t samples = 100;
  double line_ymin = -1.5;
  double line_ymax = 1.5;
  auto* circles = app.add_subcommand("circles", "Points tracing Apollonius circles for given ratios");
  circles->add_option("--ratios,-r", ratio_items, "Ratios, comma separated or repeated ('inf' allowed)")->required();
  circles->add_option("--samples", samples, "Points per circle")->capture_default_str();
  circles->add_option("--ymin", line_ymin, "Lower end of the r = 1 line segment")->capture_default_str();
  circles->add_option("--ymax", line_ymax, "Upper end of the r = 1 line segment")->capture_default_str();
  add_output_flags(circles, output);

  BipolarGridSpec bipolar;
  auto* bipolar_cmd = app.add_subcommand("bipolar-grid", "Bipolar mesh with concurrence and complex concurrence");
  bipolar_cmd->add_option("--tau-min", bipolar.tau_min)->capture_default_str();
  bipolar_cmd->add_option("--tau-max", bipolar.tau_max)->capture_default_str();
  bipolar_cmd->add_option("--ntau", bipolar.ntau)->capture_default_str();
  bipolar_cmd->add_option("--nsigma", bipolar.nsigma, "Samples of sigma over (-pi, pi]")->capture_default_str();
  add_output_flags(bipolar_cmd, output);

  NlsOptions nls;
  auto* nls_cmd = app.add_subcommand("nls-check", "Finite-difference check of the NLS soliton identity");
  nls_cmd->set_help_flag("--help", "Print this help message and exit");
  nls_cmd->add_option("--tau-min", nls.grid.tau_min)->capture_default_str();
  nls_cmd->add_option("--tau-max", nls.grid.tau_max)->capture_default_str();
  nls_cmd->add_option("--sigma-min", nls.grid.sigma_min, "Exclusive lower end")->capture_default_str();
  nls_cmd->add_option("--sigma-max", nls.grid.sigma_max, "Inclusive upper end")->capture_default_str();
  nls_cmd->add_option("--ntau", nls.grid.tau_steps)->capture_default_str();
  nls_cmd->add_option("--nsigma", nls.grid.sigma_steps)->capture_default_str();
  nls_cmd->add_option("--h", nls.h, "Finite-difference step")->capture_default_str();
  nls_cmd->add_option("--tol", nls.tolerance, "Pass threshold for the max residual")->capture_default_str();
  nls_cmd->add_option("--perturb", nls.perturb, "Amplitude of the tested field (1 = soliton)")->capture_default_str();

  std::vector<double> amplitudes;
  std::string decompose_format = "text";
  auto* decompose = app.add_subcommand("decompose", "Apollonius (eta, zeta, xi) parameters of a two-qubit state");
  decompose->add_option("amplitudes", amplitudes, "re im pairs of c00 c01 c10 c11")->expected(8)->required();
  decompose->add_option("--format", decompose_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  aq::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run every cross-route verification suite");
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify->add_option("--trials", verify_opts.trials)->capture_default_str();
  verify->add_flag("--inject-fault", verify_opts.inject_fault, "Perturb one route to prove the harness can fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*entropy) return run_entropy_grid(grid, output);
    if (*concurrence) return run_concurrence_grid(grid, output, seed);
    if (*circles) return run_circles(ratio_items, samples, line_ymin, line_ymax, output);
    if (*bipolar_cmd) return run_bipolar_grid(bipolar, output);
    if (*nls_cmd) return run_nls_check(nls);
    if (*decompose) return run_decompose(amplitudes, decompose_format);
    if (*verify) return run_verify(verify_opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const aq::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
