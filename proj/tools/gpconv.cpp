// gpconv: photon-graviton conversion probabilities, parameter scans and the
// entanglement scenarios, written as CSV.
//
// Exit codes: 0 ok, 1 invalid input, 2 numeric or resource failure,
// 3 oracle-check failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gpc/errors.hpp"
#include "gpc/oracle_checks.hpp"
#include "gpc/scenario.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kNumeric = 2, kOracleFailed = 3 };

struct Options {
  std::string config_path;
  std::string out_path;
  std::optional<int> n_max;
  bool oracle = false;
  bool convergence = false;
  std::string format = "csv";

  // scan axis overrides
  std::string axis;
  std::optional<double> axis_min;
  std::optional<double> axis_max;
  std::optional<int> axis_steps;
  std::string axis_scale;

  std::string suite = "all";
};

gpc::ScenarioConfig load(const Options& opt) {
  gpc::ScenarioConfig c = opt.config_path.empty() ? gpc::ScenarioConfig{}
                                                  : gpc::load_config(opt.config_path);
  if (opt.n_max) {
    c.n_max = *opt.n_max;
    c.n_max_set = true;
  }
  if (opt.oracle) c.oracle = true;
  return c;
}

gpc::ScanAxis scan_axis(const Options& opt, const gpc::ScenarioConfig& c) {
  gpc::ScanAxis axis = c.scan.value_or(gpc::ScanAxis{});
  if (!opt.axis.empty()) axis.parameter = opt.axis;
  if (opt.axis_min) axis.min = *opt.axis_min;
  if (opt.axis_max) axis.max = *opt.axis_max;
  if (opt.axis_steps) axis.steps = *opt.axis_steps;
  if (opt.axis_scale == "log") axis.scale = gpc::ScanScale::log;
  if (opt.axis_scale == "linear") axis.scale = gpc::ScanScale::linear;
  if (axis.parameter.empty()) throw gpc::ConfigError("scan needs an axis (scan_axis or --axis)");
  return axis;
}

// Runs `emit` against the requested output stream.
template <typename Emit>
void with_output(const Options& opt, Emit emit) {
  if (opt.out_path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw gpc::ConfigError("cannot open output file '" + opt.out_path + "'");
  emit(file);
  if (!file) throw gpc::ResourceError("failed writing '" + opt.out_path + "'");
}

void warn_guard(const std::vector<gpc::ResultRecord>& rows) {
  for (const auto& r : rows) {
    if (!r.within_guard) {
      std::cerr << "warning: lambda t = " << gpc::format_value(r.lambda_t)
                << " exceeds the perturbative limit; leading-order value is not a probability\n";
      return;
    }
  }
}

int run_convert(const Options& opt) {
  const gpc::ScenarioConfig c = load(opt);
  const gpc::ResultRecord rec = gpc::cmd_convert(c, opt.convergence);
  std::vector<gpc::ResultRecord> rows{rec};
  warn_guard(rows);
  if (rec.z == 0.0 && rec.r == 0.0 && rec.beta_abs == 0.0) {
    std::cerr << "note: the commonly quoted single-photon figure is ~1e-20; this run gives "
              << gpc::format_value(rec.prob_leading) << "\n";
  }
  with_output(opt, [&](std::ostream& out) { gpc::write_csv(out, rows); });
  return kOk;
}

int run_scan(const Options& opt) {
  const gpc::ScenarioConfig c = load(opt);
  const auto rows = gpc::cmd_scan(c, scan_axis(opt, c));
  warn_guard(rows);
  with_output(opt, [&](std::ostream& out) { gpc::write_csv(out, rows); });
  return kOk;
}

int run_entangle(const Options& opt) {
  const gpc::EntangleRecord rec = gpc::cmd_entangle(load(opt));
  with_output(opt, [&](std::ostream& out) { gpc::write_csv(out, rec); });
  return kOk;
}

int run_oracle_check(const Options& opt) {
  const auto results = gpc::run_oracle_suite(opt.suite);
  bool ok = true;
  with_output(opt, [&](std::ostream& out) { ok = gpc::write_report(out, results); });
  return ok ? kOk : kOracleFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-graviton conversion in a static magnetic field"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_path, "output file (default: standard output)");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv"}));
  };
  auto add_physics = [&](CLI::App* sub) {
    sub->add_option("--n-max", opt.n_max, "Fock cutoff for oracle work")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--oracle", opt.oracle, "cross-check against the brute-force Fock oracle");
  };

  auto* convert = app.add_subcommand("convert", "single conversion probability");
  add_common(convert);
  add_physics(convert);
  convert->add_flag("--convergence", opt.convergence, "rerun the oracle at 2 n_max");

  auto* scan = app.add_subcommand("scan", "probability along one parameter axis");
  add_common(scan);
  add_physics(scan);
  scan->add_option("--axis", opt.axis, "B, L, f, r_dB, beta_abs, phase, z, f_c");
  scan->add_option("--min", opt.axis_min);
  scan->add_option("--max", opt.axis_max);
  scan->add_option("--steps", opt.axis_steps)->check(CLI::PositiveNumber);
  scan->add_option("--scale", opt.axis_scale)->check(CLI::IsMember({"linear", "log"}));

  auto* entangle = app.add_subcommand("entangle", "entanglement swapping and generation");
  add_common(entangle);
  entangle->add_option("--n-max", opt.n_max, "Fock cutoff of the three-mode space")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle-check", "run the built-in oracle suites");
  oracle->add_option("suite", opt.suite, "commutators, bogoliubov, norms, probabilities, "
                                         "identities or all");
  oracle->add_option("--out", opt.out_path, "report file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*convert) return run_convert(opt);
    if (*scan) return run_scan(opt);
    if (*entangle) return run_entangle(opt);
    if (*oracle) return run_oracle_check(opt);
  } catch (const gpc::NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const gpc::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const gpc::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const gpc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kNumeric;
  }
  return kValidation;
}
