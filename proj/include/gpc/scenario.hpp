#pragma once

// Batch front end shared by the `gpconv` tool and the tests: flat key-value
// configuration, result records, and CSV emission.
//
// Config format: one `key = value` per line, `#` starts a comment. Vectors
// are comma-separated. Recognized keys:
//
//   b_field            tesla, 3-vector               (default 0, 10, 0)
//   direction          propagation direction         (default 1, 0, 0)
//   length             m                             (default 1e7)
//   frequency          Hz                            (default 1e8)
//   polarization       plus | cross                  (default plus)
//   r | squeeze_db     photon squeezing, exclusive   (default r = 0)
//   squeeze_phase      rad
//   beta_abs, beta_phase
//   graviton_z | cutoff_frequency   explicit z or primordial f_c, exclusive
//   graviton_chi       rad
//   lambda_t           overrides the coupling so that lambda t has this value
//   n_max              truncation for oracle work    (default 16)
//   oracle             true | false
//   counter_rotating   true | false                  (default true)
//   scenario           swap | generate               (entangle)
//   strength           lambda t of the conversion map (default pi/2)
//   map                exchange | conditional | beam_splitter
//                      (default exchange for swap, conditional for generate)
//   scan_axis, scan_min, scan_max, scan_steps, scan_scale (linear | log)

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpc/conversion.hpp"
#include "gpc/cosmology.hpp"
#include "gpc/entanglement.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/polarization.hpp"

namespace gpc {

enum class GravitonSource { vacuum, explicit_z, primordial };
enum class ScanScale { linear, log };
enum class EntangleScenario { swap, generate };
enum class ConversionMap { exchange, conditional, beam_splitter };

struct ScanAxis {
  std::string parameter;  // B, L, f, r_dB, beta_abs, phase, z, f_c
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
  ScanScale scale = ScanScale::linear;
};

struct ScenarioConfig {
  Vec3<double> b_field_tesla{0.0, 10.0, 0.0};
  Vec3<double> direction{1.0, 0.0, 0.0};
  double length_m = 1e7;
  double frequency_hz = 1e8;
  Polarization polarization = Polarization::plus;

  SqueezeParams squeeze;
  std::optional<double> squeeze_db;  // set when squeezing was given in dB
  CoherentParams coherent;

  GravitonSource graviton_source = GravitonSource::vacuum;
  double graviton_z = 0.0;
  double graviton_chi = 0.0;
  double cutoff_hz = 1e9;

  std::optional<double> lambda_t;

  int n_max = 16;
  bool n_max_set = false;
  bool oracle = false;
  bool counter_rotating = true;

  EntangleScenario scenario = EntangleScenario::swap;
  double strength = 1.5707963267948966;
  std::optional<ConversionMap> map;

  std::optional<ScanAxis> scan;
};

/// ConfigError on unknown keys, malformed values or conflicting keys.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
/// Upstream guards (finite inputs, f <= f_c, guard-compatible n_max when the
/// oracle is on). Throws the module's error type.
void validate(const ScenarioConfig& config);

CouplingConfig coupling_from(const ScenarioConfig& config);
TwoModeSqueezeParams graviton_params(const ScenarioConfig& config);

struct ResultRecord {
  // input echo
  double b_perp_tesla = 0.0;
  double length_m = 0.0;
  double frequency_hz = 0.0;
  double r = 0.0;
  double squeeze_phase = 0.0;
  double beta_abs = 0.0;
  double beta_phase = 0.0;
  double z = 0.0;
  std::optional<double> cutoff_hz;
  // outputs
  double lambda_ev = 0.0;
  double lambda_t = 0.0;
  double photon_factor = 1.0;
  double graviton_factor = 1.0;
  double prob_leading = 0.0;
  bool within_guard = true;
  std::optional<double> prob_oracle;
  std::optional<double> rel_deviation;
  std::optional<double> prob_full;
  std::optional<double> oracle_convergence;
};

struct EntangleRecord {
  EntangleScenario scenario = EntangleScenario::swap;
  ConversionMap map = ConversionMap::exchange;
  double strength = 0.0;
  double entropy_before = 0.0;
  double entropy_after = 0.0;
  double negativity_after = 0.0;
  double fidelity_to_target = 0.0;
  double entropy_photon_k1_after = 0.0;
};

/// Brute-force Fock-space evaluation of the conversion probability: first
/// order amplitude of Q and the full exp(-iQ) transition between the
/// single-photon-added and single-graviton-added backgrounds. `full` is
/// left empty when `with_full` is false.
struct OracleResult {
  double first_order = 0.0;
  std::optional<double> full;
};
OracleResult conversion_oracle(const ScenarioConfig& config, int n_max,
                               std::size_t budget = kDefaultDimensionBudget,
                               bool with_full = true);

ResultRecord cmd_convert(const ScenarioConfig& config, bool check_convergence = false);
std::vector<ResultRecord> cmd_scan(const ScenarioConfig& config, const ScanAxis& axis);
EntangleRecord cmd_entangle(const ScenarioConfig& config);

/// Axis sample points in emission order.
std::vector<double> axis_values(const ScanAxis& axis);
/// Copy of `config` with `parameter` set to `value`; ConfigError for
/// unknown parameters.
ScenarioConfig with_parameter(ScenarioConfig config, const std::string& parameter, double value);

/// Scientific notation with 12 significant digits.
std::string format_value(double v);

void write_csv(std::ostream& out, const std::vector<ResultRecord>& rows);
void write_csv(std::ostream& out, const EntangleRecord& row);

}  // namespace gpc
