#include "gpc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gpc/errors.hpp"
#include "gpc/ladder.hpp"
#include "gpc/units.hpp"

namespace gpc {

// ------------------------------------------------------------------ parsing

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
}

int parse_int(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("key '" + key + "': expected true/false, got '" + text + "'");
}

Vec3<double> parse_vec3(const std::string& key, const std::string& text) {
  Vec3<double> v;
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i == 3) break;
    v[i++] = parse_double(key, trim(part));
  }
  if (i != 3 || std::getline(ss, part, ',')) {
    throw ConfigError("key '" + key + "': expected three comma-separated numbers");
  }
  return v;
}

template <typename Enum>
Enum parse_choice(const std::string& key, const std::string& text,
                  std::initializer_list<std::pair<const char*, Enum>> choices) {
  for (const auto& [name, value] : choices) {
    if (text == name) return value;
  }
  std::string allowed;
  for (const auto& c : choices) allowed += std::string(allowed.empty() ? "" : "|") + c.first;
  throw ConfigError("key '" + key + "': expected " + allowed + ", got '" + text + "'");
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!entries.emplace(key, value).second) throw ConfigError("duplicate key '" + key + "'");
  }

  if (entries.count("r") && entries.count("squeeze_db")) {
    throw ConfigError("'r' and 'squeeze_db' are mutually exclusive");
  }
  if (entries.count("graviton_z") && entries.count("cutoff_frequency")) {
    throw ConfigError("'graviton_z' and 'cutoff_frequency' are mutually exclusive");
  }

  ScenarioConfig c;
  ScanAxis axis;
  bool has_scan = false;
  for (const auto& [key, value] : entries) {
    if (key == "b_field") {
      c.b_field_tesla = parse_vec3(key, value);
    } else if (key == "direction") {
      c.direction = parse_vec3(key, value);
    } else if (key == "length") {
      c.length_m = parse_double(key, value);
    } else if (key == "frequency") {
      c.frequency_hz = parse_double(key, value);
    } else if (key == "polarization") {
      c.polarization = parse_choice(key, value, {std::pair{"plus", Polarization::plus},
                                                 std::pair{"cross", Polarization::cross}});
    } else if (key == "r") {
      c.squeeze.r = parse_double(key, value);
    } else if (key == "squeeze_db") {
      c.squeeze_db = parse_double(key, value);
      c.squeeze.r = squeeze_db_to_r(*c.squeeze_db);
    } else if (key == "squeeze_phase") {
      c.squeeze.phi = parse_double(key, value);
    } else if (key == "beta_abs") {
      c.coherent.beta = std::polar(parse_double(key, value), std::arg(c.coherent.beta));
    } else if (key == "beta_phase") {
      c.coherent.beta = std::polar(std::abs(c.coherent.beta), parse_double(key, value));
    } else if (key == "graviton_z") {
      c.graviton_source = GravitonSource::explicit_z;
      c.graviton_z = parse_double(key, value);
    } else if (key == "cutoff_frequency") {
      c.graviton_source = GravitonSource::primordial;
      c.cutoff_hz = parse_double(key, value);
    } else if (key == "graviton_chi") {
      c.graviton_chi = parse_double(key, value);
    } else if (key == "lambda_t") {
      c.lambda_t = parse_double(key, value);
    } else if (key == "n_max") {
      c.n_max = parse_int(key, value);
      c.n_max_set = true;
    } else if (key == "oracle") {
      c.oracle = parse_bool(key, value);
    } else if (key == "counter_rotating") {
      c.counter_rotating = parse_bool(key, value);
    } else if (key == "scenario") {
      c.scenario = parse_choice(key, value, {std::pair{"swap", EntangleScenario::swap},
                                             std::pair{"generate", EntangleScenario::generate}});
    } else if (key == "strength") {
      c.strength = parse_double(key, value);
    } else if (key == "map") {
      c.map = parse_choice(key, value, {std::pair{"exchange", ConversionMap::exchange},
                                        std::pair{"conditional", ConversionMap::conditional},
                                        std::pair{"beam_splitter", ConversionMap::beam_splitter}});
    } else if (key == "scan_axis") {
      axis.parameter = value;
      has_scan = true;
    } else if (key == "scan_min") {
      axis.min = parse_double(key, value);
      has_scan = true;
    } else if (key == "scan_max") {
      axis.max = parse_double(key, value);
      has_scan = true;
    } else if (key == "scan_steps") {
      axis.steps = parse_int(key, value);
      has_scan = true;
    } else if (key == "scan_scale") {
      axis.scale = parse_choice(key, value, {std::pair{"linear", ScanScale::linear},
                                             std::pair{"log", ScanScale::log}});
      has_scan = true;
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  // beta_abs and beta_phase may come in either order; the map iterates
  // alphabetically so beta_abs is read first and beta_phase keeps it.
  if (has_scan) c.scan = axis;
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

// --------------------------------------------------------------- validation

void validate(const ScenarioConfig& c) {
  auto finite = [](double v, const char* what) {
    if (!std::isfinite(v)) throw ConfigError(std::string(what) + " must be finite");
  };
  if (!c.b_field_tesla.allFinite()) throw ConfigError("b_field must be finite");
  if (!c.direction.allFinite() || c.direction.norm() == 0.0) {
    throw ConfigError("direction must be a finite nonzero vector");
  }
  finite(c.length_m, "length");
  if (c.length_m < 0.0) throw ConfigError("length must be >= 0");
  finite(c.frequency_hz, "frequency");
  if (c.frequency_hz <= 0.0) throw ConfigError("frequency must be > 0");
  finite(c.squeeze.r, "r");
  if (c.squeeze.r < 0.0) throw ConfigError("photon squeezing must be >= 0 (r or squeeze_db)");
  finite(c.squeeze.phi, "squeeze_phase");
  finite(c.coherent.beta.real(), "beta");
  finite(c.coherent.beta.imag(), "beta");
  finite(c.graviton_z, "graviton_z");
  if (c.graviton_z < 0.0) throw ConfigError("graviton_z must be >= 0");
  finite(c.graviton_chi, "graviton_chi");
  if (c.lambda_t) {
    finite(*c.lambda_t, "lambda_t");
    if (*c.lambda_t < 0.0) throw ConfigError("lambda_t must be >= 0");
    if (c.length_m == 0.0) throw ConfigError("lambda_t override needs a nonzero length");
  }
  if (c.n_max < 1) throw ConfigError("n_max must be >= 1");
  finite(c.strength, "strength");
  if (c.strength < 0.0) throw ConfigError("strength must be >= 0");
  if (c.graviton_source == GravitonSource::primordial) {
    squeeze_amplitude({c.cutoff_hz}, c.frequency_hz);  // RangeError if f > f_c
  }
  if (c.oracle) {
    const FockSpace probe({photon_mode()}, c.n_max);
    check_guard(probe, c.squeeze);
    check_guard(probe, c.coherent);
    if (c.graviton_source != GravitonSource::vacuum) check_guard(probe, graviton_params(c));
  }
}

CouplingConfig coupling_from(const ScenarioConfig& c) {
  const double k_ev = units::hertz_to_ev(c.frequency_hz);
  const Vec3<double> k = c.direction.normalized() * k_ev;
  CouplingConfig coupling;
  coupling.lambda = coupling_lambda<double>(c.b_field_tesla, k);
  coupling.t = units::meter_to_inv_ev(c.length_m);
  coupling.k = k_ev;
  if (c.lambda_t) coupling.lambda = *c.lambda_t / coupling.t;
  return coupling;
}

TwoModeSqueezeParams graviton_params(const ScenarioConfig& c) {
  switch (c.graviton_source) {
    case GravitonSource::vacuum:
      return {0.0, c.graviton_chi};
    case GravitonSource::explicit_z:
      return {c.graviton_z, c.graviton_chi};
    case GravitonSource::primordial:
      return squeeze_amplitude({c.cutoff_hz}, c.frequency_hz, c.graviton_chi);
  }
  return {};
}

// ------------------------------------------------------------------- oracle

OracleResult conversion_oracle(const ScenarioConfig& c, int n_max, std::size_t budget,
                               bool with_full) {
  const CouplingConfig coupling = coupling_from(c);
  const TwoModeSqueezeParams g = graviton_params(c);
  const Polarization p = c.polarization;
  const bool graviton_pair = g.z > 0.0;
  const ModeId gk = graviton_mode(Momentum::plus, p);
  const ModeId gm = graviton_mode(Momentum::minus, p);
  const ModeId yk = photon_mode(Momentum::plus, p);
  const ModeId ym = photon_mode(Momentum::minus, p);

  std::vector<ModeId> modes{gk};
  if (graviton_pair) modes.push_back(gm);
  modes.push_back(yk);
  if (c.counter_rotating) modes.push_back(ym);
  const FockSpace space(modes, n_max, budget);

  std::vector<StateVector> factors;
  factors.push_back(squeezed_coherent_state(FockSpace({yk}, n_max), yk, c.squeeze, c.coherent));
  if (graviton_pair) factors.push_back(two_mode_squeezed_vacuum(FockSpace({gk, gm}, n_max), gk, gm, g));
  const StateVector background = product_state(space, factors);

  const StateVector initial = normalize(apply(LadderPolynomial{{1.0, {raise(yk)}}}, background));
  const StateVector final_state = normalize(apply(LadderPolynomial{{1.0, {raise(gk)}}}, background));

  const SectorSpec sector{p, c.counter_rotating};
  const LadderPolynomial q = q_generator(coupling, sector);
  OracleResult result;
  result.first_order = std::norm(first_order_amplitude(q, initial, final_state));
  if (!with_full) return result;
  const StateVector evolved = exp_apply(Complex{0.0, -1.0} * q, initial);
  result.full = std::norm(inner(final_state, evolved));
  return result;
}

// ----------------------------------------------------------------- commands

ResultRecord cmd_convert(const ScenarioConfig& c, bool check_convergence) {
  validate(c);
  const CouplingConfig coupling = coupling_from(c);
  const TwoModeSqueezeParams g = graviton_params(c);

  ResultRecord rec;
  const Vec3<double> khat = c.direction.normalized();
  rec.b_perp_tesla = decompose_field<double>(c.b_field_tesla, khat).perp.norm();
  rec.length_m = c.length_m;
  rec.frequency_hz = c.frequency_hz;
  rec.r = c.squeeze.r;
  rec.squeeze_phase = c.squeeze.phi;
  rec.beta_abs = std::abs(c.coherent.beta);
  rec.beta_phase = std::arg(c.coherent.beta);
  rec.z = g.z;
  if (c.graviton_source == GravitonSource::primordial) rec.cutoff_hz = c.cutoff_hz;
  rec.lambda_ev = coupling.lambda;
  rec.lambda_t = coupling.strength();
  rec.photon_factor = photon_enhancement(c.squeeze, c.coherent);
  rec.graviton_factor = graviton_enhancement(g);

  const auto leading = prob_primordial(coupling, c.squeeze, c.coherent, g);
  rec.prob_leading = leading.value;
  rec.within_guard = leading.within_guard;

  if (c.oracle) {
    const OracleResult o = conversion_oracle(c, c.n_max);
    rec.prob_oracle = o.first_order;
    rec.prob_full = o.full;
    rec.rel_deviation =
        rec.prob_leading > 0.0 ? std::abs(o.first_order - rec.prob_leading) / rec.prob_leading
                               : std::abs(o.first_order);
    if (check_convergence) {
      const OracleResult twice = conversion_oracle(c, 2 * c.n_max);
      rec.oracle_convergence = twice.first_order > 0.0
                                   ? std::abs(twice.first_order - o.first_order) / twice.first_order
                                   : std::abs(o.first_order);
    }
  }
  return rec;
}

std::vector<double> axis_values(const ScanAxis& axis) {
  if (axis.steps < 1) throw ConfigError("scan needs at least one step");
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
    throw ConfigError("scan bounds must be finite");
  }
  if (axis.scale == ScanScale::log && (axis.min <= 0.0 || axis.max <= 0.0)) {
    throw ConfigError("log scan needs positive bounds");
  }
  std::vector<double> values(static_cast<std::size_t>(axis.steps));
  for (int i = 0; i < axis.steps; ++i) {
    const double frac = axis.steps == 1 ? 0.0 : static_cast<double>(i) / (axis.steps - 1);
    values[i] = axis.scale == ScanScale::linear
                    ? axis.min + frac * (axis.max - axis.min)
                    : std::exp(std::log(axis.min) + frac * (std::log(axis.max) - std::log(axis.min)));
  }
  values.back() = axis.steps == 1 ? axis.min : axis.max;
  return values;
}

ScenarioConfig with_parameter(ScenarioConfig c, const std::string& parameter, double value) {
  if (parameter == "B") {
    const double norm = c.b_field_tesla.norm();
    if (norm == 0.0) throw ConfigError("cannot scan B with a zero b_field direction");
    c.b_field_tesla *= value / norm;
  } else if (parameter == "L") {
    c.length_m = value;
  } else if (parameter == "f") {
    c.frequency_hz = value;
  } else if (parameter == "r_dB") {
    c.squeeze_db = value;
    c.squeeze.r = squeeze_db_to_r(value);
  } else if (parameter == "beta_abs" || parameter == "|beta|" || parameter == "|β|") {
    c.coherent.beta = std::polar(value, std::arg(c.coherent.beta));
  } else if (parameter == "phase") {
    c.squeeze.phi = value;
  } else if (parameter == "z") {
    c.graviton_source = GravitonSource::explicit_z;
    c.graviton_z = value;
  } else if (parameter == "f_c") {
    c.graviton_source = GravitonSource::primordial;
    c.cutoff_hz = value;
  } else {
    throw ConfigError("unknown scan axis '" + parameter +
                      "' (expected B, L, f, r_dB, beta_abs, phase, z, f_c)");
  }
  return c;
}

std::vector<ResultRecord> cmd_scan(const ScenarioConfig& c, const ScanAxis& axis) {
  with_parameter(c, axis.parameter, axis.min);  // rejects unknown axes before any work
  const std::vector<double> values = axis_values(axis);
  std::vector<ResultRecord> rows;
  rows.reserve(values.size());
  for (double v : values) rows.push_back(cmd_convert(with_parameter(c, axis.parameter, v)));
  return rows;
}

EntangleRecord cmd_entangle(const ScenarioConfig& c) {
  if (!std::isfinite(c.strength) || c.strength < 0.0) {
    throw ConfigError("strength must be finite and >= 0");
  }
  const FockSpace space = scenario_space(c.n_max_set ? c.n_max : 2);
  const bool swap = c.scenario == EntangleScenario::swap;
  const ConversionMap map =
      c.map.value_or(swap ? ConversionMap::exchange : ConversionMap::conditional);
  const ModeId photon = scenario_photon_k1();
  const ModeId graviton = scenario_graviton_k1();
  OperatorMatrix u = identity(space);
  switch (map) {
    case ConversionMap::exchange:
      u = exchange_unitary(space, photon, graviton, c.strength);
      break;
    case ConversionMap::conditional:
      u = conditional_exchange_unitary(space, photon, graviton, scenario_photon_k2(), c.strength);
      break;
    case ConversionMap::beam_splitter:
      u = beam_splitter_unitary(space, photon, graviton, c.strength);
      break;
  }
  const ScenarioReport report = swap ? run_swap_scenario(u) : run_generation_scenario(u);
  return {c.scenario,
          map,
          c.strength,
          report.entropy_before,
          report.entropy_after,
          report.negativity_after,
          report.fidelity_to_target,
          report.entropy_photon_k1_after};
}

// ---------------------------------------------------------------------- CSV

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // no negative zero in output
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_value(*v) : std::string(); }

const char* map_name(ConversionMap map) {
  switch (map) {
    case ConversionMap::exchange:
      return "exchange";
    case ConversionMap::conditional:
      return "conditional";
    case ConversionMap::beam_splitter:
      return "beam_splitter";
  }
  return "";
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRecord>& rows) {
  out << "b_perp_T,length_m,frequency_Hz,r,squeeze_phase_rad,beta_abs,beta_phase_rad,z,"
         "cutoff_Hz,lambda_eV,lambda_t,photon_factor,graviton_factor,prob_leading,"
         "within_guard,prob_oracle,rel_deviation,prob_full,oracle_convergence\n";
  for (const auto& r : rows) {
    out << format_value(r.b_perp_tesla) << ',' << format_value(r.length_m) << ','
        << format_value(r.frequency_hz) << ',' << format_value(r.r) << ','
        << format_value(r.squeeze_phase) << ',' << format_value(r.beta_abs) << ','
        << format_value(r.beta_phase) << ',' << format_value(r.z) << ',' << opt(r.cutoff_hz)
        << ',' << format_value(r.lambda_ev) << ',' << format_value(r.lambda_t) << ','
        << format_value(r.photon_factor) << ',' << format_value(r.graviton_factor) << ','
        << format_value(r.prob_leading) << ',' << (r.within_guard ? "true" : "false") << ','
        << opt(r.prob_oracle) << ',' << opt(r.rel_deviation) << ',' << opt(r.prob_full) << ','
        << opt(r.oracle_convergence) << '\n';
  }
}

void write_csv(std::ostream& out, const EntangleRecord& r) {
  out << "scenario,map,strength,entropy_before_nats,entropy_after_nats,entropy_after_bits,"
         "negativity_after,fidelity_to_target,entropy_photon_k1_after_nats\n";
  out << (r.scenario == EntangleScenario::swap ? "swap" : "generate") << ','
      << map_name(r.map) << ','
      << format_value(r.strength) << ',' << format_value(r.entropy_before) << ','
      << format_value(r.entropy_after) << ',' << format_value(r.entropy_after / std::numbers::ln2)
      << ',' << format_value(r.negativity_after) << ',' << format_value(r.fidelity_to_target)
      << ',' << format_value(r.entropy_photon_k1_after) << '\n';
}

}  // namespace gpc
