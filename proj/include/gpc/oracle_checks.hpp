#pragma once

// Self-checks behind `gpconv oracle-check`. Each suite compares library
// outputs against independent constructions (commutation relations,
// Bogoliubov relations, numeric norms, brute-force Fock oracles, geometric
// identities) and reports one line per check.

#include <iosfwd>
#include <string>
#include <vector>

namespace gpc {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// commutators, bogoliubov, norms, probabilities, identities.
const std::vector<std::string>& oracle_suites();

/// Runs one suite, or every suite for "all". ConfigError for unknown names.
std::vector<CheckResult> run_oracle_suite(const std::string& suite);

/// One line per check plus a summary line; returns true when all passed.
bool write_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace gpc
