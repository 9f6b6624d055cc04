#pragma once

// End-to-end runs: a configuration names a model, a state and a grid of
// (d, D); run() tracks one sequence per d, checks the final roots against the
// oracle and formats the result.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpade/model.hpp"
#include "rpade/oracle.hpp"
#include "rpade/tracker.hpp"

namespace rpade {

enum class OutputFormat { table, csv, json };

const char* to_string(OutputFormat f);

struct RunConfig {
  PotentialKind potential = PotentialKind::bounded_oscillator;
  std::string a = "1";
  std::string R = "1";
  bool central = false;
  unsigned parity = 0;  // 0 even, 1 odd
  unsigned l = 0;
  unsigned state = 0;
  std::vector<unsigned> d_values{0};
  unsigned D_min = 2;
  unsigned D_max = 10;
  unsigned target_digits = 20;
  long precision_bits = 256;
  bool exact = false;
  bool scan_negative = false;
  bool stop_when_stable = false;
  std::optional<std::string> seed;  // energy units of the requested (a, R)
  OracleBasis oracle_basis = OracleBasis::wall_weighted;
  unsigned oracle_size = 24;
  bool oracle = true;
  OutputFormat format = OutputFormat::table;
  bool report_r2e = false;

  Symmetry symmetry() const { return central ? Symmetry::angular(l) : Symmetry{false, parity}; }
};

/// Sets one option by name, e.g. ("R", "0.1"), ("d", "0,1"), ("parity", "odd").
/// Throws InvalidConfig for unknown keys or malformed values.
void set_option(RunConfig& config, std::string_view key, std::string_view value);

/// Names accepted by set_option.
const std::vector<std::string>& option_names();

/// Throws InvalidConfig when the configuration cannot be run.
void validate(const RunConfig& config);

struct RunReport {
  RunConfig config;
  std::string model_description;
  Real energy_factor;  // reported value = energy_factor * canonical root
  std::vector<RootSequence> sequences;  // canonical units, one per d in config order
  std::optional<OracleSpectrum> oracle;  // canonical units
  std::optional<unsigned> oracle_index;
  int exit_code = 0;

  /// Root in reported units (E, or R^2 E when report_r2e is set).
  Real reported(const Real& canonical_root) const;
};

/// Runs the configuration. Refinement failures are recorded in the report
/// (exit_code 2); invalid configurations throw InvalidConfig.
RunReport run(const RunConfig& config);

/// Deterministic text in the configured format.
std::string emit(const RunReport& report, OutputFormat format);
std::string emit_table(const RunReport& report);
std::string emit_csv(const RunReport& report);
std::string emit_json(const RunReport& report);

}  // namespace rpade
