#include "rpade/run.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rpade/errors.hpp"

namespace rpade {

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "table";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n\"'");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n\"'");
  return std::string(s.substr(b, e - b + 1));
}

unsigned parse_unsigned(std::string_view key, std::string_view text) {
  const std::string s = strip(text);
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidConfig(std::string(key) + ": expected a nonnegative integer, got '" + s + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string s = lower(strip(text));
  if (s.empty() || s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw InvalidConfig(std::string(key) + ": expected a boolean, got '" + s + "'");
}

std::vector<unsigned> parse_list(std::string_view key, std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(s);
  std::vector<unsigned> out;
  for (std::string item; in >> item;) out.push_back(parse_unsigned(key, item));
  if (out.empty()) throw InvalidConfig(std::string(key) + ": empty list");
  return out;
}

Rational parse_positive(std::string_view key, const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const Error&) {
    throw InvalidConfig(std::string(key) + ": expected a decimal or p/q, got '" + text + "'");
  }
  if (sgn(q) <= 0) throw InvalidConfig(std::string(key) + " must be positive");
  return q;
}

Real parse_seed(const std::string& text) {
  try {
    return Real(text);
  } catch (const Error&) {
    throw InvalidConfig("seed: malformed number '" + text + "'");
  }
}

using Setter = void (*)(RunConfig&, std::string_view, std::string_view);

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"model",
       [](RunConfig& c, std::string_view k, std::string_view v) {
         const std::string s = lower(strip(v));
         if (s == "bounded") {
           c.potential = PotentialKind::bounded_oscillator;
         } else if (s == "inverted") {
           c.potential = PotentialKind::inverted_oscillator;
         } else if (s == "harmonic") {
           c.potential = PotentialKind::harmonic;
         } else {
           throw InvalidConfig(std::string(k) + ": expected bounded, inverted or harmonic");
         }
       }},
      {"a", [](RunConfig& c, std::string_view, std::string_view v) { c.a = strip(v); }},
      {"R", [](RunConfig& c, std::string_view, std::string_view v) { c.R = strip(v); }},
      {"parity",
       [](RunConfig& c, std::string_view k, std::string_view v) {
         const std::string s = lower(strip(v));
         if (s != "even" && s != "odd") throw InvalidConfig(std::string(k) + ": expected even or odd");
         c.central = false;
         c.parity = s == "odd" ? 1 : 0;
       }},
      {"l",
       [](RunConfig& c, std::string_view k, std::string_view v) {
         c.central = true;
         c.l = parse_unsigned(k, v);
       }},
      {"state", [](RunConfig& c, std::string_view k, std::string_view v) { c.state = parse_unsigned(k, v); }},
      {"d", [](RunConfig& c, std::string_view k, std::string_view v) { c.d_values = parse_list(k, v); }},
      {"Dmin", [](RunConfig& c, std::string_view k, std::string_view v) { c.D_min = parse_unsigned(k, v); }},
      {"Dmax", [](RunConfig& c, std::string_view k, std::string_view v) { c.D_max = parse_unsigned(k, v); }},
      {"digits",
       [](RunConfig& c, std::string_view k, std::string_view v) { c.target_digits = parse_unsigned(k, v); }},
      {"precision-bits",
       [](RunConfig& c, std::string_view k, std::string_view v) { c.precision_bits = parse_unsigned(k, v); }},
      {"exact", [](RunConfig& c, std::string_view k, std::string_view v) { c.exact = parse_bool(k, v); }},
      {"scan-negative",
       [](RunConfig& c, std::string_view k, std::string_view v) { c.scan_negative = parse_bool(k, v); }},
      {"stop-when-stable",
       [](RunConfig& c, std::string_view k, std::string_view v) { c.stop_when_stable = parse_bool(k, v); }},
      {"seed",
       [](RunConfig& c, std::string_view, std::string_view v) {
         const std::string s = strip(v);
         if (s.empty()) {
           c.seed.reset();
         } else {
           c.seed = s;
         }
       }},
      {"oracle-basis",
       [](RunConfig& c, std::string_view k, std::string_view v) {
         const std::string s = lower(strip(v));
         c.oracle = s != "none";
         if (s == "weighted") {
           c.oracle_basis = OracleBasis::wall_weighted;
         } else if (s == "sine") {
           c.oracle_basis = OracleBasis::sine;
         } else if (s != "none") {
           throw InvalidConfig(std::string(k) + ": expected weighted, sine or none");
         }
       }},
      {"oracle-size",
       [](RunConfig& c, std::string_view k, std::string_view v) { c.oracle_size = parse_unsigned(k, v); }},
      {"format",
       [](RunConfig& c, std::string_view k, std::string_view v) {
         const std::string s = lower(strip(v));
         if (s == "table") {
           c.format = OutputFormat::table;
         } else if (s == "csv") {
           c.format = OutputFormat::csv;
         } else if (s == "json") {
           c.format = OutputFormat::json;
         } else {
           throw InvalidConfig(std::string(k) + ": expected table, csv or json");
         }
       }},
      {"r2e", [](RunConfig& c, std::string_view k, std::string_view v) { c.report_r2e = parse_bool(k, v); }},
  };
  return table;
}

bool has_walls(PotentialKind k) { return k == PotentialKind::bounded_oscillator; }
bool has_radius(PotentialKind k) { return k != PotentialKind::harmonic; }

// Global one-dimensional index of the state, used for limit seeds.
unsigned global_index(const RunConfig& c) { return c.central ? 2 * c.state + c.l + 1 : c.state; }

}  // namespace

void set_option(RunConfig& config, std::string_view key, std::string_view value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw InvalidConfig("unknown option '" + std::string(key) + "'");
  it->second(config, key, value);
}

const std::vector<std::string>& option_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : setters()) out.push_back(k);
    return out;
  }();
  return names;
}

void validate(const RunConfig& c) {
  parse_positive("a", c.a);
  if (has_radius(c.potential)) parse_positive("R", c.R);
  if (c.D_min < 2) throw InvalidConfig("Dmin must be at least 2");
  if (c.D_max < c.D_min) throw InvalidConfig("Dmax must not be below Dmin");
  if (c.D_max > 200) throw InvalidConfig("Dmax above 200 is not supported");
  if (c.d_values.empty()) throw InvalidConfig("at least one d value is required");
  if (std::set<unsigned>(c.d_values.begin(), c.d_values.end()).size() != c.d_values.size()) {
    throw InvalidConfig("d values must be distinct");
  }
  if (c.target_digits < 1 || c.target_digits > 1000) throw InvalidConfig("digits must be in 1..1000");
  if (c.precision_bits < 64) throw InvalidConfig("precision-bits must be at least 64");
  if (!c.central && c.state % 2 != c.parity) {
    throw InvalidConfig("state " + std::to_string(c.state) + " does not have " + (c.parity ? "odd" : "even") +
                        " parity");
  }
  if (c.oracle && c.oracle_size < 4) throw InvalidConfig("oracle-size must be at least 4");
  if (c.potential == PotentialKind::inverted_oscillator && !c.seed) {
    throw InvalidConfig("the inverted oscillator needs an explicit seed");
  }
  if (c.seed) {
    const Real seed = parse_seed(*c.seed);
    if (has_walls(c.potential) && seed.sign() < 0 && !c.scan_negative) {
      throw InvalidConfig("a negative seed needs scan-negative");
    }
  }
  if (c.exact) {
    const Rational a = parse_positive("a", c.a);
    if (!sqrt(Scalar(a)).is_exact()) throw InvalidConfig("exact mode needs a to be the square of a rational");
  }
}

Real RunReport::reported(const Real& canonical_root) const {
  PrecisionScope scope(canonical_root.precision());
  return energy_factor * canonical_root;
}

RunReport run(const RunConfig& config) {
  validate(config);
  const Rational a = parse_positive("a", config.a);
  const Symmetry symmetry = config.symmetry();

  RunReport report;
  report.config = config;

  // Everything is solved at a = 1 and scaled back.
  std::optional<PotentialModel> model;
  Scalar factor(a);
  if (config.potential == PotentialKind::harmonic) {
    model = PotentialModel::harmonic(Scalar(1L));
  } else {
    const Rational R = parse_positive("R", config.R);
    const ScaleReduction red = scale_reduce(a, R);
    model = config.potential == PotentialKind::bounded_oscillator
                ? PotentialModel::bounded(red.canonical_a, red.canonical_R)
                : PotentialModel::inverted(red.canonical_a, red.canonical_R);
    if (config.report_r2e) factor = factor * Scalar(R * R);
  }
  report.model_description = model->describe();
  {
    PrecisionScope scope(std::max(config.precision_bits, bits_for_digits(config.target_digits) + 64));
    report.energy_factor = factor.to_real();
  }

  const unsigned oracle_bits = std::max(256L, bits_for_digits(2 * config.target_digits) + 32);
  if (model->has_walls() && config.oracle) {
    const unsigned index = config.central ? config.state : config.state / 2;
    const unsigned size = std::max(config.oracle_size, index + 8);
    report.oracle = box_basis_spectrum(*model, symmetry, size, 0, oracle_bits, config.oracle_basis);
    report.oracle_index = index;
  }

  Real seed;
  {
    PrecisionScope scope(std::max<long>(config.precision_bits, oracle_bits));
    if (config.seed) {
      seed = parse_seed(*config.seed) / Real(a);
    } else if (report.oracle) {
      seed = report.oracle->eigenvalues.at(*report.oracle_index);
    } else if (model->has_walls()) {
      seed = seed_estimates(global_index(config), model->R()->to_real()).preferred;
    } else {
      seed = Real(static_cast<long>(2 * global_index(config) + 1));
    }
  }

  TrackOptions options;
  options.target_digits = config.target_digits;
  options.initial_precision_bits = config.precision_bits;
  options.stop_when_stable = config.stop_when_stable;
  options.scan_negative = config.scan_negative;
  options.exact_assist = config.exact;
  const StateLabel label{symmetry, config.state};

  std::vector<std::future<RootSequence>> jobs;
  for (unsigned d : config.d_values) {
    jobs.push_back(std::async(std::launch::async, [&, d] {
      return track_sequence(*model, label, d, config.D_min, config.D_max, seed, options);
    }));
  }
  for (auto& job : jobs) report.sequences.push_back(job.get());

  const Real tol_rel("1e-8");
  for (auto& seq : report.sequences) {
    if (seq.entries.empty()) {
      if (!seq.failure) seq.failure = "no root within the seed window";
    } else if (report.oracle) {
      PrecisionScope scope(seq.last().root.precision());
      seq.classification = classify_root(seq.last().root, *report.oracle, tol_rel);
    }
    if (seq.failure) report.exit_code = 2;
  }
  return report;
}

namespace {

std::string quantity(const RunReport& r) {
  if (r.config.report_r2e && has_radius(r.config.potential)) return "R^2 E";
  return "E";
}

std::string header_line(const RunReport& r) {
  const RunConfig& c = r.config;
  std::ostringstream os;
  os << to_string(c.potential) << " a=" << c.a;
  if (has_radius(c.potential)) os << " R=" << c.R;
  os << ", " << c.symmetry().str() << " n=" << c.state << ", " << quantity(r);
  return os.str();
}

std::vector<unsigned> dimension_grid(const RunReport& r) {
  std::set<unsigned> grid;
  for (const auto& seq : r.sequences) {
    for (const auto& e : seq.entries) grid.insert(e.D);
    for (unsigned D : seq.missing) grid.insert(D);
  }
  return {grid.begin(), grid.end()};
}

std::string root_text(const RunReport& r, const Real& canonical) {
  return r.reported(canonical).to_fixed(static_cast<int>(r.config.target_digits));
}

}  // namespace

std::string emit_table(const RunReport& r) {
  const unsigned digits = r.config.target_digits;
  std::ostringstream os;
  os << header_line(r) << "\n";
  os << "D";
  for (const auto& seq : r.sequences) os << " | d=" << seq.d;
  os << "\n";
  for (unsigned D : dimension_grid(r)) {
    os << D;
    for (const auto& seq : r.sequences) {
      os << " | ";
      if (const SequenceEntry* e = seq.find(D)) os << root_text(r, e->root);
    }
    os << "\n";
  }
  os << "\n";
  for (const auto& seq : r.sequences) {
    os << "d=" << seq.d << ":";
    if (!seq.entries.empty()) {
      os << " final=" << root_text(r, seq.last().root);
      os << " stable_digits=" << seq.stable_digits;
      if (const auto D = first_stable_dimension(seq, digits)) os << " stable_from_D=" << *D;
    }
    os << " monotone=" << to_string(seq.monotone) << " bound=" << to_string(seq.bound_kind)
       << " classification=" << to_string(seq.classification);
    if (seq.failure) os << " FAILED: " << *seq.failure;
    os << "\n";
  }
  if (r.oracle) {
    os << "oracle: " << to_string(r.oracle->basis) << " basis " << r.oracle->basis_size << ", level "
       << root_text(r, r.oracle->eigenvalues.at(*r.oracle_index));
    if (r.oracle->warning) os << " (warning: " << *r.oracle->warning << ")";
    os << "\n";
  }
  return os.str();
}

std::string emit_csv(const RunReport& r) {
  const int digits = static_cast<int>(r.config.target_digits);
  const bool multi = r.sequences.size() > 1;
  std::ostringstream os;
  os << (multi ? "d,D,root,residual,stable_digits" : "D,root,residual,stable_digits") << "\n";
  for (const auto& seq : r.sequences) {
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
      const auto& e = seq.entries[i];
      if (multi) os << seq.d << ",";
      os << e.D << "," << root_text(r, e.root) << "," << e.residual.to_scientific(digits) << ",";
      if (i > 0) os << stable_digits(seq.entries[i - 1].root, e.root, seq.target_digits);
      os << "\n";
    }
  }
  return os.str();
}

std::string emit_json(const RunReport& r) {
  using nlohmann::ordered_json;
  const RunConfig& c = r.config;
  const int digits = static_cast<int>(c.target_digits);
  ordered_json out;
  ordered_json cfg;
  cfg["model"] = to_string(c.potential);
  cfg["a"] = c.a;
  if (has_radius(c.potential)) cfg["R"] = c.R;
  cfg["symmetry"] = c.symmetry().str();
  cfg["state"] = c.state;
  cfg["d"] = c.d_values;
  cfg["Dmin"] = c.D_min;
  cfg["Dmax"] = c.D_max;
  cfg["digits"] = c.target_digits;
  cfg["precision_bits"] = c.precision_bits;
  cfg["exact"] = c.exact;
  cfg["scan_negative"] = c.scan_negative;
  if (c.seed) cfg["seed"] = *c.seed;
  cfg["quantity"] = quantity(r);
  out["config"] = cfg;
  out["canonical_model"] = r.model_description;

  ordered_json seqs = ordered_json::array();
  for (const auto& seq : r.sequences) {
    ordered_json js;
    js["label"] = seq.label.str();
    js["d"] = seq.d;
    js["target_digits"] = seq.target_digits;
    ordered_json entries = ordered_json::array();
    for (const auto& e : seq.entries) {
      ordered_json je;
      je["D"] = e.D;
      je["root"] = root_text(r, e.root);
      je["residual"] = e.residual.to_scientific(digits);
      je["precision_bits"] = e.precision_bits;
      je["iterations"] = e.iterations;
      entries.push_back(je);
    }
    js["entries"] = entries;
    js["missing"] = seq.missing;
    js["stable_digits"] = seq.stable_digits;
    if (const auto D = first_stable_dimension(seq, c.target_digits)) {
      js["stable_from_D"] = *D;
    } else {
      js["stable_from_D"] = nullptr;
    }
    js["monotone"] = to_string(seq.monotone);
    js["bound_kind"] = to_string(seq.bound_kind);
    js["classification"] = to_string(seq.classification);
    if (seq.failure) {
      js["failure"] = *seq.failure;
    } else {
      js["failure"] = nullptr;
    }
    seqs.push_back(js);
  }
  out["sequences"] = seqs;

  if (r.oracle) {
    ordered_json jo;
    jo["basis"] = to_string(r.oracle->basis);
    jo["basis_size"] = r.oracle->basis_size;
    jo["quadrature_points"] = r.oracle->quadrature_points;
    jo["level_index"] = *r.oracle_index;
    ordered_json levels = ordered_json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(r.oracle->eigenvalues.size(), 8); ++i) {
      levels.push_back(root_text(r, r.oracle->eigenvalues[i]));
    }
    jo["eigenvalues"] = levels;
    if (r.oracle->warning) {
      jo["warning"] = *r.oracle->warning;
    } else {
      jo["warning"] = nullptr;
    }
    out["oracle"] = jo;
  }
  out["status"] = r.exit_code == 0 ? "ok" : "refinement_failure";
  out["exit_code"] = r.exit_code;
  return out.dump(2) + "\n";
}

std::string emit(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return emit_table(report);
    case OutputFormat::csv: return emit_csv(report);
    case OutputFormat::json: return emit_json(report);
  }
  return emit_table(report);
}

}  // namespace rpade
