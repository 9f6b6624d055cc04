#include "rpade/rpade.h"

#include <deque>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "rpade/errors.hpp"
#include "rpade/hankel.hpp"
#include "rpade/oracle.hpp"
#include "rpade/run.hpp"
#include "rpade/series.hpp"
#include "rpade/tracker.hpp"

using namespace rpade;

struct rpade_model {
  PotentialModel model;
  std::string text;
  std::string describe;
};

struct rpade_sequence {
  RootSequence seq;
  std::vector<Real> shown;  // roots in the units handed to callers
  std::string root_text;
  std::string residual_text;
  std::optional<std::string> failure;
};

struct rpade_spectrum {
  OracleSpectrum spectrum;
  std::string text;
};

struct rpade_config {
  RunConfig config;
};

struct rpade_report {
  RunReport report;
  std::deque<rpade_sequence> sequences;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

template <class F>
rpade_status guard(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const RefinementFailure& e) {
    g_last_error = e.what();
    return RPADE_REFINEMENT_FAILURE;
  } catch (const InvalidConfig& e) {
    g_last_error = e.what();
    return RPADE_INVALID_CONFIG;
  } catch (const SeriesLengthError& e) {
    g_last_error = e.what();
    return RPADE_SERIES_LENGTH;
  } catch (const UnsupportedMode& e) {
    g_last_error = e.what();
    return RPADE_UNSUPPORTED_MODE;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return RPADE_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return RPADE_OUT_OF_RANGE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RPADE_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RPADE_INTERNAL;
  }
}

rpade_status fail(rpade_status status, const char* message) {
  g_last_error = message;
  return status;
}

Scalar parse_scalar(const char* text) {
  if (text == nullptr) throw InvalidArgument("missing number");
  try {
    return Scalar(parse_rational(text));
  } catch (const InvalidArgument&) {
    return Scalar(Real(std::string_view(text)));
  }
}

Symmetry to_symmetry(rpade_symmetry symmetry, unsigned l) {
  switch (symmetry) {
    case RPADE_EVEN: return Symmetry::even();
    case RPADE_ODD: return Symmetry::odd();
    case RPADE_CENTRAL: return Symmetry::angular(l);
  }
  throw InvalidArgument("unknown symmetry");
}

rpade_status make_model(PotentialModel model, rpade_model** out) {
  *out = new rpade_model{std::move(model), {}, {}};
  return RPADE_OK;
}

void fill_shown(rpade_sequence& s, const RunReport* report) {
  s.shown.clear();
  for (const auto& e : s.seq.entries) s.shown.push_back(report ? report->reported(e.root) : e.root);
  s.failure = s.seq.failure;
}

}  // namespace

extern "C" {

const char* rpade_version(void) { return "1.0.0"; }

const char* rpade_status_string(rpade_status status) {
  switch (status) {
    case RPADE_OK: return "ok";
    case RPADE_INVALID_ARGUMENT: return "invalid argument";
    case RPADE_REFINEMENT_FAILURE: return "refinement failure";
    case RPADE_INVALID_CONFIG: return "invalid configuration";
    case RPADE_SERIES_LENGTH: return "series too short";
    case RPADE_UNSUPPORTED_MODE: return "unsupported mode";
    case RPADE_OUT_OF_RANGE: return "index out of range";
    case RPADE_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rpade_last_error(void) { return g_last_error.c_str(); }

rpade_status rpade_model_bounded(const char* a, const char* R, rpade_model** out) {
  if (out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null output pointer");
  return guard([&] { return make_model(PotentialModel::bounded(parse_scalar(a), parse_scalar(R)), out); });
}

rpade_status rpade_model_inverted(const char* a, const char* R, rpade_model** out) {
  if (out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null output pointer");
  return guard([&] { return make_model(PotentialModel::inverted(parse_scalar(a), parse_scalar(R)), out); });
}

rpade_status rpade_model_harmonic(const char* a, rpade_model** out) {
  if (out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null output pointer");
  return guard([&] { return make_model(PotentialModel::harmonic(parse_scalar(a)), out); });
}

void rpade_model_free(rpade_model* model) { delete model; }

rpade_status rpade_model_coeff(rpade_model* model, unsigned j, const char** out) {
  if (model == nullptr || out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    model->text = model->model.coeff(j).str();
    *out = model->text.c_str();
    return RPADE_OK;
  });
}

const char* rpade_model_describe(rpade_model* model) {
  if (model == nullptr) return "";
  model->describe = model->model.describe();
  return model->describe.c_str();
}

rpade_status rpade_hankel_value(rpade_model* model, unsigned s, unsigned D, unsigned d, const char* E,
                                long precision_bits, unsigned digits, const char** value, const char** derivative) {
  if (model == nullptr || E == nullptr || value == nullptr || derivative == nullptr) {
    return fail(RPADE_INVALID_ARGUMENT, "null argument");
  }
  return guard([&] {
    if (precision_bits < 64) throw InvalidArgument("precision_bits must be at least 64");
    PrecisionScope scope(precision_bits);
    const RiccatiSeries series =
        compute_series(model->model, s, Real(std::string_view(E)), series_order_for(D, d), precision_bits);
    const HankelFrame frame = hankel_value(series, D, d);
    const int n = static_cast<int>(digits == 0 ? 20 : digits);
    model->text = frame.value.to_scientific(n);
    model->describe = frame.derivative.to_scientific(n);
    *value = model->text.c_str();
    *derivative = model->describe.c_str();
    return RPADE_OK;
  });
}

rpade_status rpade_hankel_poly(rpade_model* model, unsigned s, unsigned D, unsigned d, const char** out) {
  if (model == nullptr || out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const ExactSeries series = compute_series_exact(model->model, s, series_order_for(D, d));
    model->text = hankel_poly(series, D, d).str("E");
    *out = model->text.c_str();
    return RPADE_OK;
  });
}

rpade_track_options rpade_track_options_default(void) {
  const TrackOptions o;
  return rpade_track_options{o.target_digits,       o.initial_precision_bits, o.max_precision_bits,
                             o.stop_when_stable ? 1 : 0, o.scan_negative ? 1 : 0,  o.exact_assist ? 1 : 0};
}

rpade_status rpade_track(rpade_model* model, rpade_symmetry symmetry, unsigned l, unsigned state, unsigned d,
                         unsigned D_min, unsigned D_max, const char* seed, const rpade_track_options* options,
                         rpade_sequence** out) {
  if (model == nullptr || seed == nullptr || out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    const rpade_track_options opt = options ? *options : rpade_track_options_default();
    TrackOptions o;
    o.target_digits = opt.target_digits;
    o.initial_precision_bits = opt.initial_precision_bits;
    o.max_precision_bits = opt.max_precision_bits;
    o.stop_when_stable = opt.stop_when_stable != 0;
    o.scan_negative = opt.scan_negative != 0;
    o.exact_assist = opt.exact_assist != 0;
    PrecisionScope scope(std::max(o.initial_precision_bits, 64L));
    const StateLabel label{to_symmetry(symmetry, l), state};
    auto handle = std::make_unique<rpade_sequence>();
    handle->seq = track_sequence(model->model, label, d, D_min, D_max, Real(std::string_view(seed)), o);
    fill_shown(*handle, nullptr);
    const rpade_status status = handle->seq.failure ? RPADE_REFINEMENT_FAILURE : RPADE_OK;
    if (handle->seq.failure) g_last_error = *handle->seq.failure;
    *out = handle.release();
    return status;
  });
}

void rpade_sequence_free(rpade_sequence* seq) { delete seq; }

size_t rpade_sequence_size(const rpade_sequence* seq) { return seq ? seq->seq.entries.size() : 0; }

rpade_status rpade_sequence_entry(rpade_sequence* seq, size_t index, unsigned* D, const char** root,
                                  const char** residual) {
  if (seq == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null sequence");
  if (index >= seq->seq.entries.size()) return fail(RPADE_OUT_OF_RANGE, "entry index out of range");
  const auto& e = seq->seq.entries[index];
  const int digits = static_cast<int>(seq->seq.target_digits);
  if (D) *D = e.D;
  seq->root_text = seq->shown[index].to_fixed(digits);
  seq->residual_text = e.residual.to_scientific(digits);
  if (root) *root = seq->root_text.c_str();
  if (residual) *residual = seq->residual_text.c_str();
  return RPADE_OK;
}

unsigned rpade_sequence_stable_digits(const rpade_sequence* seq) { return seq ? seq->seq.stable_digits : 0; }

unsigned rpade_sequence_stable_from(const rpade_sequence* seq) {
  if (seq == nullptr) return 0;
  return first_stable_dimension(seq->seq, seq->seq.target_digits).value_or(0);
}

rpade_monotone rpade_sequence_monotone(const rpade_sequence* seq) {
  if (seq == nullptr) return RPADE_NOT_MONOTONE;
  switch (seq->seq.monotone) {
    case Monotone::increasing: return RPADE_INCREASING;
    case Monotone::decreasing: return RPADE_DECREASING;
    case Monotone::none: return RPADE_NOT_MONOTONE;
  }
  return RPADE_NOT_MONOTONE;
}

rpade_bound rpade_sequence_bound(const rpade_sequence* seq) {
  if (seq == nullptr) return RPADE_NO_BOUND;
  switch (seq->seq.bound_kind) {
    case BoundKind::lower: return RPADE_LOWER_BOUND;
    case BoundKind::upper: return RPADE_UPPER_BOUND;
    case BoundKind::none: return RPADE_NO_BOUND;
  }
  return RPADE_NO_BOUND;
}

rpade_classification rpade_sequence_classification(const rpade_sequence* seq) {
  if (seq == nullptr) return RPADE_UNKNOWN;
  switch (seq->seq.classification) {
    case Classification::physical: return RPADE_PHYSICAL;
    case Classification::spurious: return RPADE_SPURIOUS;
    case Classification::unknown: return RPADE_UNKNOWN;
  }
  return RPADE_UNKNOWN;
}

const char* rpade_sequence_failure(const rpade_sequence* seq) {
  return seq && seq->failure ? seq->failure->c_str() : nullptr;
}

size_t rpade_sequence_missing_count(const rpade_sequence* seq) { return seq ? seq->seq.missing.size() : 0; }

unsigned rpade_sequence_missing(const rpade_sequence* seq, size_t index) {
  if (seq == nullptr || index >= seq->seq.missing.size()) return 0;
  return seq->seq.missing[index];
}

rpade_status rpade_oracle(rpade_model* model, rpade_symmetry symmetry, unsigned l, unsigned basis_size,
                          unsigned quadrature_order, long precision_bits, const char* basis, rpade_spectrum** out) {
  if (model == nullptr || out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    const std::string name = basis ? basis : "weighted";
    OracleBasis kind;
    if (name == "weighted") {
      kind = OracleBasis::wall_weighted;
    } else if (name == "sine") {
      kind = OracleBasis::sine;
    } else {
      throw InvalidArgument("unknown oracle basis '" + name + "'");
    }
    *out = new rpade_spectrum{box_basis_spectrum(model->model, to_symmetry(symmetry, l), basis_size,
                                                 quadrature_order, precision_bits, kind),
                              {}};
    return RPADE_OK;
  });
}

void rpade_spectrum_free(rpade_spectrum* spectrum) { delete spectrum; }

size_t rpade_spectrum_size(const rpade_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.eigenvalues.size() : 0;
}

rpade_status rpade_spectrum_eigenvalue(rpade_spectrum* spectrum, size_t index, unsigned digits, const char** out) {
  if (spectrum == nullptr || out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  if (index >= spectrum->spectrum.eigenvalues.size()) return fail(RPADE_OUT_OF_RANGE, "eigenvalue index out of range");
  spectrum->text = spectrum->spectrum.eigenvalues[index].to_fixed(static_cast<int>(digits == 0 ? 20 : digits));
  *out = spectrum->text.c_str();
  return RPADE_OK;
}

const char* rpade_spectrum_warning(const rpade_spectrum* spectrum) {
  return spectrum && spectrum->spectrum.warning ? spectrum->spectrum.warning->c_str() : nullptr;
}

rpade_status rpade_classify(const rpade_spectrum* spectrum, const char* value, const char* tol_rel,
                            rpade_classification* out) {
  if (spectrum == nullptr || value == nullptr || tol_rel == nullptr || out == nullptr) {
    return fail(RPADE_INVALID_ARGUMENT, "null argument");
  }
  return guard([&] {
    PrecisionScope scope(spectrum->spectrum.precision_bits);
    switch (classify_root(Real(std::string_view(value)), spectrum->spectrum, Real(std::string_view(tol_rel)))) {
      case Classification::physical: *out = RPADE_PHYSICAL; break;
      case Classification::spurious: *out = RPADE_SPURIOUS; break;
      case Classification::unknown: *out = RPADE_UNKNOWN; break;
    }
    return RPADE_OK;
  });
}

rpade_config* rpade_config_new(void) { return new (std::nothrow) rpade_config{}; }

void rpade_config_free(rpade_config* config) { delete config; }

rpade_status rpade_config_set(rpade_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    set_option(config->config, key, value);
    return RPADE_OK;
  });
}

rpade_status rpade_config_validate(const rpade_config* config) {
  if (config == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null config");
  return guard([&] {
    validate(config->config);
    return RPADE_OK;
  });
}

rpade_format rpade_config_format(const rpade_config* config) {
  if (config == nullptr) return RPADE_FORMAT_TABLE;
  switch (config->config.format) {
    case OutputFormat::table: return RPADE_FORMAT_TABLE;
    case OutputFormat::csv: return RPADE_FORMAT_CSV;
    case OutputFormat::json: return RPADE_FORMAT_JSON;
  }
  return RPADE_FORMAT_TABLE;
}

rpade_status rpade_run(const rpade_config* config, rpade_report** out) {
  if (config == nullptr || out == nullptr) return fail(RPADE_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    auto handle = std::make_unique<rpade_report>();
    handle->report = run(config->config);
    for (const auto& seq : handle->report.sequences) {
      rpade_sequence& view = handle->sequences.emplace_back();
      view.seq = seq;
      fill_shown(view, &handle->report);
    }
    const rpade_status status = handle->report.exit_code == 0 ? RPADE_OK : RPADE_REFINEMENT_FAILURE;
    if (status != RPADE_OK) {
      for (const auto& seq : handle->report.sequences) {
        if (seq.failure) {
          g_last_error = "d=" + std::to_string(seq.d) + ": " + *seq.failure;
          break;
        }
      }
    }
    *out = handle.release();
    return status;
  });
}

void rpade_report_free(rpade_report* report) { delete report; }

int rpade_report_exit_code(const rpade_report* report) { return report ? report->report.exit_code : 3; }

const char* rpade_report_emit(rpade_report* report, rpade_format format) {
  if (report == nullptr) return "";
  OutputFormat f = OutputFormat::table;
  if (format == RPADE_FORMAT_CSV) f = OutputFormat::csv;
  if (format == RPADE_FORMAT_JSON) f = OutputFormat::json;
  report->text = emit(report->report, f);
  return report->text.c_str();
}

size_t rpade_report_sequence_count(const rpade_report* report) { return report ? report->sequences.size() : 0; }

rpade_sequence* rpade_report_sequence(rpade_report* report, size_t index) {
  if (report == nullptr || index >= report->sequences.size()) return nullptr;
  return &report->sequences[index];
}

}  // extern "C"
