#include "rpade/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rpade/hankel.hpp"
#include "rpade/oracle.hpp"
#include "rpade/polynomial.hpp"
#include "rpade/series.hpp"

namespace rpade {

namespace {

struct Probe {
  Real value;
  Real derivative;
};

Probe evaluate(const PotentialModel& model, unsigned s, unsigned D, unsigned d, const Real& E, long bits) {
  const RiccatiSeries series = compute_series(model, s, E, series_order_for(D, d), bits);
  HankelFrame frame = hankel_value(series, D, d);
  return {std::move(frame.value), std::move(frame.derivative)};
}

Real scale_of(const Real& E) { return max(Real(1), abs(E)); }

// Bisection on a bracket with a strict sign change.
RefineResult bisect(const PotentialModel& model, unsigned s, unsigned D, unsigned d, Real lo, Real hi,
                    long bits, const Real& tol) {
  int slo = evaluate(model, s, D, d, lo, bits).value.sign();
  unsigned it = 0;
  while (abs(hi - lo) > tol * scale_of(lo)) {
    Real mid = (lo + hi) / Real(2);
    const int sm = evaluate(model, s, D, d, mid, bits).value.sign();
    ++it;
    if (sm == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    if (sm == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  RefineResult out;
  out.root = (lo + hi) / Real(2);
  out.residual = abs(evaluate(model, s, D, d, out.root, bits).value);
  out.iterations = it;
  out.used_bisection = true;
  return out;
}

}  // namespace

const char* to_string(Monotone m) {
  switch (m) {
    case Monotone::increasing: return "increasing";
    case Monotone::decreasing: return "decreasing";
    case Monotone::none: return "none";
  }
  return "none";
}

const char* to_string(BoundKind b) {
  switch (b) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::none: return "none";
  }
  return "none";
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::physical: return "physical";
    case Classification::spurious: return "spurious";
    case Classification::unknown: return "unknown";
  }
  return "unknown";
}

std::string StateLabel::str() const { return symmetry.str() + " n=" + std::to_string(n); }

const SequenceEntry* RootSequence::find(unsigned D) const {
  for (const auto& e : entries) {
    if (e.D == D) return &e;
  }
  return nullptr;
}

const SequenceEntry& RootSequence::last() const {
  if (entries.empty()) throw InvalidArgument("sequence has no entries");
  return entries.back();
}

Real newton_tolerance(unsigned target_digits) {
  return pow(Real(10), Real(-static_cast<long>(target_digits) - 5));
}

long precision_for_dimension(unsigned D, long floor_bits) {
  return std::max(floor_bits, 64 + 24 * static_cast<long>(D));
}

RefineResult refine_root(const PotentialModel& model, unsigned s, unsigned D, unsigned d, const Real& seed,
                         long precision_bits, const Real& tol, const RefineOptions& options) {
  PrecisionScope scope(precision_bits);
  if (!seed.is_finite()) throw InvalidArgument("refine_root: seed is not finite");

  Real E = seed;
  E.set_precision(precision_bits);
  Probe p = evaluate(model, s, D, d, E, precision_bits);
  Real best = E;
  Real best_abs = abs(p.value);

  for (unsigned it = 0; it < options.max_iterations; ++it) {
    if (p.value.is_zero()) return {E, Real(0), it, false};
    if (p.derivative.is_zero() || !p.derivative.is_finite() || !p.value.is_finite()) break;
    const Real step = p.value / p.derivative;
    Real lambda(1);
    bool accepted = false;
    Real trial;
    Probe tp;
    for (unsigned h = 0; h <= options.max_halvings; ++h) {
      trial = E - lambda * step;
      tp = evaluate(model, s, D, d, trial, precision_bits);
      if (tp.value.is_finite() && abs(tp.value) < abs(p.value)) {
        accepted = true;
        break;
      }
      lambda /= Real(2);
    }
    if (!accepted) {
      // |H| is at its rounding floor: the full step is the remaining error.
      if (abs(step) <= Real(10000) * tol * scale_of(E)) return {E, abs(p.value), it, false};
      break;
    }
    const Real delta = abs(trial - E);
    E = std::move(trial);
    p = std::move(tp);
    if (abs(p.value) < best_abs) {
      best = E;
      best_abs = abs(p.value);
    }
    if (delta < tol * scale_of(E)) return {E, abs(p.value), it + 1, false};
  }

  // Newton stalled: look for a sign change around the seed.
  const Real half_width = Real(options.bracket_fraction) * scale_of(seed);
  const unsigned n = std::max(2u, options.bracket_points);
  std::vector<Real> grid;
  std::vector<int> signs;
  for (unsigned k = 0; k <= n; ++k) {
    Real x = seed - half_width + Real(2) * half_width * Real(static_cast<long>(k)) / Real(static_cast<long>(n));
    signs.push_back(evaluate(model, s, D, d, x, precision_bits).value.sign());
    grid.push_back(std::move(x));
  }
  std::optional<std::size_t> chosen;
  Real chosen_distance;
  for (std::size_t k = 0; k < n; ++k) {
    if (signs[k] * signs[k + 1] > 0) continue;
    const Real distance = abs((grid[k] + grid[k + 1]) / Real(2) - seed);
    if (!chosen || distance < chosen_distance) {
      chosen = k;
      chosen_distance = distance;
    }
  }
  if (!chosen) {
    throw RefinementFailure("no convergence for H_" + std::to_string(D) + "^" + std::to_string(d) +
                                " near " + seed.to_scientific(12),
                            best);
  }
  return bisect(model, s, D, d, grid[*chosen], grid[*chosen + 1], precision_bits, tol);
}

namespace {

class Tracker {
 public:
  Tracker(const PotentialModel& model, const StateLabel& label, unsigned d, const TrackOptions& options)
      : model_(model), s_(label.s()), d_(d), options_(options), tol_(newton_tolerance(options.target_digits)) {}

  // Root of H_D^d closest to `ref`, starting Newton from `start`.
  RefineResult closest_root(unsigned D, const Real& ref, const Real& start, long bits, Monotone trend) const {
    PrecisionScope scope(bits);
    RefineResult best = refine_root(model_, s_, D, d_, start, bits, tol_, options_.refine);
    const Real radius = abs(best.root - ref);
    if (radius <= Real(1000) * tol_ * scale_of(ref)) return best;

    const unsigned n = std::max(4u, options_.closest_scan_points);
    std::vector<Real> grid;
    std::vector<int> signs;
    for (unsigned k = 0; k <= n; ++k) {
      Real x = ref - radius + Real(2) * radius * Real(static_cast<long>(k)) / Real(static_cast<long>(n));
      signs.push_back(evaluate(model_, s_, D, d_, x, bits).value.sign());
      grid.push_back(std::move(x));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (signs[k] * signs[k + 1] > 0) continue;
      const Real& lo = grid[k];
      const Real& hi = grid[k + 1];
      if (best.root >= lo && best.root <= hi) continue;
      // Only brackets that can hold something closer than the current pick.
      const Real near_edge = min(abs(lo - ref), abs(hi - ref));
      if ((lo - ref).sign() != (hi - ref).sign()) {
        // bracket straddles ref
      } else if (near_edge >= abs(best.root - ref)) {
        continue;
      }
      RefineResult cand = bisect(model_, s_, D, d_, lo, hi, bits, tol_);
      if (prefer(cand.root, best.root, ref, trend)) best = std::move(cand);
    }
    return best;
  }

  bool prefer(const Real& cand, const Real& current, const Real& ref, Monotone trend) const {
    const Real dc = abs(cand - ref);
    const Real db = abs(current - ref);
    const Real tie = tol_ * scale_of(ref);
    if (abs(dc - db) > tie) return dc < db;
    switch (trend) {
      case Monotone::increasing: return cand > current;
      case Monotone::decreasing: return cand < current;
      case Monotone::none: return cand > current;
    }
    return false;
  }

  // Seed for the first dimension; nudged off a multiple root when exact
  // isolation shows one.
  Real first_start(unsigned D, const Real& seed) const {
    if (!options_.exact_assist || !model_.is_exact() || series_order_for(D, d_) > kExactSeriesCap) return seed;
    const ExactSeries ex = compute_series_exact(model_, s_, series_order_for(D, d_));
    const Polynomial poly = hankel_poly(ex, D, d_);
    if (poly.is_zero()) return seed;
    const Real w = Real(options_.seed_window) * scale_of(seed);
    const auto roots = poly_real_roots(poly, (seed - w).to_rational(), (seed + w).to_rational(), 128);
    const IsolatedRoot* nearest = nullptr;
    Real nearest_distance;
    for (const auto& r : roots) {
      const Real distance = abs(Real(r.midpoint()) - seed);
      if (nearest == nullptr || distance < nearest_distance) {
        nearest = &r;
        nearest_distance = distance;
      }
    }
    if (nearest == nullptr || nearest->multiplicity < 2) return seed;
    const Real root(nearest->midpoint());
    return root + pow(Real(10), Real(-3)) * abs(root);
  }

  bool acceptable_sign(const Real& root) const {
    return options_.scan_negative || !model_.has_walls() || root.sign() >= 0;
  }

  bool verified(const Real& coarse, const Real& fine) const {
    const Real allowed = pow(Real(10), Real(-static_cast<long>(options_.target_digits) - 3)) *
                         max(abs(fine), pow(Real(10), Real(-static_cast<long>(options_.target_digits))));
    return abs(coarse - fine) <= allowed;
  }

  const PotentialModel& model_;
  unsigned s_;
  unsigned d_;
  TrackOptions options_;
  Real tol_;
};

Monotone trend_of(const RootSequence& seq, const Real& tol) {
  RootSequence copy;
  copy.entries = seq.entries;
  classify_monotonicity(copy, tol);
  return copy.monotone;
}

}  // namespace

RootSequence track_sequence(const PotentialModel& model, const StateLabel& label, unsigned d, unsigned D_min,
                            unsigned D_max, const Real& seed, const TrackOptions& options) {
  if (D_min < 2) throw InvalidArgument("track_sequence: D_min must be at least 2");
  if (D_max < D_min) throw InvalidArgument("track_sequence: D_max < D_min");
  if (!label.symmetry.central && label.n % 2 != label.symmetry.parity_or_l) {
    throw InvalidArgument("track_sequence: state " + std::to_string(label.n) + " does not have " +
                          label.symmetry.str() + " parity");
  }
  if (options.target_digits < 1) throw InvalidArgument("track_sequence: target_digits must be positive");
  if (!options.scan_negative && model.has_walls() && seed.sign() < 0) {
    throw InvalidArgument("negative seed for a walled model requires scan_negative");
  }

  RootSequence seq;
  seq.label = label;
  seq.d = d;
  seq.target_digits = options.target_digits;

  PrecisionScope outer(std::max(options.initial_precision_bits, seed.precision()));
  Tracker tracker(model, label, d, options);
  const Real tol = tracker.tol_;
  long floor_bits = options.initial_precision_bits;

  for (unsigned D = D_min; D <= D_max; ++D) {
    const bool first = seq.entries.empty();
    const Real ref = first ? seed : seq.last().root;
    long bits = precision_for_dimension(D, floor_bits);
    std::optional<SequenceEntry> entry;
    std::string last_error;

    while (bits <= options.max_precision_bits) {
      try {
        PrecisionScope scope(bits);
        const Monotone trend = first ? Monotone::none : trend_of(seq, tol);
        const Real start = first ? tracker.first_start(D, ref) : ref;
        RefineResult coarse = tracker.closest_root(D, ref, start, bits, trend);
        const long fine_bits = 2 * bits;
        RefineResult fine = refine_root(model, label.s(), D, d, coarse.root, fine_bits, tol, options.refine);
        if (!tracker.verified(coarse.root, fine.root)) {
          bits *= 2;
          floor_bits = std::max(floor_bits, bits);
          continue;
        }
        entry = SequenceEntry{D, std::move(fine.root), std::move(fine.residual), fine_bits,
                              coarse.iterations + fine.iterations};
        break;
      } catch (const RefinementFailure& e) {
        last_error = e.what();
        bits *= 2;
        floor_bits = std::max(floor_bits, bits);
      }
    }

    if (!entry) {
      if (first) {
        seq.missing.push_back(D);
        continue;
      }
      seq.failure = "refinement failed at D=" + std::to_string(D) + ": " + last_error;
      break;
    }
    const Real window = Real(options.seed_window) * scale_of(seed);
    if (!tracker.acceptable_sign(entry->root) || (first && abs(entry->root - seed) > window)) {
      seq.missing.push_back(D);
      continue;
    }
    seq.entries.push_back(std::move(*entry));
    if (seq.entries.size() >= 2) {
      seq.stable_digits = stable_digits(seq);
      if (options.stop_when_stable && seq.stable_digits >= options.target_digits) break;
    }
  }

  classify_monotonicity(seq, tol);
  if (!seq.entries.empty() && model.has_walls() && seq.last().root.sign() < 0) {
    seq.classification = Classification::spurious;
  }
  return seq;
}

unsigned stable_digits(const Real& a, const Real& b, unsigned digits) {
  if (a.sign() != b.sign()) return 0;
  if (a.is_zero() && b.is_zero()) return digits;
  const std::string sa = a.to_scientific(static_cast<int>(digits));
  const std::string sb = b.to_scientific(static_cast<int>(digits));
  const auto ea = sa.find('e');
  const auto eb = sb.find('e');
  if (sa.substr(ea) != sb.substr(eb)) return 0;
  unsigned count = 0;
  for (std::size_t i = 0; i < ea && i < eb; ++i) {
    const char ca = sa[i];
    if (ca == '-' || ca == '.') continue;
    if (ca != sb[i]) break;
    ++count;
  }
  return count;
}

unsigned stable_digits(const RootSequence& seq) {
  if (seq.entries.size() < 2) throw InvalidArgument("stable_digits needs at least two entries");
  const auto& e = seq.entries;
  return stable_digits(e[e.size() - 2].root, e.back().root, seq.target_digits);
}

std::optional<unsigned> first_stable_dimension(const RootSequence& seq, unsigned digits) {
  const auto& e = seq.entries;
  if (e.size() < 2) return std::nullopt;
  const std::string final_digits = e.back().root.to_scientific(static_cast<int>(digits));
  std::optional<unsigned> first;
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    if (e[i].root.to_scientific(static_cast<int>(digits)) != final_digits) break;
    first = e[i].D;
  }
  return first;
}

void classify_monotonicity(RootSequence& seq, const Real& tol) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < seq.entries.size(); ++i) {
    const Real& prev = seq.entries[i - 1].root;
    const Real& cur = seq.entries[i].root;
    const Real diff = cur - prev;
    if (abs(diff) <= tol * scale_of(cur)) continue;
    if (diff.sign() > 0) {
      up = true;
    } else {
      down = true;
    }
  }
  if (up && !down) {
    seq.monotone = Monotone::increasing;
    seq.bound_kind = BoundKind::lower;
  } else if (down && !up) {
    seq.monotone = Monotone::decreasing;
    seq.bound_kind = BoundKind::upper;
  } else {
    seq.monotone = Monotone::none;
    seq.bound_kind = BoundKind::none;
  }
}

Classification classify_root(const Real& value, const OracleSpectrum& oracle, const Real& tol_rel) {
  if (oracle.model().has_walls() && value.sign() < 0) return Classification::spurious;
  const Real slack = max(pow(Real(2), Real(-std::max(64L, oracle.precision_bits) / 2)) * max(abs(value), Real(1)),
                         pow(Real(10), Real(-10)));
  for (const auto& level : oracle.eigenvalues) {
    const Real gap = level - value;
    if (gap >= -slack && gap <= tol_rel * abs(value)) return Classification::physical;
  }
  return Classification::unknown;
}

}  // namespace rpade
