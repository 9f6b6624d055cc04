#pragma once

// Convergent root sequences E^[D] of the Hankel condition H_D^d(E) = 0.

#include <optional>
#include <string>
#include <vector>

#include "rpade/errors.hpp"
#include "rpade/model.hpp"
#include "rpade/real.hpp"

namespace rpade {

class OracleSpectrum;

enum class Monotone { increasing, decreasing, none };
enum class BoundKind { lower, upper, none };
enum class Classification { physical, spurious, unknown };

const char* to_string(Monotone m);
const char* to_string(BoundKind b);
const char* to_string(Classification c);

/// Target state: symmetry class plus quantum number n (the global 1D index
/// for parity states, the radial index for a central field).
struct StateLabel {
  Symmetry symmetry;
  unsigned n = 0;

  unsigned s() const { return symmetry.s(); }
  std::string str() const;
};

struct SequenceEntry {
  unsigned D = 0;
  Real root;
  Real residual;  // |H_D^d| at the root
  long precision_bits = 0;
  unsigned iterations = 0;
};

struct RootSequence {
  StateLabel label;
  unsigned d = 0;
  unsigned target_digits = 20;
  std::vector<SequenceEntry> entries;
  std::vector<unsigned> missing;  // dimensions with no acceptable root near the seed
  unsigned stable_digits = 0;
  Monotone monotone = Monotone::none;
  BoundKind bound_kind = BoundKind::none;
  Classification classification = Classification::unknown;
  std::optional<std::string> failure;

  const SequenceEntry* find(unsigned D) const;
  /// Throws InvalidArgument when there are no entries.
  const SequenceEntry& last() const;
};

class RefinementFailure : public Error {
 public:
  RefinementFailure(const std::string& what, Real best) : Error(what), best_(std::move(best)) {}
  const Real& best() const { return best_; }

 private:
  Real best_;
};

struct RefineOptions {
  unsigned max_iterations = 200;
  unsigned max_halvings = 20;
  double bracket_fraction = 0.05;  // fallback scan of +-5% around the seed
  unsigned bracket_points = 40;
};

struct RefineResult {
  Real root;
  Real residual;
  unsigned iterations = 0;
  bool used_bisection = false;
};

/// Damped Newton on E -> H_D^d(E) from `seed`, falling back to bisection on a
/// sign change found near the seed. Converged when |dE| < tol * max(1, |E|).
RefineResult refine_root(const PotentialModel& model, unsigned s, unsigned D, unsigned d, const Real& seed,
                         long precision_bits, const Real& tol, const RefineOptions& options = {});

struct TrackOptions {
  unsigned target_digits = 20;
  long initial_precision_bits = 256;
  long max_precision_bits = 16384;
  bool stop_when_stable = true;
  /// Accept negative roots of a walled model (they are spurious).
  bool scan_negative = false;
  /// The first root is accepted only within seed_window * max(|seed|, 1) of the seed.
  double seed_window = 0.05;
  /// Use exact-mode root isolation at the first dimension to detect multiple roots.
  bool exact_assist = false;
  unsigned closest_scan_points = 24;
  RefineOptions refine;
};

/// Newton tolerance for a requested number of reported digits.
Real newton_tolerance(unsigned target_digits);

/// Working precision for dimension D: max(floor, 64 + 24 D).
long precision_for_dimension(unsigned D, long floor_bits);

RootSequence track_sequence(const PotentialModel& model, const StateLabel& label, unsigned d, unsigned D_min,
                            unsigned D_max, const Real& seed, const TrackOptions& options = {});

/// Leading decimal digits shared by a and b when both are rounded to `digits`
/// significant digits (signs and decimal exponents must match).
unsigned stable_digits(const Real& a, const Real& b, unsigned digits);
/// stable_digits of the last two entries. Throws InvalidArgument for fewer than two.
unsigned stable_digits(const RootSequence& seq);

/// Smallest D whose root, rounded to `digits` significant digits, equals every
/// later entry's rounded root. Requires at least one later entry to confirm it.
std::optional<unsigned> first_stable_dimension(const RootSequence& seq, unsigned digits);

/// Fills monotone and bound_kind from the entries; differences below
/// `tol * |E|` count as ties.
void classify_monotonicity(RootSequence& seq, const Real& tol);

/// Physical when some oracle level lies at or above `value` within
/// tol_rel * |value| (levels below `value` by up to 1e-10 still count, to
/// absorb decimal rounding of `value`); spurious when a walled model yields a
/// negative value; unknown otherwise.
Classification classify_root(const Real& value, const OracleSpectrum& oracle, const Real& tol_rel);

}  // namespace rpade
