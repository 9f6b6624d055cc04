#pragma once

// Potential family for the Riccati-Pade solver.
//
// All potentials are even power series V(x) = sum_j V_j x^(2j). The bounded
// oscillator is a^2 x^2 / (1 - x^2/R^2)^2 on (-R, R) with Dirichlet walls.
// Parameters are stored as exact rationals when the caller supplies them that
// way; conversion to working precision happens only when a numeric
// coefficient is requested.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rpade/real.hpp"

namespace rpade {

/// An exact rational, or a value already rounded to some binary precision.
class Scalar {
 public:
  Scalar(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Real& r) : value_(r) {}      // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// Throws UnsupportedMode when the scalar is not exact.
  const Rational& exact() const;
  /// Value at the current working precision.
  Real to_real() const;
  int sign() const;
  std::string str() const;

  friend Scalar operator*(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, Real> value_;
};

enum class PotentialKind { bounded_oscillator, inverted_oscillator, harmonic, custom };

const char* to_string(PotentialKind kind);

class PotentialModel {
 public:
  /// a^2 x^2 / (1 - x^2/R^2)^2. Requires a > 0, R > 0.
  static PotentialModel bounded(Scalar a, Scalar R);
  /// a^2 x^2 / (1 + x^2/R^2)^2, the x -> ix image of the bounded oscillator.
  static PotentialModel inverted(Scalar a, Scalar R);
  /// a^2 x^2.
  static PotentialModel harmonic(Scalar a);
  /// Finite even polynomial given as (j, V_j) pairs; unspecified V_j are zero.
  static PotentialModel custom(std::vector<std::pair<unsigned, Scalar>> coeffs);

  PotentialKind kind() const { return kind_; }
  const Scalar& a() const { return a_; }
  const std::optional<Scalar>& R() const { return R_; }
  bool has_walls() const { return kind_ == PotentialKind::bounded_oscillator; }

  /// True when every coefficient can be produced as an exact rational.
  bool is_exact() const;

  /// V_j, exact when the parameters are exact.
  Scalar coeff(unsigned j) const;
  /// V_j as an exact rational; throws UnsupportedMode otherwise.
  Rational coeff_exact(unsigned j) const;
  /// V_j at working precision.
  Real coeff_real(unsigned j) const;

  /// Closed-form V(x) at working precision (for |x| < R when bounded).
  Real evaluate(const Real& x) const;

  std::string describe() const;

 private:
  PotentialModel(PotentialKind kind, Scalar a, std::optional<Scalar> R);

  PotentialKind kind_;
  Scalar a_;
  std::optional<Scalar> R_;
  std::vector<std::pair<unsigned, Scalar>> custom_;
};

/// Symmetry class of a state: even or odd parity of the 1D problem, or
/// angular momentum l of the central-field problem. The regularization
/// exponent s of the Riccati function is 0, 1, or l + 1 respectively, and
/// central-field l = 0 coincides with odd parity.
struct Symmetry {
  bool central = false;
  unsigned parity_or_l = 0;

  static Symmetry even() { return {false, 0}; }
  static Symmetry odd() { return {false, 1}; }
  static Symmetry angular(unsigned l) { return {true, l}; }

  unsigned s() const { return central ? parity_or_l + 1 : parity_or_l; }
  /// l(l+1) for a central field, 0 otherwise.
  unsigned centrifugal() const { return central ? parity_or_l * (parity_or_l + 1) : 0; }
  std::string str() const;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// E(a, R) = energy_factor * E(canonical_a, canonical_R), from x -> x / sqrt(a):
/// E(a, R) = a E(1, sqrt(a) R). canonical_R stays exact when a is a rational square.
struct ScaleReduction {
  Scalar canonical_a;
  Scalar canonical_R;
  Scalar energy_factor;
};

/// Exact when v is the square of a rational, otherwise at working precision.
Scalar sqrt(const Scalar& v);

ScaleReduction scale_reduce(const Scalar& a, const Scalar& R);

struct SeedEstimates {
  Real box_seed;  ///< (n+1)^2 pi^2 / (4 R^2), the small-R limit
  Real ho_seed;   ///< 2n + 1, the large-R limit
  /// box_seed for R <= 1, ho_seed for R >= 10, the larger of the two otherwise.
  Real preferred;
};

/// Seeds for the n-th state (global 1D quantum number) of the a = 1 model.
SeedEstimates seed_estimates(unsigned n, const Real& R);

}  // namespace rpade
