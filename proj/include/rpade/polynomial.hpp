#pragma once

// Dense univariate polynomials with exact rational coefficients, plus real
// root isolation (square-free decomposition, Sturm sequences, bisection).

#include <string>
#include <vector>

#include "rpade/real.hpp"

namespace rpade {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(long c);
  explicit Polynomial(const Rational& c);

  /// The polynomial "E".
  static Polynomial variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of E^k (zero past the degree).
  Rational coeff(unsigned k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  /// Exact division; throws InvalidArgument when the remainder is nonzero.
  Polynomial& operator/=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Polynomial& b) { return a /= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const;
  /// Scaled so the leading coefficient is 1. The zero polynomial stays zero.
  Polynomial monic() const;

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;
  int sign_at(const Rational& x) const;

  /// Human-readable form, highest power first, e.g. "E^2 - 1/3".
  std::string str(const std::string& var = "E") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies E^k
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

struct SquareFreeFactor {
  Polynomial factor;  // monic, square-free, positive degree
  unsigned multiplicity;
};

/// p = c * prod factor_i^multiplicity_i with pairwise coprime factors.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

/// Sturm chain of a square-free polynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p);
/// Number of sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

struct IsolatedRoot {
  Rational lo;  // the root lies in [lo, hi]; lo == hi for an exactly located root
  Rational hi;
  unsigned multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Every distinct real root of `p` in [lo, hi], ascending, each reported once
/// with its multiplicity and enclosed in an interval narrower than
/// 2^(-precision_bits/2). Throws InvalidArgument for the zero polynomial or an
/// empty interval.
std::vector<IsolatedRoot> poly_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                          long precision_bits = 256);

}  // namespace rpade
