#pragma once

// Multiprecision scalar types used throughout the solver.
//
// Real wraps an MPFR number. Every new value is created at the calling
// thread's working precision, which is set with a PrecisionScope. Copies keep
// the precision of their source.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rpade {

using Rational = mpq_class;
using Integer = mpz_class;

/// Working precision (bits) for newly created Real values on this thread.
long working_precision();

/// RAII guard that sets the working precision and restores the previous one.
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

class Real {
 public:
  Real();
  Real(int v);   // NOLINT(google-explicit-constructor)
  Real(long v);  // NOLINT(google-explicit-constructor)
  explicit Real(unsigned long v);
  explicit Real(double v);
  explicit Real(const Rational& q);
  explicit Real(const Integer& z);
  /// Parses a decimal or scientific literal, correctly rounded. Throws
  /// InvalidArgument on malformed input.
  explicit Real(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Rounds in place to a new precision.
  void set_precision(long bits);

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact conversion of the binary value to a rational.
  Rational to_rational() const;

  /// `digits` significant decimal digits, round-half-even, fixed notation.
  std::string to_fixed(int digits) const;
  /// `digits` significant decimal digits, round-half-even, d.ddde±x notation.
  std::string to_scientific(int digits) const;

  static Real pi();
  /// 2^e exactly.
  static Real pow2(long e);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real pow(const Real& x, const Real& y);
Real sin(const Real& x);
Real cos(const Real& x);
Real acos(const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// x += a * b at x's precision.
void fma_inplace(Real& x, const Real& a, const Real& b);
bool isfinite(const Real& x);
bool isnan(const Real& x);
bool isinf(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

/// Parses a decimal literal ("0.1", "-2.5e-3", "7/3") into an exact rational.
/// Throws InvalidArgument when the text is not a terminating decimal or ratio.
Rational parse_rational(std::string_view text);

/// Precision in bits needed to carry `digits` decimal digits.
long bits_for_digits(long digits);

}  // namespace rpade
