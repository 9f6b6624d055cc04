#include "rpade/real.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "rpade/errors.hpp"

namespace rpade {

namespace {

thread_local long g_working_precision = 256;

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

// Digit string and decimal exponent of x, correctly rounded: x ~ 0.DIGITS * 10^exp.
std::pair<std::string, long> decimal_digits(mpfr_srcptr x, int digits) {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), x, kRound);
  std::string s(raw);
  mpfr_free_str(raw);
  return {s, static_cast<long>(exp)};
}

}  // namespace

long working_precision() { return g_working_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_working_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw InvalidArgument("precision out of range: " + std::to_string(bits));
  }
  g_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

long bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 1;
}

Real::Real() {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_si(value_, v, kRound);
}

Real::Real(unsigned long v) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_ui(value_, v, kRound);
}

Real::Real(double v) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_d(value_, v, kRound);
}

Real::Real(const Rational& q) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_q(value_, q.get_mpq_t(), kRound);
}

Real::Real(const Integer& z) {
  mpfr_init2(value_, g_working_precision);
  mpfr_set_z(value_, z.get_mpz_t(), kRound);
}

Real::Real(std::string_view text) {
  mpfr_init2(value_, g_working_precision);
  const std::string s = trim(text);
  char* end = nullptr;
  mpfr_strtofr(value_, s.c_str(), &end, 10, kRound);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw InvalidArgument("not a number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::set_precision(long bits) { mpfr_prec_round(value_, bits, kRound); }

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  return r;
}
Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.value_, a.value_, kRound);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Rational Real::to_rational() const {
  if (!is_finite()) throw InvalidArgument("cannot convert non-finite value to a rational");
  Integer mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  Rational q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

std::string Real::to_fixed(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) {
    return digits > 1 ? "0." + std::string(static_cast<std::size_t>(digits - 1), '0') : "0";
  }
  auto [s, exp] = decimal_digits(value_, digits);
  std::string sign_part;
  if (s.front() == '-') {
    sign_part = "-";
    s.erase(0, 1);
  }
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + s;
  } else if (exp >= static_cast<long>(s.size())) {
    out = s + std::string(static_cast<std::size_t>(exp) - s.size(), '0');
  } else {
    out = s.substr(0, static_cast<std::size_t>(exp)) + "." + s.substr(static_cast<std::size_t>(exp));
  }
  return sign_part + out;
}

std::string Real::to_scientific(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  auto [s, exp] = decimal_digits(value_, digits);
  std::string sign_part;
  if (s.front() == '-') {
    sign_part = "-";
    s.erase(0, 1);
  }
  std::string out = s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  return sign_part + out + "e" + std::to_string(exp - 1);
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.value_, kRound);
  return r;
}

Real Real::pow2(long e) {
  Real r(1);
  mpfr_mul_2si(r.value_, r.value_, e, kRound);
  return r;
}

#define RPADE_UNARY(name, fn)             \
  Real name(const Real& x) {              \
    Real r;                               \
    fn(r.raw(), x.raw(), kRound);         \
    return r;                             \
  }

RPADE_UNARY(abs, mpfr_abs)
RPADE_UNARY(sqrt, mpfr_sqrt)
RPADE_UNARY(exp, mpfr_exp)
RPADE_UNARY(log, mpfr_log)
RPADE_UNARY(log10, mpfr_log10)
RPADE_UNARY(sin, mpfr_sin)
RPADE_UNARY(cos, mpfr_cos)
RPADE_UNARY(acos, mpfr_acos)

#undef RPADE_UNARY

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), kRound);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

void fma_inplace(Real& x, const Real& a, const Real& b) {
  mpfr_fma(x.raw(), a.raw(), b.raw(), x.raw(), kRound);
}

bool isfinite(const Real& x) { return x.is_finite(); }
bool isnan(const Real& x) { return mpfr_nan_p(x.raw()) != 0; }
bool isinf(const Real& x) { return mpfr_inf_p(x.raw()) != 0; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto digits = os.precision() > 0 ? static_cast<int>(os.precision()) : 20;
  return os << x.to_scientific(digits);
}

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  auto fail = [&]() -> Rational { throw InvalidArgument("not an exact decimal: '" + s + "'"); };
  if (s.empty()) return fail();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      any_digit = true;
      if (seen_point) ++scale;
    } else {
      return fail();
    }
  }
  if (!any_digit) return fail();
  if (i < s.size()) {
    const std::string e = s.substr(i + 1);
    if (e.empty()) return fail();
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(e, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != e.size()) return fail();
    scale -= exponent;
  }
  Integer numerator(digits, 10);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale >= 0 ? Rational(numerator, power) : Rational(numerator * power);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace rpade
