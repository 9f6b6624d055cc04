#include "rpade/model.hpp"

#include <algorithm>
#include <sstream>

#include "rpade/errors.hpp"

namespace rpade {

const Rational& Scalar::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw UnsupportedMode("exact arithmetic requires rational parameters");
}

Real Scalar::to_real() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Real(*q);
  Real r = std::get<Real>(value_);
  r.set_precision(working_precision());
  return r;
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  return std::get<Real>(value_).sign();
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  const Real& r = std::get<Real>(value_);
  return r.to_scientific(static_cast<int>(static_cast<double>(r.precision()) * 0.30103));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() * b.exact()));
  return Scalar(a.to_real() * b.to_real());
}

const char* to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::bounded_oscillator: return "bounded_oscillator";
    case PotentialKind::inverted_oscillator: return "inverted_oscillator";
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::custom: return "custom";
  }
  return "unknown";
}

PotentialModel::PotentialModel(PotentialKind kind, Scalar a, std::optional<Scalar> R)
    : kind_(kind), a_(std::move(a)), R_(std::move(R)) {
  if (a_.sign() <= 0) throw InvalidArgument("oscillator strength a must be positive");
  if (R_ && R_->sign() <= 0) throw InvalidArgument("box half-width R must be positive");
}

PotentialModel PotentialModel::bounded(Scalar a, Scalar R) {
  return PotentialModel(PotentialKind::bounded_oscillator, std::move(a), std::move(R));
}

PotentialModel PotentialModel::inverted(Scalar a, Scalar R) {
  return PotentialModel(PotentialKind::inverted_oscillator, std::move(a), std::move(R));
}

PotentialModel PotentialModel::harmonic(Scalar a) {
  return PotentialModel(PotentialKind::harmonic, std::move(a), std::nullopt);
}

PotentialModel PotentialModel::custom(std::vector<std::pair<unsigned, Scalar>> coeffs) {
  PotentialModel m(PotentialKind::custom, Scalar(1L), std::nullopt);
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i].first == coeffs[i - 1].first) {
      throw InvalidArgument("duplicate custom coefficient index " + std::to_string(coeffs[i].first));
    }
  }
  m.custom_ = std::move(coeffs);
  return m;
}

bool PotentialModel::is_exact() const {
  if (kind_ == PotentialKind::custom) {
    return std::all_of(custom_.begin(), custom_.end(),
                       [](const auto& c) { return c.second.is_exact(); });
  }
  return a_.is_exact() && (!R_ || R_->is_exact());
}

Scalar PotentialModel::coeff(unsigned j) const {
  if (is_exact()) return Scalar(coeff_exact(j));
  return Scalar(coeff_real(j));
}

Rational PotentialModel::coeff_exact(unsigned j) const {
  switch (kind_) {
    case PotentialKind::harmonic: {
      const Rational& a = a_.exact();
      return j == 1 ? Rational(a * a) : Rational(0);
    }
    case PotentialKind::custom: {
      for (const auto& [k, v] : custom_) {
        if (k == j) return v.exact();
      }
      return Rational(0);
    }
    case PotentialKind::bounded_oscillator:
    case PotentialKind::inverted_oscillator: {
      if (j == 0) return Rational(0);
      const Rational& a = a_.exact();
      const Rational& R = R_->exact();
      // a^2 x^2 sum_k (k+1) (x^2/R^2)^k, so V_j = a^2 j / R^(2(j-1)).
      Rational r2 = R * R;
      Rational scale(1);
      for (unsigned k = 1; k < j; ++k) scale /= r2;
      Rational v = a * a * j * scale;
      if (kind_ == PotentialKind::inverted_oscillator && j % 2 == 0) v = -v;
      return v;
    }
  }
  return Rational(0);
}

Real PotentialModel::coeff_real(unsigned j) const {
  if (is_exact()) return Real(coeff_exact(j));
  switch (kind_) {
    case PotentialKind::harmonic: {
      const Real a = a_.to_real();
      return j == 1 ? a * a : Real(0);
    }
    case PotentialKind::custom: {
      for (const auto& [k, v] : custom_) {
        if (k == j) return v.to_real();
      }
      return Real(0);
    }
    case PotentialKind::bounded_oscillator:
    case PotentialKind::inverted_oscillator: {
      if (j == 0) return Real(0);
      const Real a = a_.to_real();
      const Real R = R_->to_real();
      Real v = a * a * Real(static_cast<long>(j)) /
               pow(R * R, Real(static_cast<long>(j) - 1));
      if (kind_ == PotentialKind::inverted_oscillator && j % 2 == 0) v = -v;
      return v;
    }
  }
  return Real(0);
}

Real PotentialModel::evaluate(const Real& x) const {
  const Real x2 = x * x;
  switch (kind_) {
    case PotentialKind::harmonic: {
      const Real a = a_.to_real();
      return a * a * x2;
    }
    case PotentialKind::custom: {
      Real sum(0);
      for (const auto& [k, v] : custom_) sum += v.to_real() * pow(x2, Real(static_cast<long>(k)));
      return sum;
    }
    case PotentialKind::bounded_oscillator:
    case PotentialKind::inverted_oscillator: {
      const Real a = a_.to_real();
      const Real R = R_->to_real();
      const Real u = x2 / (R * R);
      const Real den = kind_ == PotentialKind::bounded_oscillator ? Real(1) - u : Real(1) + u;
      return a * a * x2 / (den * den);
    }
  }
  return Real(0);
}

std::string PotentialModel::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (kind_ != PotentialKind::custom) os << " a=" << a_.str();
  if (R_) os << " R=" << R_->str();
  for (const auto& [k, v] : custom_) os << " V" << k << "=" << v.str();
  return os.str();
}

std::string Symmetry::str() const {
  if (central) return "l=" + std::to_string(parity_or_l);
  return parity_or_l == 0 ? "even" : "odd";
}

Scalar sqrt(const Scalar& v) {
  if (v.is_exact()) {
    const Rational& q = v.exact();
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      Integer num, den;
      mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
      return Rational(num, den);
    }
  }
  return sqrt(v.to_real());
}

ScaleReduction scale_reduce(const Scalar& a, const Scalar& R) {
  if (a.sign() <= 0 || R.sign() <= 0) throw InvalidArgument("scale_reduce requires a > 0 and R > 0");
  return ScaleReduction{Scalar(1L), sqrt(a) * R, a};
}

SeedEstimates seed_estimates(unsigned n, const Real& R) {
  if (R.sign() <= 0) throw InvalidArgument("seed_estimates requires R > 0");
  const Real k(static_cast<long>(n) + 1);
  const Real pi = Real::pi();
  Real box = k * k * pi * pi / (Real(4) * R * R);
  Real ho(2 * static_cast<long>(n) + 1);
  Real preferred;
  if (R <= Real(1)) {
    preferred = box;
  } else if (R >= Real(10)) {
    preferred = ho;
  } else {
    preferred = max(box, ho);
  }
  return SeedEstimates{std::move(box), std::move(ho), std::move(preferred)};
}

}  // namespace rpade
