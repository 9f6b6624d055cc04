#include "rpade/hankel.hpp"

#include <string>
#include <utility>

#include "rpade/dual.hpp"
#include "rpade/errors.hpp"

namespace rpade {

namespace {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> build(std::span<const T> f, unsigned D, unsigned d) {
  Matrix<T> m(D);
  for (unsigned i = 0; i < D; ++i) {
    m[i].reserve(D);
    for (unsigned j = 0; j < D; ++j) m[i].push_back(f[d + i + j + 1]);
  }
  return m;
}

Real magnitude(const Real& x) { return abs(x); }
Real magnitude(const Dual<Real>& x) { return abs(x.value); }
Rational magnitude(const Rational& x) { return abs(x); }

bool is_zero(const Real& x) { return x.is_zero(); }
bool is_zero(const Dual<Real>& x) { return x.value.is_zero(); }
bool is_zero(const Rational& x) { return x == 0; }

// Returns false when a column has no nonzero pivot (determinant is zero).
template <class T>
bool eliminate(Matrix<T>& a, T& det) {
  const std::size_t n = a.size();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    auto best = magnitude(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      auto mag = magnitude(a[i][k]);
      if (mag > best) {
        best = std::move(mag);
        piv = i;
      }
    }
    if (is_zero(a[piv][k])) return false;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a[i][k])) continue;
      const T factor = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  if (negate) det = -det;
  return true;
}

template <class T>
T determinant(Matrix<T> a) {
  T det(1L);
  if (!eliminate(a, det)) return T(0L);
  return det;
}

}  // namespace

void check_hankel_shape(std::size_t available, unsigned D, unsigned d) {
  if (D < 2) throw InvalidArgument("Hankel dimension must be at least 2");
  if (available <= hankel_max_index(D, d)) {
    throw SeriesLengthError("H_" + std::to_string(D) + "^" + std::to_string(d) + " needs f up to index " +
                            std::to_string(hankel_max_index(D, d)) + ", series has " +
                            std::to_string(available) + " coefficients");
  }
}

HankelFrame hankel_value(const RiccatiSeries& series, unsigned D, unsigned d) {
  check_hankel_shape(series.f.size(), D, d);
  PrecisionScope scope(series.precision_bits);
  using DR = Dual<Real>;
  std::vector<DR> f;
  f.reserve(series.f.size());
  for (std::size_t j = 0; j < series.f.size(); ++j) f.emplace_back(series.f[j], series.df_dE[j]);

  HankelFrame out;
  out.D = D;
  out.d = d;
  out.precision_bits = series.precision_bits;

  Matrix<DR> a = build<DR>(f, D, d);
  DR det(1L);
  if (eliminate(a, det)) {
    out.value = det.value;
    out.derivative = det.deriv;
    return out;
  }
  // Singular at this E: d(det)/dE = sum over columns of det with that column
  // replaced by its derivative.
  out.value = Real(0);
  const Matrix<Real> values = build<Real>(series.f, D, d);
  const Matrix<Real> derivs = build<Real>(series.df_dE, D, d);
  Real total(0);
  for (unsigned c = 0; c < D; ++c) {
    Matrix<Real> m = values;
    for (unsigned i = 0; i < D; ++i) m[i][c] = derivs[i][c];
    total += determinant(std::move(m));
  }
  out.derivative = total;
  return out;
}

Real hankel_determinant(std::span<const Real> f, unsigned D, unsigned d) {
  check_hankel_shape(f.size(), D, d);
  return determinant(build<Real>(f, D, d));
}

Rational hankel_determinant(std::span<const Rational> f, unsigned D, unsigned d) {
  check_hankel_shape(f.size(), D, d);
  return determinant(build<Rational>(f, D, d));
}

Polynomial hankel_poly(const ExactSeries& exact, unsigned D, unsigned d) {
  check_hankel_shape(exact.polys.size(), D, d);
  Matrix<Polynomial> a = build<Polynomial>(exact.polys, D, d);
  // Bareiss: every division below is exact in Q[E].
  const std::size_t n = D;
  bool negate = false;
  Polynomial prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return Polynomial();
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace rpade
