#pragma once

// Taylor coefficients of the regularized logarithmic derivative
//   f(x) = s/x - psi'(x)/psi(x) = x * sum_j f_j x^(2j).
// Substituting into the Riccati equation gives
//   f_0 = (E - V_0) / (2s + 1),
//   f_m = (sum_{i<m} f_i f_{m-1-i} - V_m) / (2m + 2s + 1).
// s = 0 for even states, s = 1 for odd states, s = l + 1 for a central field.

#include <span>
#include <vector>

#include "rpade/dual.hpp"
#include "rpade/model.hpp"
#include "rpade/polynomial.hpp"
#include "rpade/real.hpp"

namespace rpade {

/// Default largest index allowed in exact (polynomial) mode.
inline constexpr unsigned kExactSeriesCap = 25;

/// Runs the recursion over any ring that supports +, -, * and division by an
/// integer constant (via T(long)). V must hold at least M + 1 entries; terms
/// past M are never read.
template <class T>
std::vector<T> riccati_recursion(std::span<const T> V, unsigned s, const T& E, unsigned M) {
  std::vector<T> f;
  f.reserve(M + 1);
  f.push_back((E - V[0]) / T(static_cast<long>(2 * s + 1)));
  for (unsigned m = 1; m <= M; ++m) {
    // sum_{i=0}^{m-1} f_i f_{m-1-i}, folded by symmetry.
    T conv(0L);
    for (unsigned i = 0; 2 * i + 1 < m; ++i) conv += f[i] * f[m - 1 - i];
    conv += conv;
    if ((m - 1) % 2 == 0) {
      const unsigned h = (m - 1) / 2;
      conv += f[h] * f[h];
    }
    f.push_back((conv - V[m]) / T(static_cast<long>(2 * m + 2 * s + 1)));
  }
  return f;
}

struct RiccatiSeries {
  unsigned s = 0;
  Real E;
  unsigned M = 0;
  std::vector<Real> f;      // f_0 .. f_M
  std::vector<Real> df_dE;  // d f_j / dE, carried through the recursion
  long precision_bits = 0;
};

struct ExactSeries {
  unsigned s = 0;
  unsigned M = 0;
  std::vector<Polynomial> polys;  // f_j as polynomials in E; degree j + 1
};

/// Numeric series at trial energy E with analytic E-derivatives.
RiccatiSeries compute_series(const PotentialModel& model, unsigned s, const Real& E, unsigned M,
                             long precision_bits);

/// Series as exact polynomials in E. Throws UnsupportedMode when the model is
/// not exact or M exceeds `cap`.
ExactSeries compute_series_exact(const PotentialModel& model, unsigned s, unsigned M,
                                 unsigned cap = kExactSeriesCap);

/// The recursion run in exact rational arithmetic at a rational energy.
std::vector<Rational> compute_series_rational(const PotentialModel& model, unsigned s, const Rational& E,
                                              unsigned M);

/// Number of coefficients needed (largest index) for a D x D Hankel matrix at
/// displacement d, with a safety margin of two terms.
inline unsigned series_order_for(unsigned D, unsigned d) { return 2 * D + d + 3; }

}  // namespace rpade
