#include "rpade/series.hpp"

#include <string>

#include "rpade/errors.hpp"

namespace rpade {

RiccatiSeries compute_series(const PotentialModel& model, unsigned s, const Real& E, unsigned M,
                             long precision_bits) {
  PrecisionScope scope(precision_bits);
  using D = Dual<Real>;
  std::vector<D> V;
  V.reserve(M + 1);
  for (unsigned j = 0; j <= M; ++j) V.push_back(D::constant(model.coeff_real(j)));
  Real energy = E;
  energy.set_precision(precision_bits);
  const auto f = riccati_recursion<D>(V, s, D::variable(energy), M);

  RiccatiSeries out;
  out.s = s;
  out.E = energy;
  out.M = M;
  out.precision_bits = precision_bits;
  out.f.reserve(M + 1);
  out.df_dE.reserve(M + 1);
  for (const auto& x : f) {
    out.f.push_back(x.value);
    out.df_dE.push_back(x.deriv);
  }
  return out;
}

ExactSeries compute_series_exact(const PotentialModel& model, unsigned s, unsigned M, unsigned cap) {
  if (M > cap) {
    throw UnsupportedMode("exact series order " + std::to_string(M) + " exceeds cap " + std::to_string(cap));
  }
  if (!model.is_exact()) throw UnsupportedMode("exact series requires rational model parameters");
  std::vector<Polynomial> V;
  V.reserve(M + 1);
  for (unsigned j = 0; j <= M; ++j) V.emplace_back(model.coeff_exact(j));
  ExactSeries out;
  out.s = s;
  out.M = M;
  out.polys = riccati_recursion<Polynomial>(V, s, Polynomial::variable(), M);
  return out;
}

std::vector<Rational> compute_series_rational(const PotentialModel& model, unsigned s, const Rational& E,
                                              unsigned M) {
  if (!model.is_exact()) throw UnsupportedMode("rational series requires rational model parameters");
  std::vector<Rational> V;
  V.reserve(M + 1);
  for (unsigned j = 0; j <= M; ++j) V.push_back(model.coeff_exact(j));
  return riccati_recursion<Rational>(V, s, E, M);
}

}  // namespace rpade
