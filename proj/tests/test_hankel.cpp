#include <doctest.h>

#include "helpers.hpp"
#include "rpade/errors.hpp"
#include "rpade/hankel.hpp"

using namespace rpade;
using rpade::test::Q;

namespace {

Polynomial Epow(unsigned k) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return Polynomial(std::move(c));
}

Polynomial exact_hankel(const PotentialModel& model, unsigned s, unsigned D, unsigned d) {
  return hankel_poly(compute_series_exact(model, s, series_order_for(D, d)), D, d);
}

// 4725 R^4 H_2^0 for the a = 1 bounded oscillator.
Polynomial closed_form_2x2(const Rational& R) {
  const Rational R2 = R * R, R4 = R2 * R2;
  return Epow(6) * R4 - Epow(4) * (27 * R4) + Epow(3) * (324 * R2) + Epow(2) * (51 * R4 - 675) -
         Epow(1) * (324 * R2) - Polynomial(25 * R4 + 81);
}

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("harmonic determinant vanishes at the ground state") {
    const auto h = PotentialModel::harmonic(Rational(1));
    const auto f1 = compute_series_rational(h, 0, Rational(1), 10);
    CHECK(hankel_determinant(std::span<const Rational>(f1), 2, 0) == 0);
    const auto f3 = compute_series_rational(h, 0, Rational(3), 10);
    CHECK(hankel_determinant(std::span<const Rational>(f3), 2, 0) == Rational(-1024, 4725));
  }

  TEST_CASE("harmonic closed form") {
    const auto h = PotentialModel::harmonic(Rational(1));
    const Polynomial E = Polynomial::variable();
    const Polynomial sq = E * E - Polynomial(1);
    CHECK(exact_hankel(h, 0, 2, 0) == (E * E - Polynomial(25)) * sq * sq * Rational(1, 4725));
  }

  TEST_CASE("closed-form 2x2 determinant of the bounded oscillator") {
    for (const char* r : {"1", "1/10", "10", "7/3", "100"}) {
      const Rational R = Q(r);
      const auto m = PotentialModel::bounded(Rational(1), R);
      CHECK(exact_hankel(m, 0, 2, 0) * (4725 * R * R * R * R) == closed_form_2x2(R));
    }
  }

  TEST_CASE("wide boxes approach the harmonic determinant") {
    const Polynomial E = Polynomial::variable();
    const Polynomial sq = E * E - Polynomial(1);
    const Polynomial limit = (E * E - Polynomial(25)) * sq * sq * Rational(1, 4725);
    Rational previous(-1);
    for (long r : {10L, 100L, 1000L}) {
      const auto m = PotentialModel::bounded(Rational(1), Rational(r));
      const Polynomial diff = exact_hankel(m, 0, 2, 0) - limit;
      Rational worst(0);
      for (const auto& c : diff.coeffs()) worst = std::max(worst, Rational(abs(c)));
      if (previous >= 0) CHECK(worst * 50 < previous);
      previous = worst;
    }
  }

  TEST_CASE("degree law") {
    const auto m = PotentialModel::bounded(Rational(1), Rational(1));
    CHECK(exact_hankel(m, 0, 3, 1).degree() == 15);
    for (unsigned D = 2; D <= 5; ++D) {
      for (unsigned d = 0; d <= 2; ++d) {
        CHECK(exact_hankel(m, 0, D, d).degree() == static_cast<int>(D * (D + d + 1)));
      }
    }
  }

  TEST_CASE("numeric determinant matches the exact polynomial") {
    PrecisionScope scope(256);
    const auto m = PotentialModel::bounded(Rational(1), Rational(1));
    for (unsigned d = 0; d <= 1; ++d) {
      const Polynomial p = exact_hankel(m, 0, 4, d);
      for (const char* e : {"2.5", "7.25", "-1.5"}) {
        const Real E(std::string_view{e});
        const auto series = compute_series(m, 0, E, series_order_for(4, d), 256);
        const auto frame = hankel_value(series, 4, d);
        CHECK(rpade::test::close(frame.value, p(E), Real(Q("1e-60"))));
        CHECK(rpade::test::close(frame.derivative, p.derivative()(E), Real(Q("1e-60"))));
        CHECK(frame.value == hankel_determinant(std::span<const Real>(series.f), 4, d));
      }
    }
  }

  TEST_CASE("derivative agrees with a central difference") {
    PrecisionScope scope(320);
    const auto m = PotentialModel::bounded(Rational(1), Rational(1, 2));
    const Real E(Q("9.5")), h = Real::pow2(-40);
    const unsigned M = series_order_for(5, 1);
    const auto mid = hankel_value(compute_series(m, 0, E, M, 320), 5, 1);
    const auto up = hankel_value(compute_series(m, 0, E + h, M, 320), 5, 1);
    const auto down = hankel_value(compute_series(m, 0, E - h, M, 320), 5, 1);
    const Real fd = (up.value - down.value) / (Real(2) * h);
    CHECK(abs(fd - mid.derivative) <= Real(Q("1e-15")) * abs(mid.derivative));
  }

  TEST_CASE("shape errors") {
    CHECK(hankel_max_index(3, 1) == 6);
    CHECK_NOTHROW(check_hankel_shape(7, 3, 1));
    CHECK_THROWS_AS(check_hankel_shape(6, 3, 1), SeriesLengthError);
    CHECK_THROWS_AS(check_hankel_shape(10, 0, 0), InvalidArgument);
    const auto m = PotentialModel::bounded(Rational(1), Rational(1));
    const auto short_series = compute_series(m, 0, Real(2), 4, 128);
    CHECK_THROWS_AS(hankel_value(short_series, 3, 0), SeriesLengthError);
  }

  TEST_CASE("root of a large harmonic determinant") {
    const auto h = PotentialModel::harmonic(Rational(1));
    const auto f = compute_series_rational(h, 0, Rational(5), series_order_for(8, 0));
    CHECK(hankel_determinant(std::span<const Rational>(f), 8, 0) == 0);
  }

  TEST_CASE("isolated roots of the 2x2 determinant") {
    const auto m = PotentialModel::bounded(Rational(1), Rational(1));
    const auto roots = poly_real_roots(exact_hankel(m, 0, 2, 0), Rational(2), Rational(3));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].midpoint() > Q("2.78"));
    CHECK(roots[0].midpoint() < Q("2.79"));
  }
}
