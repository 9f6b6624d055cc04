#include <doctest.h>

#include "helpers.hpp"
#include "rpade/errors.hpp"
#include "rpade/model.hpp"

using namespace rpade;
using rpade::test::Q;

TEST_SUITE("model") {
  TEST_CASE("bounded oscillator coefficients") {
    const auto m = PotentialModel::bounded(Rational(1), Rational(1));
    CHECK(m.coeff_exact(0) == 0);
    CHECK(m.coeff_exact(1) == 1);
    CHECK(m.coeff_exact(3) == 3);
    const auto m2 = PotentialModel::bounded(Rational(1), Rational(2));
    CHECK(m2.coeff_exact(2) == Rational(1, 2));
  }

  TEST_CASE("V_j R^(2(j-1)) equals j a^2") {
    const Rational a(3), R(7, 5);
    const auto m = PotentialModel::bounded(a, R);
    Rational r2j(1);
    for (unsigned j = 1; j <= 12; ++j) {
      CHECK(m.coeff_exact(j) * r2j == Rational(j) * a * a);
      r2j *= R * R;
    }
  }

  TEST_CASE("harmonic coefficients and the wide-box limit") {
    const auto h = PotentialModel::harmonic(Rational(1));
    CHECK(h.coeff_exact(1) == 1);
    CHECK(h.coeff_exact(2) == 0);
    CHECK(h.coeff_exact(0) == 0);
    // V_1 does not depend on R; V_j -> 0 for j >= 2 as R grows.
    const auto wide = PotentialModel::bounded(Rational(1), Rational(10000));
    CHECK(wide.coeff_exact(1) == h.coeff_exact(1));
    CHECK(abs(Real(wide.coeff_exact(2))) < Real(Q("1e-7")));
  }

  TEST_CASE("inverted oscillator alternates sign") {
    const auto b = PotentialModel::bounded(Rational(2), Rational(3));
    const auto v = PotentialModel::inverted(Rational(2), Rational(3));
    CHECK(v.coeff_exact(0) == 0);
    for (unsigned j = 1; j <= 8; ++j) {
      const Rational sign = (j % 2 == 1) ? 1 : -1;
      CHECK(v.coeff_exact(j) == sign * b.coeff_exact(j));
    }
  }

  TEST_CASE("custom coefficients past the list are zero") {
    const auto c = PotentialModel::custom({{1, Scalar(Rational(1))}, {2, Scalar(Rational(1, 10))}});
    CHECK(c.coeff_exact(2) == Rational(1, 10));
    CHECK(c.coeff_exact(5) == 0);
    CHECK_FALSE(c.has_walls());
  }

  TEST_CASE("partial sums converge to the closed form inside the box") {
    PrecisionScope scope(256);
    const auto m = PotentialModel::bounded(Rational(1), Rational(1));
    const Real x(Q("0.5"));
    const Real exact = m.evaluate(x);
    Real sum(0), x2j(1);
    for (unsigned j = 0; j <= 200; ++j) {
      sum += m.coeff_real(j) * x2j;
      x2j *= x * x;
    }
    CHECK(abs(sum - exact) < Real(Q("1e-50")));
    CHECK(abs(exact - Real(Q("0.25")) / Real(Q("0.5625"))) < Real(Q("1e-70")));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PotentialModel::bounded(Rational(0), Rational(1)), InvalidArgument);
    CHECK_THROWS_AS(PotentialModel::bounded(Rational(1), Rational(-1)), InvalidArgument);
    CHECK_THROWS_AS(PotentialModel::harmonic(Rational(-2)), InvalidArgument);
    CHECK_THROWS_AS(PotentialModel::bounded(Real(1), Real(1)).coeff_exact(1), UnsupportedMode);
  }

  TEST_CASE("non-exact parameters give working-precision coefficients") {
    PrecisionScope scope(128);
    const auto m = PotentialModel::bounded(Real(2), sqrt(Real(2)));
    CHECK_FALSE(m.is_exact());
    CHECK(abs(m.coeff_real(2) - Real(4)) < Real(Q("1e-35")));
  }

  TEST_CASE("scale reduction") {
    const auto r1 = scale_reduce(Scalar(Rational(1)), Scalar(Rational(5)));
    CHECK(r1.canonical_a.exact() == 1);
    CHECK(r1.canonical_R.exact() == 5);
    CHECK(r1.energy_factor.exact() == 1);

    const auto r4 = scale_reduce(Scalar(Rational(4)), Scalar(Rational(1)));
    CHECK(r4.canonical_R.exact() == 2);
    CHECK(r4.energy_factor.exact() == 4);

    const auto r9 = scale_reduce(Scalar(Rational(9, 4)), Scalar(Rational(2)));
    CHECK(r9.canonical_R.exact() == 3);

    PrecisionScope scope(128);
    const auto r2 = scale_reduce(Scalar(Rational(2)), Scalar(Rational(3)));
    CHECK_FALSE(r2.canonical_R.is_exact());
    CHECK(abs(r2.canonical_R.to_real() - Real(3) * sqrt(Real(2))) < Real(Q("1e-35")));
    CHECK(r2.energy_factor.exact() == 2);

    // Idempotent.
    const auto again = scale_reduce(r4.canonical_a, r4.canonical_R);
    CHECK(again.canonical_R.exact() == r4.canonical_R.exact());
    CHECK(again.energy_factor.exact() == 1);

    CHECK_THROWS_AS(scale_reduce(Scalar(Rational(0)), Scalar(Rational(1))), InvalidArgument);
    CHECK_THROWS_AS(scale_reduce(Scalar(Rational(1)), Scalar(Rational(-1))), InvalidArgument);
  }

  TEST_CASE("limit seeds") {
    PrecisionScope scope(128);
    const Real pi = Real::pi();
    const auto small = seed_estimates(0, Real(Q("0.1")));
    CHECK(abs(small.box_seed * Real(Q("0.01")) - pi * pi / Real(4)) < Real(Q("1e-30")));
    CHECK(small.preferred == small.box_seed);

    const auto large = seed_estimates(0, Real(100));
    CHECK(large.ho_seed == Real(1));
    CHECK(large.preferred == Real(1));

    CHECK(seed_estimates(2, Real(1000)).ho_seed == Real(5));
    const auto mid = seed_estimates(0, Real(3));
    CHECK(mid.preferred == max(mid.box_seed, mid.ho_seed));
  }

  TEST_CASE("symmetry classes") {
    CHECK(Symmetry::even().s() == 0);
    CHECK(Symmetry::odd().s() == 1);
    CHECK(Symmetry::angular(0).s() == 1);
    CHECK(Symmetry::angular(2).s() == 3);
    CHECK(Symmetry::angular(2).centrifugal() == 6);
    CHECK(Symmetry::odd().centrifugal() == 0);
    CHECK(Symmetry::angular(1).str() == "l=1");
  }
}
