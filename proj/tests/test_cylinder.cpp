#include <doctest.h>

#include <random>

#include "foliacoh/cylinder.hpp"
#include "foliacoh/errors.hpp"
#include "foliacoh/random_models.hpp"

using namespace foliacoh;

TEST_CASE("polynomial calculus") {
  const Polynomial one = Polynomial::constant(1);
  CHECK(one.antiderivative() == Polynomial::monomial(1, 1));
  CHECK(Polynomial::monomial(1, 2).antiderivative() == Polynomial::monomial(make_rational(1, 3), 3));
  CHECK(Polynomial::monomial(5, 3).derivative() == Polynomial::monomial(15, 2));
  CHECK(Polynomial({0, 0, 0}).is_zero());
  CHECK(Polynomial({1, 2}).evaluate(3) == 7);
  CHECK((Polynomial({1, 2}) - Polynomial({1, 2})).is_zero());
}

TEST_CASE("homotopy operator") {
  const auto m = make_product_model(2, complexes::cycle(3));
  CylinderForm w = CylinderForm::zero(m, 1);
  for (auto& p : w.part_one) p = Polynomial({1, 3});
  CHECK(cylinder_homotopy(w) == CylinderForm::zero(m, 0));

  CylinderForm v = CylinderForm::zero(m, 1);
  v.part_two[0] = Polynomial::constant(1);
  v.part_two[4] = Polynomial::monomial(1, 2);
  const auto kv = cylinder_homotopy(v);
  CHECK(kv.part_one[0] == Polynomial::monomial(1, 1));
  CHECK(kv.part_one[4] == Polynomial::monomial(make_rational(1, 3), 3));
}

TEST_CASE("homotopy identity on hand-picked forms") {
  const auto m = make_product_model(1, complexes::full_simplex(2));
  // t-independent type (I) form: both sides vanish.
  CylinderForm a = CylinderForm::zero(m, 1);
  a.part_one[1] = Polynomial::constant(4);
  CHECK((a - project_section(a)) == CylinderForm::zero(m, 1));
  CHECK(check_homotopy_identity(m, {a}).passed());

  // Coefficient t: left side keeps t, right side reproduces it.
  CylinderForm b = CylinderForm::zero(m, 1);
  b.part_one[2] = Polynomial::monomial(1, 1);
  CHECK((b - project_section(b)).part_one[2] == Polynomial::monomial(1, 1));
  CHECK(check_homotopy_identity(m, {b}).passed());
}

TEST_CASE("homotopy identity on random forms") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_models::random_product_model(rng, 3, 14);
    std::vector<CylinderForm> samples;
    for (int q = 0; q <= m.fiber_dimension() + 1; ++q) samples.push_back(random_cylinder_form(m, q, 3, rng));
    const auto report = check_homotopy_identity(m, samples);
    CHECK_MESSAGE(report.passed(), report.lhs, " vs ", report.rhs);
    CHECK(report.checked == samples.size());
  }
}

TEST_CASE("cylinder differential squares to zero") {
  std::mt19937_64 rng(32);
  const auto m = make_product_model(2, complexes::torus());
  for (int q = 0; q <= 2; ++q) {
    const auto w = random_cylinder_form(m, q, 4, rng);
    const auto dd = cylinder_differential(cylinder_differential(w));
    CHECK(dd == CylinderForm::zero(m, q + 2));
  }
}

TEST_CASE("sign of the homotopy identity in degree one") {
  const auto m = make_product_model(1, complexes::full_simplex(1));
  CylinderForm w = CylinderForm::zero(m, 1);
  w.part_one[0] = Polynomial::monomial(1, 1);
  const auto lhs = w - project_section(w);
  const auto dk_minus_kd = cylinder_differential(cylinder_homotopy(w)) - cylinder_homotopy(cylinder_differential(w));
  CHECK(lhs == dk_minus_kd);
  CHECK_FALSE(lhs == Rational(-1) * dk_minus_kd);
  CHECK_THROWS_AS(check_homotopy_identity(make_product_model(2, complexes::full_simplex(1)), {w}), InputError);
}
