#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>
#include <random>

#include "foliacoh/errors.hpp"
#include "foliacoh/pendulum.hpp"

using namespace foliacoh;
using namespace foliacoh::pendulum;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent root of u - 3/u = 2e: quadratic formula, u = e + sqrt(e² + 3).
double u_closed(double e) { return e + std::sqrt(e * e + 3); }

// Golden-section minimum of V_i on (0, π).
double min_potential_oracle(double i) {
  double a = 1e-6, b = kPi - 1e-6;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int k = 0; k < 300; ++k) {
    const double c = b - g * (b - a), d = a + g * (b - a);
    if (effective_potential(i, c) < effective_potential(i, d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return effective_potential(i, 0.5 * (a + b));
}

}  // namespace

TEST_CASE("energy and moment") {
  CHECK(energy(PendulumState({0, 0, -1}, {0, 0, 0})) == -1);
  CHECK(energy(PendulumState({0, 0, 1}, {0, 0, 0})) == 1);
  CHECK(energy(PendulumState({1, 0, 0}, {0, 1, 0})) == 0.5);
  CHECK(moment(PendulumState({1, 0, 0}, {0, 1, 0})) == 1);
  CHECK(moment(PendulumState({0, 1, 0}, {0, 0, 0})) == 0);
  CHECK_THROWS_AS(PendulumState({1, 1, 0}, {0, 0, 0}), InputError);
  CHECK_THROWS_AS(PendulumState({1, 0, 0}, {1, 0, 0}), InputError);
}

TEST_CASE("polar and Cartesian evaluations agree") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> phi(0.01, kPi - 0.01), theta(0, 2 * kPi), rate(-3, 3);
  for (int k = 0; k < 2000; ++k) {
    const PolarState p{phi(rng), theta(rng), rate(rng), rate(rng)};
    const auto s = p.to_cartesian();
    CHECK(std::abs(energy(s) - energy(p)) < 1e-12);
    CHECK(std::abs(moment(s) - moment(p)) < 1e-12);
  }
  CHECK_THROWS_AS((PolarState{0, 0, 0, 0}.to_cartesian()), InputError);
}

TEST_CASE("effective potential values") {
  CHECK(std::abs(effective_potential(0, kPi / 2)) < 1e-15);
  CHECK(std::abs(effective_potential(0, kPi / 3) - 0.5) < 1e-15);
  CHECK(std::abs(effective_potential(1, kPi / 2) - 0.5) < 1e-15);
  CHECK_THROWS_AS(effective_potential(1, 0), InputError);
  CHECK_THROWS_AS(effective_potential(1, kPi), InputError);
  const EffectivePotentialProfile v(0.7);
  CHECK(v(1e-4) > 1e6);
  CHECK(v(kPi - 1e-4) > 1e6);
  CHECK(std::abs(v.minimum().second - min_potential_oracle(0.7)) < 1e-9);
  CHECK(v.samples(0.5, 1.5, 11).size() == 11);
}

TEST_CASE("bifurcation curve") {
  CHECK(bifurcation_curve(1) == std::pair<double, double>{-1, 0});
  CHECK(bifurcation_curve(-1) == std::pair<double, double>{-1, 0});
  const auto [e, i] = bifurcation_curve(std::sqrt(3.0));
  CHECK(std::abs(e - 1) < 1e-14);
  CHECK(std::abs(i - 8 * std::sqrt(3.0) / 9) < 1e-14);
  CHECK_THROWS_AS(bifurcation_curve(0.5), InputError);
}

TEST_CASE("critical circles") {
  const auto half = critical_circles(0.5);
  REQUIRE(half.size() == 2);
  const double r13 = std::sqrt(13.0);
  CHECK(std::abs(half[0].phi0 - std::acos((1 - r13) / 6)) < 1e-10);
  CHECK(std::abs(half[0].theta_dot - std::sqrt((r13 + 1) / 2)) < 1e-10);
  CHECK(std::abs(half[1].theta_dot + std::sqrt((r13 + 1) / 2)) < 1e-10);
  CHECK(half[0].kind == CircleKind::Maximal);
  CHECK(half[1].kind == CircleKind::Minimal);
  CHECK(std::abs(half[0].phi0 - 2.0200113) < 1e-6);
  CHECK(std::abs(half[0].theta_dot - 1.5174899) < 1e-6);

  const auto low = critical_circles(-1 + 1e-6);
  REQUIRE(low.size() == 2);
  CHECK(kPi - low[0].phi0 < 1e-2);
  CHECK(std::abs(std::abs(low[0].theta_dot) - 1) < 1e-5);

  for (const auto& c : critical_circles(2)) {
    const double u = c.theta_dot * c.theta_dot;
    CHECK(std::abs(u - 3 / u - 4) < 1e-10);
    CHECK(std::abs(std::cos(c.phi0) + 1 / u) < 1e-10);
  }
  CHECK(critical_circles(-1).empty());
  CHECK(critical_circles(-3).empty());

  for (double e : {-0.9, -0.5, 0.0, 0.5, 2.0, 5.0, 100.0}) {
    CHECK(std::abs(solve_u(e) - u_closed(e)) < 1e-10 * u_closed(e));
    for (const auto& c : critical_circles(e)) {
      const auto [ce, ci] = bifurcation_curve(c.theta_dot);
      CHECK(std::abs(ce - e) < 1e-10);
      CHECK(std::abs(ci - c.i) < 1e-10);
      // Relative equilibrium: V_i'(φ₀) = 0 and V_i(φ₀) = e.
      const EffectivePotentialProfile v(c.i);
      CHECK(std::abs(v.derivative(c.phi0)) < 1e-9);
      CHECK(std::abs(v(c.phi0) - e) < 1e-9);
    }
  }
}

TEST_CASE("fiber classification") {
  const auto f = fiber_components(0.5, 0);
  CHECK(f.count == 1);
  CHECK(f.kind == FiberKind::Torus);
  CHECK_FALSE(f.critical);

  const double alpha = 1.7;
  const auto [e, i] = bifurcation_curve(alpha);
  const auto c = fiber_components(e, i);
  CHECK(c.count == 1);
  CHECK(c.kind == FiberKind::Circle);
  CHECK(c.critical);

  const double top = i_max(0.5);
  CHECK(std::abs(min_potential_oracle(top) - 0.5) < 1e-8);
  const auto out = fiber_components(0.5, top * 1.1);
  CHECK(out.count == 0);
  CHECK_FALSE(out.diagnostic.empty());

  for (double e2 : {-0.5, 0.5, 2.0}) {
    for (double i2 : {0.1, 0.4, 0.9}) {
      const auto a = fiber_components(e2, i2), b = fiber_components(e2, -i2);
      CHECK(a.count == b.count);
      CHECK(a.kind == b.kind);
    }
  }
}

TEST_CASE("molecules") {
  for (double e : {0.5, 2.0, -1 + 1e-6, -0.3, 4.0}) {
    const auto mol = build_molecule(e);
    CHECK(mol.atoms.size() == critical_circles(e).size());
    CHECK(mol.atoms.size() == 2);
    REQUIRE(mol.edges.size() == 1);
    CHECK(mol.factor_set() == "segment");
    for (const auto& a : mol.atoms) CHECK(label(a.type) == "A");
  }
  CHECK(build_molecule(0.5).edges[0].r.to_string() == "0");
  CHECK(build_molecule(2).edges[0].r.to_string() == "1/2");
  CHECK(build_molecule(2).gluing == std::array<int, 4>{1, 2, 1, 1});
  CHECK_FALSE(build_molecule(0.5).gluing);
  CHECK_THROWS_AS(build_molecule(1), InputError);
  CHECK_THROWS_AS(build_molecule(-1), InputError);
  CHECK_THROWS_AS(build_molecule(-2), InputError);

  const auto dot = molecule_dot(build_molecule(0.5));
  CHECK(dot.find("label=\"r=0\"") != std::string::npos);
  CHECK(dot.find("label=\"A\"") != std::string::npos);
}

TEST_CASE("H0 of the partition") {
  MoleculeGraph segment;
  segment.atoms = {Atom{}, Atom{}};
  segment.edges = {MoleculeEdge{0, 1, {}}};
  CHECK(h0_partition(segment, 5) == 7);
  for (std::size_t n = 0; n < 6; ++n) CHECK(h0_partition(segment, n + 1) - h0_partition(segment, n) == 1);

  MoleculeGraph vertex;
  vertex.atoms = {Atom{}};
  CHECK(h0_partition(vertex, 4) == 1);
  CHECK(vertex.factor_set() == "point");

  MoleculeGraph vee;
  vee.atoms = {Atom{}, Atom{}, Atom{}};
  vee.edges = {MoleculeEdge{0, 1, {}}, MoleculeEdge{1, 2, {}}};
  CHECK(h0_partition(vee, 1) == 5);
  for (std::size_t n = 0; n < 4; ++n) CHECK(h0_partition(vee, n + 1) - h0_partition(vee, n) == 2);
}

TEST_CASE("vertical cohomology of the regular part") {
  MoleculeGraph one;
  one.atoms = {Atom{}, Atom{}};
  one.edges = {MoleculeEdge{0, 1, {}}};
  CHECK(regular_part_vertical_cohomology(one, 4) == std::vector<std::vector<std::size_t>>{{4, 8, 4}});
  CHECK(regular_part_vertical_cohomology(MoleculeGraph{}, 4).empty());
  MoleculeGraph two = one;
  two.atoms.push_back(Atom{});
  two.edges.push_back(MoleculeEdge{1, 2, {}});
  CHECK(regular_part_vertical_cohomology(two, 3) == std::vector<std::vector<std::size_t>>{{3, 6, 3}, {3, 6, 3}});
}

TEST_CASE("emitters") {
  const auto csv = bifurcation_csv(parse_alpha_range("1:3:100"));
  CHECK(csv.rfind("alpha,E,I\n1,-1,0\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
  CHECK_THROWS_AS(parse_alpha_range("1:3"), InputError);
  CHECK_THROWS_AS(parse_alpha_range("1:3:0"), InputError);
  CHECK_THROWS_AS(parse_alpha_range("a:3:4"), InputError);
  CHECK_THROWS_AS(bifurcation_csv(parse_alpha_range("0:3:4")), InputError);

  const auto j = nlohmann::json::parse(critical_json(0.5));
  CHECK(j["circles"].size() == 2);
  CHECK(std::abs(j["circles"][0]["phi0"].get<double>() - 2.02001132315) < 1e-11);
  CHECK(format12(2.0 / 3) == "0.666666666667");
}

TEST_CASE("discrepancy table") {
  const auto t = discrepancy_table({-0.9, -0.5, 0, 0.5, 2, 5});
  CHECK(t.agrees_at_half());
  REQUIRE(t.rows.size() == 6);
  // α = ½ in the general formula gives cos φ₀ = -1 and θ̇ = 1.
  const auto& half = t.rows[3];
  REQUIRE(half.formula_phi0);
  CHECK(std::abs(*half.formula_phi0 - kPi) < 1e-12);
  CHECK(std::abs(half.formula_theta_dot - 1) < 1e-12);
  CHECK(*half.phi0_error > 1);
  CHECK_FALSE(t.rows[2].formula_phi0);
  CHECK(t.to_csv().find("undefined") != std::string::npos);
}
