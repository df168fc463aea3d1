#include <doctest.h>

#include <json.hpp>
#include <random>

#include "foliacoh/cech_mv.hpp"
#include "foliacoh/errors.hpp"
#include "foliacoh/random_models.hpp"
#include "foliacoh/vertical_calculus.hpp"
#include "oracles.hpp"

using namespace foliacoh;

namespace {

RationalVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  RationalVector v(n);
  for (auto& x : v) x = make_rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("leaf-constant Cech differential") {
  const FoliatedCoverModel one({"u"}, {CoverTuple{{0}, {"a", "b", "c"}, {}}});
  CHECK(cech_delta(one, 0).is_zero());
  CHECK(cech_row_cohomology(one) == std::vector<std::size_t>{3});

  // Two charts with one leaf each and one intersection leaf.
  const FoliatedCoverModel two({"u", "v"}, {CoverTuple{{0}, {"a"}, {}}, CoverTuple{{1}, {"b"}, {}},
                                            CoverTuple{{0, 1}, {"c"}, {{0}, {0}}}});
  CHECK(cech_delta(two, 0) == RationalMatrix::from_dense({{-1, 1}}));

  // Torus foliated by circles: C^0 = 4, C^1 = 2, δ of rank 2.
  const FoliatedCoverModel circles({"u", "v"}, {CoverTuple{{0}, {"a0", "b0"}, {}},
                                                CoverTuple{{1}, {"a1", "b1"}, {}},
                                                CoverTuple{{0, 1}, {"c", "d"}, {{0, 1}, {0, 1}}}});
  const auto d0 = cech_delta(circles, 0);
  CHECK(d0.rows() == 2);
  CHECK(d0.cols() == 4);
  CHECK(oracle::rank(d0) == 2);
  CHECK(cech_row_cohomology(circles) == std::vector<std::size_t>{2, 0});
}

TEST_CASE("delta squares to zero with a triple intersection") {
  const auto m = make_product_model(4, complexes::cycle(3));
  const auto cover = make_product_cover(4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}});
  REQUIRE(cover.max_degree() == 2);
  for (int q = 0; q <= 1; ++q) CHECK((cech_delta(m, cover, 1, q) * cech_delta(m, cover, 0, q)).is_zero());
  const auto models = cover_from_base_subsets(m, cover.subsets);
  CHECK((cech_delta(models.leaves, 1) * cech_delta(models.leaves, 0)).is_zero());
}

TEST_CASE("double complex shapes") {
  const auto m = make_product_model(3, complexes::point());
  const DoubleComplex dc(m, make_product_cover(3, {{0, 1}, {1, 2}}));
  CHECK(dc.dim(0, 0) == 4);
  CHECK(dc.dim(1, 0) == 1);
  CHECK(dc.dim(0, 1) == 0);

  const auto circle = make_product_model(3, complexes::cycle(3));
  const DoubleComplex single(circle, make_product_cover(3, {{0, 1, 2}}));
  CHECK(single.columns() == 1);
  const auto vertical = vertical_differential(circle).complex;
  CHECK(single.vertical(0, 0) == vertical.differential(0));
}

TEST_CASE("total complex of the circle model") {
  const auto m = make_product_model(3, complexes::cycle(3));
  for (const auto& subsets : std::vector<std::vector<std::vector<std::size_t>>>{
           {{0, 1, 2}}, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}, {0, 2}}}) {
    const DoubleComplex dc(m, make_product_cover(3, subsets));
    auto dims = total_cohomology(dc);
    dims.resize(3, 0);
    CHECK(dims == std::vector<std::size_t>{3, 3, 0});
    const auto report = compare_with_vertical(m, subsets);
    CHECK(report.passed);
    CHECK(report.vertical == std::vector<std::size_t>{3, 3});
    CHECK(report.total == std::vector<std::size_t>{3, 3});
    CHECK_FALSE(report.cech_row_applicable);
  }
}

TEST_CASE("contractible fibers: total and Cech row agree with vertical") {
  const auto m = make_product_model(4, complexes::full_simplex(2));
  const auto report = compare_with_vertical(m, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(report.passed);
  CHECK(report.cech_row_applicable);
  CHECK(report.vertical == std::vector<std::size_t>{4, 0, 0});
  CHECK(report.cech_row == report.vertical);
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("random models satisfy the comparison") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const auto m = random_models::random_product_model(rng);
    const auto report = compare_with_vertical(m, random_models::random_base_cover(rng, m.base_points()));
    CHECK(report.passed);
  }
}

TEST_CASE("collapse inverts delta on cocycles") {
  std::mt19937_64 rng(42);
  const auto m = make_product_model(5, complexes::cycle(3));
  const auto cover = make_product_cover(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 4}});
  const auto pous = std::vector<PartitionOfUnity>{lowest_chart_partition(cover, 5), random_partition(cover, 5, rng)};
  for (const auto& pou : pous) {
    for (std::size_t p = 1; p <= cover.max_degree(); ++p) {
      for (int q = 0; q <= 1; ++q) {
        const auto delta = cech_delta(m, cover, p - 1, q);
        const auto w = delta.apply(random_vector(delta.cols(), rng));
        const auto v = collapse_cocycle(m, cover, pou, p, q, w);
        CHECK(delta.apply(v) == w);
      }
    }
    const RationalVector zero(cech_delta(m, cover, 0, 0).rows());
    CHECK(is_zero(collapse_cocycle(m, cover, pou, 1, 0, zero)));
  }
}

TEST_CASE("collapse on two charts is the glued weighting") {
  // Base {0,1,2}, charts {0,1} and {1,2}, point fiber. w on u01 = {1}.
  const auto m = make_product_model(3, complexes::point());
  const auto cover = make_product_cover(3, {{0, 1}, {1, 2}});
  PartitionOfUnity pou{{{1, make_rational(1, 3), 0}, {0, make_rational(2, 3), 1}}};
  const RationalVector w{6};
  const auto v = collapse_cocycle(m, cover, pou, 1, 0, w);
  // v_0 = -θ_1 w on u0, v_1 = θ_0 w on u1; layout u0:{0,1}, u1:{1,2}.
  CHECK(v == RationalVector{0, -4, 2, 0});
  CHECK(cech_delta(m, cover, 0, 0).apply(v) == w);
}

TEST_CASE("collapse rejects non-cocycles") {
  const auto m = make_product_model(4, complexes::point());
  const auto cover = make_product_cover(4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
  const auto pou = lowest_chart_partition(cover, 4);
  RationalVector w(cech_delta(m, cover, 1, 0).cols());
  w[0] = 1;
  CHECK_THROWS_AS(collapse_cocycle(m, cover, pou, 1, 0, w), InputError);
  CHECK_THROWS_AS(collapse_cocycle(m, cover, pou, 0, 0, RationalVector(12)), InputError);
}
