#include <doctest.h>

#include <random>

#include "foliacoh/errors.hpp"
#include "foliacoh/foliation_models.hpp"
#include "foliacoh/random_models.hpp"

using namespace foliacoh;

TEST_CASE("product models count leaves") {
  CHECK(make_product_model(1, complexes::point()).leaf_count() == 1);
  CHECK(make_product_model(3, complexes::cycle(3)).leaf_count() == 3);
  CHECK(make_product_model(2, complexes::disjoint_points(2)).leaf_count() == 4);
  CHECK_THROWS_AS(make_product_model(0, complexes::point()), InputError);
  CHECK_THROWS_AS(make_product_model(2, SimplicialComplex()), InputError);
}

TEST_CASE("form indices are base-major") {
  const auto m = make_product_model(3, complexes::cycle(4));
  CHECK(m.form_dim(1) == 12);
  CHECK(m.form_index(2, 1, 3) == 11);
}

TEST_CASE("leaf maps validate ranges and simpliciality") {
  const auto circle = make_product_model(2, complexes::cycle(3));
  CHECK_NOTHROW(LeafToLeafMap(circle, circle, {1, 0}, {1, 2, 0}));
  CHECK_THROWS_AS(LeafToLeafMap(circle, circle, {2, 0}, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(LeafToLeafMap(circle, circle, {0}, {0, 1, 2}), InputError);
  const auto path = make_product_model(1, complexes::path(3));
  // {0,2} is not an edge of the path.
  CHECK_THROWS_AS(LeafToLeafMap(circle, path, {0, 0}, {0, 1, 2}), InputError);
  CHECK_NOTHROW(LeafToLeafMap(circle, path, {0, 0}, {0, 1, 1}));
}

TEST_CASE("composition applies the right map last") {
  const auto circle = make_product_model(3, complexes::cycle(3));
  const LeafToLeafMap r(circle, circle, {1, 2, 0}, {1, 2, 0});
  const auto r3 = compose(r, compose(r, r));
  CHECK(same_map(r3, LeafToLeafMap::identity(circle)));
  CHECK(r.is_injective());
}

TEST_CASE("product covers enumerate the nerve") {
  const auto c = make_product_cover(3, {{0, 1}, {1, 2}});
  CHECK(c.tuples(0).size() == 2);
  REQUIRE(c.max_degree() == 1);
  CHECK(c.tuples(1).size() == 1);
  CHECK(c.intersection.at({0, 1}) == std::vector<std::size_t>{1});

  const auto single = make_product_cover(3, {{0, 1, 2}});
  CHECK(single.max_degree() == 0);

  const auto disjoint = make_product_cover(2, {{0}, {1}});
  CHECK(disjoint.max_degree() == 0);
  CHECK(disjoint.tuples(0).size() == 2);

  CHECK_THROWS_AS(make_product_cover(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(make_product_cover(3, {{0, 1, 2}, {5}}), InputError);
}

TEST_CASE("partitions of unity") {
  const auto c = make_product_cover(4, {{0, 1, 2}, {1, 2, 3}, {2}});
  const auto low = lowest_chart_partition(c, 4);
  CHECK_NOTHROW(validate_partition(c, 4, low));
  CHECK(low.weights[0][2] == 1);
  std::mt19937_64 rng(3);
  const auto rnd = random_partition(c, 4, rng);
  CHECK_NOTHROW(validate_partition(c, 4, rnd));
  PartitionOfUnity bad = low;
  bad.weights[1][0] = make_rational(1, 2);
  CHECK_THROWS_AS(validate_partition(c, 4, bad), InputError);
}

TEST_CASE("cover models from base subsets") {
  const auto m = make_product_model(3, complexes::disjoint_points(2));
  const auto models = cover_from_base_subsets(m, {{0, 1}, {1, 2}});
  CHECK(models.leaves.tuples().size() == 3);
  CHECK(global_leaf_classes(models.leaves) == m.leaf_count());
}

TEST_CASE("hand-written cover models") {
  const FoliatedCoverModel one({"u"}, {CoverTuple{{0}, {"a", "b"}, {}}});
  CHECK(global_leaf_classes(one) == 2);

  const FoliatedCoverModel apart({"u", "v"}, {CoverTuple{{0}, {"a"}, {}}, CoverTuple{{1}, {"b"}, {}}});
  CHECK(global_leaf_classes(apart) == 2);

  // Two arcs, each with two leaves, glued along two intersection components.
  const FoliatedCoverModel circles({"u", "v"}, {CoverTuple{{0}, {"a0", "b0"}, {}},
                                                CoverTuple{{1}, {"a1", "b1"}, {}},
                                                CoverTuple{{0, 1}, {"c", "d"}, {{0, 1}, {0, 1}}}});
  CHECK(global_leaf_classes(circles) == 2);
  CHECK(circles.max_degree() == 1);

  // Missing subtuple {1}.
  CHECK_THROWS_AS(FoliatedCoverModel({"u", "v"}, {CoverTuple{{0}, {"a"}, {}},
                                                  CoverTuple{{0, 1}, {"c"}, {{0}, {0}}}}),
                  InputError);
  // Duplicate leaf names.
  CHECK_THROWS_AS(FoliatedCoverModel({"u"}, {CoverTuple{{0}, {"a", "a"}, {}}}), InputError);
}

TEST_CASE("simplicial identities of restrictions are enforced") {
  auto tuples = std::vector<CoverTuple>{
      CoverTuple{{0}, {"p", "q"}, {}},          CoverTuple{{1}, {"r"}, {}},
      CoverTuple{{2}, {"s"}, {}},               CoverTuple{{0, 1}, {"x"}, {{0}, {0}}},
      CoverTuple{{0, 2}, {"y"}, {{0}, {0}}},    CoverTuple{{1, 2}, {"z"}, {{0}, {0}}},
      CoverTuple{{0, 1, 2}, {"t"}, {{0}, {0}, {0}}}};
  CHECK_NOTHROW(FoliatedCoverModel({"a", "b", "c"}, tuples));
  // Make (0,2) land on q while (0,1) lands on p: the triple tuple is inconsistent.
  tuples[4].restrictions[1] = {1};
  CHECK_THROWS_AS(FoliatedCoverModel({"a", "b", "c"}, tuples), InputError);
}

TEST_CASE("random generators respect their bounds") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto m = random_models::random_product_model(rng);
    CHECK(m.base_points() >= 1);
    CHECK(m.base_points() <= 6);
    CHECK(m.fiber().total_simplices() <= 20);
    const auto cover = random_models::random_base_cover(rng, m.base_points());
    CHECK_NOTHROW(make_product_cover(m.base_points(), cover));
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK_NOTHROW(random_models::random_leaf_map(seed));
    CHECK(same_map(random_models::random_leaf_map(seed), random_models::random_leaf_map(seed)));
  }
}
