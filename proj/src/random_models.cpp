#include "foliacoh/random_models.hpp"

#include <algorithm>

namespace foliacoh::random_models {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Simplex random_simplex(std::mt19937_64& rng, std::size_t vertices, std::size_t dim) {
  std::vector<std::size_t> all(vertices);
  for (std::size_t v = 0; v < vertices; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  Simplex s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(dim + 1, vertices)));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

SimplicialComplex random_fiber(std::mt19937_64& rng, std::size_t max_simplices) {
  const std::size_t n = pick(rng, 1, std::min<std::size_t>(6, std::max<std::size_t>(1, max_simplices)));
  std::vector<Simplex> gens;
  SimplicialComplex current = SimplicialComplex::from_maximal(n, {});
  const std::size_t attempts = pick(rng, 0, 8);
  for (std::size_t a = 0; a < attempts; ++a) {
    auto trial = gens;
    trial.push_back(random_simplex(rng, n, pick(rng, 1, 2)));
    auto candidate = SimplicialComplex::from_maximal(n, trial);
    if (candidate.total_simplices() <= max_simplices) {
      gens = std::move(trial);
      current = std::move(candidate);
    }
  }
  return current;
}

ProductFoliationModel random_product_model(std::mt19937_64& rng, std::size_t max_base,
                                           std::size_t max_simplices) {
  const std::size_t base = pick(rng, 1, std::max<std::size_t>(1, max_base));
  return make_product_model(base, random_fiber(rng, max_simplices));
}

std::vector<std::vector<std::size_t>> random_base_cover(std::mt19937_64& rng, std::size_t base_points,
                                                        std::size_t max_charts) {
  const std::size_t charts = pick(rng, 1, std::max<std::size_t>(1, max_charts));
  std::vector<std::vector<bool>> member(charts, std::vector<bool>(base_points, false));
  for (std::size_t x = 0; x < base_points; ++x) {
    member[pick(rng, 0, charts - 1)][x] = true;
    for (std::size_t c = 0; c < charts; ++c) {
      if (pick(rng, 0, 2) == 0) member[c][x] = true;
    }
  }
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t c = 0; c < charts; ++c) {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < base_points; ++x) {
      if (member[c][x]) s.push_back(x);
    }
    if (s.empty()) s.push_back(pick(rng, 0, base_points - 1));
    subsets.push_back(std::move(s));
  }
  return subsets;
}

LeafToLeafMap random_leaf_map(std::mt19937_64& rng) {
  const ProductFoliationModel target = random_product_model(rng);
  const std::size_t base = pick(rng, 1, 6);
  std::vector<std::size_t> base_map(base);
  for (auto& b : base_map) b = pick(rng, 0, target.base_points() - 1);

  const SimplicialComplex& tf = target.fiber();
  if (pick(rng, 0, 1) == 0) {
    // Subcomplex spanned by a random subset of the target's top simplices.
    std::vector<Simplex> gens;
    for (int q = tf.dimension(); q >= 0; --q) {
      for (const auto& s : tf.simplices(q)) {
        if (pick(rng, 0, 1) == 0) gens.push_back(s);
      }
    }
    std::vector<std::size_t> fiber_map(tf.vertex_count());
    for (std::size_t v = 0; v < fiber_map.size(); ++v) fiber_map[v] = v;
    ProductFoliationModel source = make_product_model(base, SimplicialComplex::from_maximal(tf.vertex_count(), gens));
    return LeafToLeafMap(source, target, std::move(base_map), std::move(fiber_map));
  }
  // Collapse a random fiber onto a face of the target.
  const int top = tf.dimension();
  const Simplex& face = tf.simplex(top, pick(rng, 0, tf.count(top) - 1));
  ProductFoliationModel source = make_product_model(base, random_fiber(rng));
  std::vector<std::size_t> fiber_map(source.fiber().vertex_count());
  for (auto& v : fiber_map) v = face[pick(rng, 0, face.size() - 1)];
  return LeafToLeafMap(source, target, std::move(base_map), std::move(fiber_map));
}

LeafToLeafMap random_leaf_map(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_leaf_map(rng);
}

}  // namespace foliacoh::random_models
