#ifndef FOLIACOH_RANDOM_MODELS_HPP
#define FOLIACOH_RANDOM_MODELS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "foliacoh/foliation_models.hpp"
#include "foliacoh/simplicial.hpp"

namespace foliacoh::random_models {

/// Closure of random generators of dimension <= 2 on at most 6 vertices,
/// total simplex count <= max_simplices.
SimplicialComplex random_fiber(std::mt19937_64& rng, std::size_t max_simplices = 20);

ProductFoliationModel random_product_model(std::mt19937_64& rng, std::size_t max_base = 6,
                                           std::size_t max_simplices = 20);

/// 1..max_charts nonempty subsets covering every base point.
std::vector<std::vector<std::size_t>> random_base_cover(std::mt19937_64& rng, std::size_t base_points,
                                                        std::size_t max_charts = 4);

/// Random base map; fiber map is either the inclusion of the source fiber as
/// a subcomplex of the target or a collapse onto a face of the target.
LeafToLeafMap random_leaf_map(std::mt19937_64& rng);
LeafToLeafMap random_leaf_map(std::uint64_t seed);

}  // namespace foliacoh::random_models

#endif  // FOLIACOH_RANDOM_MODELS_HPP
