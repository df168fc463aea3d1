#ifndef FOLIACOH_MODEL_IO_HPP
#define FOLIACOH_MODEL_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foliacoh/foliation_models.hpp"

namespace foliacoh {

// JSON documents accepted by the loaders. All throw InputError on malformed
// input, naming the offending field.
//
// Cover model:
//   { "charts": [names],
//     "tuples": [ { "indices": [sorted ints], "leaves": [names],
//                   "restrictions": { "<face index>": [image names] } } ] }
//
// Product model:
//   { "base_points": n,
//     "fiber": { "vertices": k, "simplices": [[v, ...], ...] },
//     "cover": [[base points], ...] }            ("cover" optional)
//
// Leaf-to-leaf map:
//   { "source": <product model>, "target": <product model>,
//     "base_map": [ints], "fiber_map": [ints] }

FoliatedCoverModel load_cover_model(std::string_view text);

struct ProductModelDocument {
  ProductFoliationModel model;
  std::optional<std::vector<std::vector<std::size_t>>> cover;
};

ProductModelDocument load_product_model(std::string_view text);
LeafToLeafMap load_leaf_map(std::string_view text);

/// True when the document looks like a cover model (has "charts").
bool is_cover_model_document(std::string_view text);

/// "0,1;1,2" -> {{0,1},{1,2}}.
std::vector<std::vector<std::size_t>> parse_cover_spec(std::string_view text);

std::string dump_product_model(const ProductFoliationModel& m);
std::string dump_leaf_map(const LeafToLeafMap& h);

}  // namespace foliacoh

#endif  // FOLIACOH_MODEL_IO_HPP
