#include "foliacoh/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "foliacoh/errors.hpp"

namespace foliacoh {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw InputError(std::string("missing field \"") + name + "\"");
  }
  return obj.at(name);
}

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> as_index_list(const json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(as_index(x, what));
  return out;
}

std::vector<std::string> as_name_list(const json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

ProductFoliationModel product_from_json(const json& doc) {
  const std::size_t base = as_index(field(doc, "base_points"), "base_points");
  const json& fiber = field(doc, "fiber");
  const std::size_t vertices = as_index(field(fiber, "vertices"), "fiber.vertices");
  const json& simplices = field(fiber, "simplices");
  if (!simplices.is_array()) throw InputError("fiber.simplices must be an array");
  std::vector<Simplex> generators;
  for (const auto& s : simplices) generators.push_back(as_index_list(s, "fiber.simplices"));
  return ProductFoliationModel(base, SimplicialComplex::from_maximal(vertices, std::move(generators)));
}

json product_to_json(const ProductFoliationModel& m) {
  json simplices = json::array();
  const auto& k = m.fiber();
  for (int q = 1; q <= k.dimension(); ++q) {
    for (const auto& s : k.simplices(q)) simplices.push_back(s);
  }
  return json{{"base_points", m.base_points()},
              {"fiber", {{"vertices", k.vertex_count()}, {"simplices", simplices}}}};
}

}  // namespace

FoliatedCoverModel load_cover_model(std::string_view text) {
  const json doc = parse(text);
  std::vector<std::string> charts = as_name_list(field(doc, "charts"), "charts");
  const json& tuples_json = field(doc, "tuples");
  if (!tuples_json.is_array()) throw InputError("tuples must be an array");

  // Resolve image names after all leaf lists are known.
  std::map<std::vector<std::size_t>, std::size_t> position;
  std::vector<CoverTuple> tuples;
  for (const auto& t : tuples_json) {
    CoverTuple tuple;
    tuple.indices = as_index_list(field(t, "indices"), "indices");
    tuple.leaves = as_name_list(field(t, "leaves"), "leaves");
    position[tuple.indices] = tuples.size();
    tuples.push_back(std::move(tuple));
  }
  std::size_t k = 0;
  for (const auto& t : tuples_json) {
    CoverTuple& tuple = tuples[k++];
    const std::size_t faces = tuple.indices.size() > 1 ? tuple.indices.size() : 0;
    const json empty = json::object();
    const json& restr = t.contains("restrictions") ? t.at("restrictions") : empty;
    if (!restr.is_object()) throw InputError("restrictions must be an object");
    if (restr.size() != faces) {
      throw InputError("tuple needs one restriction per face, got " + std::to_string(restr.size()));
    }
    for (std::size_t i = 0; i < faces; ++i) {
      const std::string key = std::to_string(i);
      if (!restr.contains(key)) throw InputError("missing restriction for face " + key);
      std::vector<std::size_t> face_indices;
      for (std::size_t j = 0; j < tuple.indices.size(); ++j) {
        if (j != i) face_indices.push_back(tuple.indices[j]);
      }
      auto it = position.find(face_indices);
      if (it == position.end()) {
        throw InputError("subtuple missing for face " + key + " of a listed tuple");
      }
      const auto& target_leaves = tuples[it->second].leaves;
      std::vector<std::size_t> image;
      for (const auto& name : as_name_list(restr.at(key), "restriction images")) {
        auto found = std::find(target_leaves.begin(), target_leaves.end(), name);
        if (found == target_leaves.end()) {
          throw InputError("restriction image \"" + name + "\" is not a leaf of the face tuple");
        }
        image.push_back(static_cast<std::size_t>(found - target_leaves.begin()));
      }
      tuple.restrictions.push_back(std::move(image));
    }
  }
  return FoliatedCoverModel(std::move(charts), std::move(tuples));
}

ProductModelDocument load_product_model(std::string_view text) {
  const json doc = parse(text);
  ProductModelDocument out{product_from_json(doc), std::nullopt};
  if (doc.contains("cover")) {
    const json& cover = doc.at("cover");
    if (!cover.is_array()) throw InputError("cover must be an array of base-point lists");
    std::vector<std::vector<std::size_t>> subsets;
    for (const auto& s : cover) subsets.push_back(as_index_list(s, "cover"));
    out.cover = std::move(subsets);
  }
  return out;
}

LeafToLeafMap load_leaf_map(std::string_view text) {
  const json doc = parse(text);
  return LeafToLeafMap(product_from_json(field(doc, "source")),
                       product_from_json(field(doc, "target")),
                       as_index_list(field(doc, "base_map"), "base_map"),
                       as_index_list(field(doc, "fiber_map"), "fiber_map"));
}

bool is_cover_model_document(std::string_view text) {
  const json doc = parse(text);
  return doc.is_object() && doc.contains("charts");
}

std::vector<std::vector<std::size_t>> parse_cover_spec(std::string_view text) {
  std::vector<std::vector<std::size_t>> out;
  std::string chart;
  std::istringstream charts{std::string(text)};
  while (std::getline(charts, chart, ';')) {
    std::vector<std::size_t> subset;
    std::string item;
    std::istringstream items(chart);
    while (std::getline(items, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      const auto last = item.find_last_not_of(" \t");
      if (first == std::string::npos) throw InputError("--cover: empty base point in chart " + std::to_string(out.size()));
      item = item.substr(first, last - first + 1);
      if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
        throw InputError("--cover: bad base point '" + item + "'");
      }
      subset.push_back(static_cast<std::size_t>(std::stoul(item)));
    }
    if (subset.empty()) throw InputError("--cover: empty chart " + std::to_string(out.size()));
    out.push_back(std::move(subset));
  }
  if (out.empty()) throw InputError("--cover is empty");
  return out;
}

std::string dump_product_model(const ProductFoliationModel& m) { return product_to_json(m).dump(); }

std::string dump_leaf_map(const LeafToLeafMap& h) {
  return json{{"source", product_to_json(h.source())},
              {"target", product_to_json(h.target())},
              {"base_map", h.base_map()},
              {"fiber_map", h.fiber_map()}}
      .dump();
}

}  // namespace foliacoh
