#include "foliacoh/foliation_models.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "foliacoh/errors.hpp"

namespace foliacoh {

namespace {

std::string format_indices(const std::vector<std::size_t>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::vector<std::size_t> drop(const std::vector<std::size_t>& t, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j != i) out.push_back(t[j]);
  }
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

ProductFoliationModel::ProductFoliationModel(std::size_t base_points, SimplicialComplex fiber)
    : base_points_(base_points),
      fiber_(std::make_shared<const SimplicialComplex>(std::move(fiber))) {
  if (base_points_ == 0) throw InputError("a product model needs at least one base point");
  if (fiber_->vertex_count() == 0) throw InputError("the fiber complex must be nonempty");
}

ProductFoliationModel make_product_model(std::size_t base_points, SimplicialComplex fiber) {
  return ProductFoliationModel(base_points, std::move(fiber));
}

LeafToLeafMap::LeafToLeafMap(ProductFoliationModel source, ProductFoliationModel target,
                             std::vector<std::size_t> base_map, std::vector<std::size_t> fiber_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_map_(std::move(base_map)),
      fiber_map_(std::move(fiber_map)) {
  if (base_map_.size() != source_.base_points()) {
    throw InputError("base map must assign an image to every source base point");
  }
  for (std::size_t b : base_map_) {
    if (b >= target_.base_points()) throw InputError("base map image out of range");
  }
  const auto& src = source_.fiber();
  const auto& dst = target_.fiber();
  if (fiber_map_.size() != src.vertex_count()) {
    throw InputError("fiber map must assign an image to every source vertex");
  }
  for (std::size_t v : fiber_map_) {
    if (v >= dst.vertex_count()) throw InputError("fiber map image out of range");
  }
  for (int q = 1; q <= src.dimension(); ++q) {
    for (const auto& s : src.simplices(q)) {
      Simplex image;
      for (std::size_t v : s) image.push_back(fiber_map_[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!dst.contains(image)) {
        throw InputError("fiber map is not simplicial: " + format_indices(s) +
                         " has no image simplex");
      }
    }
  }
}

LeafToLeafMap LeafToLeafMap::identity(const ProductFoliationModel& m) {
  std::vector<std::size_t> base(m.base_points());
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::size_t> fiber(m.fiber().vertex_count());
  std::iota(fiber.begin(), fiber.end(), 0);
  return LeafToLeafMap(m, m, std::move(base), std::move(fiber));
}

bool LeafToLeafMap::is_injective() const {
  auto injective = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return injective(base_map_) && injective(fiber_map_);
}

LeafToLeafMap compose(const LeafToLeafMap& g, const LeafToLeafMap& f) {
  if (f.target().base_points() != g.source().base_points() ||
      f.target().fiber().vertex_count() != g.source().fiber().vertex_count()) {
    throw InputError("compose: maps are not composable");
  }
  std::vector<std::size_t> base, fiber;
  for (std::size_t b : f.base_map()) base.push_back(g.base_map()[b]);
  for (std::size_t v : f.fiber_map()) fiber.push_back(g.fiber_map()[v]);
  return LeafToLeafMap(f.source(), g.target(), std::move(base), std::move(fiber));
}

bool same_map(const LeafToLeafMap& a, const LeafToLeafMap& b) {
  return a.base_map() == b.base_map() && a.fiber_map() == b.fiber_map() &&
         a.target().base_points() == b.target().base_points();
}

FoliatedCoverModel::FoliatedCoverModel(std::vector<std::string> charts,
                                       std::vector<CoverTuple> tuples)
    : charts_(std::move(charts)), tuples_(std::move(tuples)) {
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    const auto& t = tuples_[k];
    if (t.indices.empty()) throw InputError("cover tuple with no indices");
    for (std::size_t i = 0; i < t.indices.size(); ++i) {
      if (t.indices[i] >= charts_.size()) {
        throw InputError("tuple " + format_indices(t.indices) + " names an unknown chart");
      }
      if (i > 0 && t.indices[i] <= t.indices[i - 1]) {
        throw InputError("tuple " + format_indices(t.indices) + " is not strictly increasing");
      }
    }
    std::set<std::string> names(t.leaves.begin(), t.leaves.end());
    if (names.size() != t.leaves.size()) {
      throw InputError("tuple " + format_indices(t.indices) + " repeats a leaf name");
    }
    if (!lookup_.emplace(t.indices, k).second) {
      throw InputError("tuple " + format_indices(t.indices) + " listed twice");
    }
    const std::size_t p = t.indices.size() - 1;
    if (by_degree_.size() <= p) by_degree_.resize(p + 1);
    by_degree_[p].push_back(k);
  }
  for (const auto& t : tuples_) {
    const std::size_t faces = t.indices.size() > 1 ? t.indices.size() : 0;
    if (t.restrictions.size() != faces) {
      throw InputError("tuple " + format_indices(t.indices) + " needs exactly " +
                       std::to_string(faces) + " restriction maps");
    }
    for (std::size_t i = 0; i < faces; ++i) {
      const auto face = drop(t.indices, i);
      if (!has_tuple(face)) {
        throw InputError("subtuple " + format_indices(face) + " of " + format_indices(t.indices) +
                         " is missing");
      }
      const auto& target = tuples_[find_tuple(face)];
      if (t.restrictions[i].size() != t.leaves.size()) {
        throw InputError("restriction " + std::to_string(i) + " of " + format_indices(t.indices) +
                         " must map every leaf");
      }
      for (std::size_t y : t.restrictions[i]) {
        if (y >= target.leaves.size()) {
          throw InputError("restriction " + std::to_string(i) + " of " +
                           format_indices(t.indices) + " lands outside " + format_indices(face));
        }
      }
    }
  }
  for (const auto& t : tuples_) {
    const std::size_t n = t.indices.size();
    if (n < 3) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& without_j = tuples_[find_tuple(drop(t.indices, j))];
        const auto& without_i = tuples_[find_tuple(drop(t.indices, i))];
        for (std::size_t x = 0; x < t.leaves.size(); ++x) {
          const std::size_t via_j = without_j.restrictions[i][t.restrictions[j][x]];
          const std::size_t via_i = without_i.restrictions[j - 1][t.restrictions[i][x]];
          if (via_j != via_i) {
            throw InputError("restriction maps do not commute for tuple pair " +
                             format_indices(t.indices) + " -> " +
                             format_indices(drop(drop(t.indices, j), i)) + " (faces " +
                             std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
      }
    }
  }
}

const std::vector<std::size_t>& FoliatedCoverModel::tuples_of_degree(std::size_t p) const {
  static const std::vector<std::size_t> none;
  return p < by_degree_.size() ? by_degree_[p] : none;
}

std::size_t FoliatedCoverModel::find_tuple(const std::vector<std::size_t>& indices) const {
  auto it = lookup_.find(indices);
  if (it == lookup_.end()) throw InputError("no tuple " + format_indices(indices));
  return it->second;
}

bool FoliatedCoverModel::has_tuple(const std::vector<std::size_t>& indices) const {
  return lookup_.count(indices) > 0;
}

std::vector<std::vector<std::size_t>> FoliatedCoverModel::leaf_class_labels() const {
  std::vector<std::size_t> offset(tuples_.size() + 1, 0);
  for (std::size_t k = 0; k < tuples_.size(); ++k) offset[k + 1] = offset[k] + tuples_[k].leaves.size();
  UnionFind uf(offset.back());
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    const auto& t = tuples_[k];
    for (std::size_t i = 0; i < t.restrictions.size(); ++i) {
      const std::size_t face = find_tuple(drop(t.indices, i));
      for (std::size_t x = 0; x < t.leaves.size(); ++x) {
        uf.unite(offset[k] + x, offset[face] + t.restrictions[i][x]);
      }
    }
  }
  std::map<std::size_t, std::size_t> label;
  std::vector<std::vector<std::size_t>> out(tuples_.size());
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    for (std::size_t x = 0; x < tuples_[k].leaves.size(); ++x) {
      const std::size_t root = uf.find(offset[k] + x);
      out[k].push_back(label.try_emplace(root, label.size()).first->second);
    }
  }
  return out;
}

std::size_t global_leaf_classes(const FoliatedCoverModel& c) {
  std::set<std::size_t> classes;
  for (const auto& labels : c.leaf_class_labels()) classes.insert(labels.begin(), labels.end());
  return classes.size();
}

const std::vector<std::vector<std::size_t>>& ProductCover::tuples(std::size_t p) const {
  static const std::vector<std::vector<std::size_t>> none;
  return p < nerve.size() ? nerve[p] : none;
}

ProductCover make_product_cover(std::size_t base_points,
                                std::vector<std::vector<std::size_t>> subsets) {
  if (subsets.empty()) throw InputError("a cover needs at least one chart");
  std::vector<bool> covered(base_points, false);
  for (auto& s : subsets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t x : s) {
      if (x >= base_points) throw InputError("cover names base point " + std::to_string(x) +
                                             " outside 0.." + std::to_string(base_points - 1));
      covered[x] = true;
    }
  }
  for (std::size_t x = 0; x < base_points; ++x) {
    if (!covered[x]) throw InputError("base point " + std::to_string(x) + " is not covered");
  }

  ProductCover cover;
  cover.subsets = std::move(subsets);
  // Depth-first over increasing index tuples, pruning empty intersections.
  std::vector<std::size_t> tuple;
  auto extend = [&](auto&& self, const std::vector<std::size_t>& points) -> void {
    const std::size_t p = tuple.size() - 1;
    if (cover.nerve.size() <= p) cover.nerve.resize(p + 1);
    cover.nerve[p].push_back(tuple);
    cover.intersection[tuple] = points;
    for (std::size_t next = tuple.back() + 1; next < cover.subsets.size(); ++next) {
      std::vector<std::size_t> meet;
      std::set_intersection(points.begin(), points.end(), cover.subsets[next].begin(),
                            cover.subsets[next].end(), std::back_inserter(meet));
      if (meet.empty()) continue;
      tuple.push_back(next);
      self(self, meet);
      tuple.pop_back();
    }
  };
  for (std::size_t a = 0; a < cover.subsets.size(); ++a) {
    if (cover.subsets[a].empty()) continue;
    tuple = {a};
    extend(extend, cover.subsets[a]);
  }
  for (auto& layer : cover.nerve) std::sort(layer.begin(), layer.end());
  return cover;
}

void validate_partition(const ProductCover& cover, std::size_t base_points,
                        const PartitionOfUnity& pou) {
  if (pou.weights.size() != cover.subsets.size()) {
    throw InputError("partition of unity needs one weight function per chart");
  }
  for (std::size_t x = 0; x < base_points; ++x) {
    Rational sum = 0;
    for (std::size_t a = 0; a < cover.subsets.size(); ++a) {
      if (pou.weights[a].size() != base_points) throw InputError("weight function has wrong size");
      const Rational& w = pou.weights[a][x];
      if (w < 0) throw InputError("negative partition weight");
      const auto& s = cover.subsets[a];
      if (w != 0 && !std::binary_search(s.begin(), s.end(), x)) {
        throw InputError("partition weight supported outside its chart");
      }
      sum += w;
    }
    if (sum != 1) throw InputError("partition weights do not sum to 1 at point " + std::to_string(x));
  }
}

PartitionOfUnity lowest_chart_partition(const ProductCover& cover, std::size_t base_points) {
  PartitionOfUnity pou;
  pou.weights.assign(cover.subsets.size(), std::vector<Rational>(base_points, Rational(0)));
  for (std::size_t x = 0; x < base_points; ++x) {
    for (std::size_t a = 0; a < cover.subsets.size(); ++a) {
      const auto& s = cover.subsets[a];
      if (std::binary_search(s.begin(), s.end(), x)) {
        pou.weights[a][x] = 1;
        break;
      }
    }
  }
  return pou;
}

PartitionOfUnity random_partition(const ProductCover& cover, std::size_t base_points,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<long> weight(1, 9);
  PartitionOfUnity pou;
  pou.weights.assign(cover.subsets.size(), std::vector<Rational>(base_points, Rational(0)));
  for (std::size_t x = 0; x < base_points; ++x) {
    long total = 0;
    std::vector<std::pair<std::size_t, long>> raw;
    for (std::size_t a = 0; a < cover.subsets.size(); ++a) {
      const auto& s = cover.subsets[a];
      if (!std::binary_search(s.begin(), s.end(), x)) continue;
      raw.emplace_back(a, weight(rng));
      total += raw.back().second;
    }
    for (const auto& [a, w] : raw) pou.weights[a][x] = make_rational(w, total);
  }
  return pou;
}

ProductCoverModels cover_from_base_subsets(const ProductFoliationModel& m,
                                           std::vector<std::vector<std::size_t>> subsets) {
  ProductCover cover = make_product_cover(m.base_points(), std::move(subsets));
  const std::size_t components = m.fiber().components();

  std::vector<std::string> charts;
  for (std::size_t a = 0; a < cover.subsets.size(); ++a) charts.push_back("u" + std::to_string(a));

  std::vector<CoverTuple> tuples;
  for (const auto& layer : cover.nerve) {
    for (const auto& indices : layer) {
      CoverTuple t;
      t.indices = indices;
      const auto& points = cover.intersection.at(indices);
      for (std::size_t x : points) {
        for (std::size_t c = 0; c < components; ++c) {
          t.leaves.push_back("x" + std::to_string(x) + "c" + std::to_string(c));
        }
      }
      if (indices.size() > 1) {
        for (std::size_t i = 0; i < indices.size(); ++i) {
          const auto& face_points = cover.intersection.at(drop(indices, i));
          std::vector<std::size_t> image;
          for (std::size_t x : points) {
            const std::size_t pos = static_cast<std::size_t>(
                std::lower_bound(face_points.begin(), face_points.end(), x) - face_points.begin());
            for (std::size_t c = 0; c < components; ++c) image.push_back(pos * components + c);
          }
          t.restrictions.push_back(std::move(image));
        }
      }
      tuples.push_back(std::move(t));
    }
  }
  PartitionOfUnity pou = lowest_chart_partition(cover, m.base_points());
  return ProductCoverModels{std::move(cover), FoliatedCoverModel(std::move(charts), std::move(tuples)),
                            std::move(pou)};
}

}  // namespace foliacoh
