#ifndef FOLIACOH_FOLIATION_MODELS_HPP
#define FOLIACOH_FOLIATION_MODELS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "foliacoh/rational.hpp"
#include "foliacoh/simplicial.hpp"

namespace foliacoh {

/// Finite transversal times a simplicial leaf. Leaves are {x} x (component of
/// the fiber). Vertical q-forms are indexed base-major:
/// index = x * fiber.count(q) + simplex.
class ProductFoliationModel {
 public:
  ProductFoliationModel(std::size_t base_points, SimplicialComplex fiber);

  std::size_t base_points() const { return base_points_; }
  const SimplicialComplex& fiber() const { return *fiber_; }
  int fiber_dimension() const { return fiber_->dimension(); }
  std::size_t leaf_count() const { return base_points_ * fiber_->components(); }
  std::size_t form_dim(int q) const { return base_points_ * fiber_->count(q); }
  std::size_t form_index(std::size_t base_point, int q, std::size_t simplex) const {
    return base_point * fiber_->count(q) + simplex;
  }

 private:
  std::size_t base_points_;
  std::shared_ptr<const SimplicialComplex> fiber_;
};

ProductFoliationModel make_product_model(std::size_t base_points, SimplicialComplex fiber);

/// Leaf-preserving map: arbitrary on base points, simplicial on fibers.
class LeafToLeafMap {
 public:
  LeafToLeafMap(ProductFoliationModel source, ProductFoliationModel target,
                std::vector<std::size_t> base_map, std::vector<std::size_t> fiber_map);

  static LeafToLeafMap identity(const ProductFoliationModel& m);

  const ProductFoliationModel& source() const { return source_; }
  const ProductFoliationModel& target() const { return target_; }
  const std::vector<std::size_t>& base_map() const { return base_map_; }
  const std::vector<std::size_t>& fiber_map() const { return fiber_map_; }
  bool is_injective() const;

 private:
  ProductFoliationModel source_;
  ProductFoliationModel target_;
  std::vector<std::size_t> base_map_;
  std::vector<std::size_t> fiber_map_;
};

/// g ∘ f (apply f first).
LeafToLeafMap compose(const LeafToLeafMap& g, const LeafToLeafMap& f);
bool same_map(const LeafToLeafMap& a, const LeafToLeafMap& b);

/// One nerve tuple α0 < ... < αp with its local leaf set. restrictions[i][x]
/// is the index, in the leaf list of the tuple with α_i removed, of the image
/// of leaf x.
struct CoverTuple {
  std::vector<std::size_t> indices;
  std::vector<std::string> leaves;
  std::vector<std::vector<std::size_t>> restrictions;
};

class FoliatedCoverModel {
 public:
  /// Validates subtuple closure, restriction ranges and the simplicial
  /// identities ∂_i ∂_j = ∂_{j-1} ∂_i (i < j). Throws InputError.
  FoliatedCoverModel(std::vector<std::string> charts, std::vector<CoverTuple> tuples);

  const std::vector<std::string>& charts() const { return charts_; }
  const std::vector<CoverTuple>& tuples() const { return tuples_; }
  /// Tuple positions with p+1 indices, in the order they appear in tuples().
  const std::vector<std::size_t>& tuples_of_degree(std::size_t p) const;
  std::size_t max_degree() const { return by_degree_.empty() ? 0 : by_degree_.size() - 1; }
  std::size_t find_tuple(const std::vector<std::size_t>& indices) const;
  bool has_tuple(const std::vector<std::size_t>& indices) const;

  /// Global leaf class of each (tuple, leaf), numbered 0..classes-1.
  std::vector<std::vector<std::size_t>> leaf_class_labels() const;

 private:
  std::vector<std::string> charts_;
  std::vector<CoverTuple> tuples_;
  std::map<std::vector<std::size_t>, std::size_t> lookup_;
  std::vector<std::vector<std::size_t>> by_degree_;
};

/// Number of classes of the equivalence generated by x ~ restriction(x).
std::size_t global_leaf_classes(const FoliatedCoverModel& c);

/// weights[α][x]: θ_α at point x (a base point or a global leaf class).
struct PartitionOfUnity {
  std::vector<std::vector<Rational>> weights;
};

/// Finite cover of the base transversal of a product model, with its nerve.
struct ProductCover {
  std::vector<std::vector<std::size_t>> subsets;
  /// Nerve tuples (strictly increasing chart indices) grouped by size - 1.
  std::vector<std::vector<std::vector<std::size_t>>> nerve;
  /// Sorted base points of the intersection of each nerve tuple.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> intersection;

  std::size_t max_degree() const { return nerve.empty() ? 0 : nerve.size() - 1; }
  const std::vector<std::vector<std::size_t>>& tuples(std::size_t p) const;
};

ProductCover make_product_cover(std::size_t base_points,
                                std::vector<std::vector<std::size_t>> subsets);

/// Throws InputError unless θ ≥ 0, supp θ_α ⊆ u_α and Σ_α θ_α = 1 exactly.
void validate_partition(const ProductCover& cover, std::size_t base_points,
                        const PartitionOfUnity& pou);

/// θ_α(x) = 1 for the lowest-index chart containing x.
PartitionOfUnity lowest_chart_partition(const ProductCover& cover, std::size_t base_points);
/// Random positive rational weights on the charts containing each point.
PartitionOfUnity random_partition(const ProductCover& cover, std::size_t base_points,
                                  std::mt19937_64& rng);

struct ProductCoverModels {
  ProductCover cover;
  FoliatedCoverModel leaves;
  PartitionOfUnity partition;
};

/// Leaf set of a tuple = (intersection base points) x (fiber components),
/// restrictions are inclusions, partition is the lowest-chart 0/1 partition.
ProductCoverModels cover_from_base_subsets(const ProductFoliationModel& m,
                                           std::vector<std::vector<std::size_t>> subsets);

}  // namespace foliacoh

#endif  // FOLIACOH_FOLIATION_MODELS_HPP
