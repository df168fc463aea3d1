#ifndef FOLIACOH_CECH_MV_HPP
#define FOLIACOH_CECH_MV_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "foliacoh/complexes.hpp"
#include "foliacoh/foliation_models.hpp"

namespace foliacoh {

/// δ : K^{p,q} -> K^{p+1,q}, (δω)_{α0..α_{p+1}} = Σ_i (-1)^i ω_{α0..α̂i..α_{p+1}}
/// restricted to the smaller intersection. Zero map when the nerve has no
/// tuples of the needed size.
RationalMatrix cech_delta(const ProductFoliationModel& m, const ProductCover& cover, std::size_t p,
                          int q);

/// δ on leaf-constant cochains of a cover model: C^p -> C^{p+1}.
RationalMatrix cech_delta(const FoliatedCoverModel& c, std::size_t p);

/// K^{p,q} = Π_{α0<..<αp} Λ^q(u_{α0..αp}). Block K^{p,q} lists the nerve
/// tuples of size p+1 in order; each tuple contributes its intersection base
/// points (sorted) times the fiber q-simplices, base-major.
class DoubleComplex {
 public:
  /// Assembles both differentials and checks δ² = 0, d_F² = 0 and δ d_F = d_F δ.
  DoubleComplex(ProductFoliationModel model, ProductCover cover);

  const ProductFoliationModel& model() const { return model_; }
  const ProductCover& cover() const { return cover_; }
  std::size_t columns() const { return cover_.max_degree() + 1; }  // p range
  std::size_t rows() const { return static_cast<std::size_t>(std::max(model_.fiber_dimension(), 0)) + 1; }
  std::size_t dim(std::size_t p, int q) const;
  /// Offset of tuple `t` (within cover().tuples(p)) inside block K^{p,q}.
  std::size_t tuple_offset(std::size_t p, std::size_t t, int q) const;
  RationalMatrix horizontal(std::size_t p, int q) const;
  RationalMatrix vertical(std::size_t p, int q) const;

 private:
  ProductFoliationModel model_;
  ProductCover cover_;
  std::vector<std::vector<RationalMatrix>> delta_;     // [p][q]
  std::vector<std::vector<RationalMatrix>> d_fiber_;   // [p][q]
};

DoubleComplex build_double_complex(const ProductFoliationModel& m, const ProductCover& cover);

/// Total complex K^n = ⊕_{p+q=n} K^{p,q} (blocks ordered by p) with
/// D = δ + (-1)^p d_F.
struct TotalComplex {
  CochainComplex complex;
  /// block_offset[n][p]: start of K^{p,n-p} inside K^n.
  std::vector<std::vector<std::size_t>> block_offset;
};

TotalComplex total_complex(const DoubleComplex& d);
std::vector<std::size_t> total_cohomology(const DoubleComplex& d);

/// r* : Λ^q(M) -> K^{0,q} ⊂ K^q, restriction of a global form to every chart.
ComplexMap restriction_map(const DoubleComplex& d, const TotalComplex& total,
                           const CochainComplex& vertical);

/// Preimage under δ of a δ-cocycle w in K^{p,q}, p >= 1, built from the
/// partition of unity with the antisymmetric index convention. Throws
/// InputError if δw != 0 or p == 0.
RationalVector collapse_cocycle(const ProductFoliationModel& m, const ProductCover& cover,
                                const PartitionOfUnity& pou, std::size_t p, int q,
                                const RationalVector& w);

/// Cohomology of the leaf-constant Čech row C^0 -> C^1 -> ...
std::vector<std::size_t> cech_row_cohomology(const FoliatedCoverModel& c);

struct MayerVietorisReport {
  std::vector<int> degrees;
  std::vector<std::size_t> vertical;
  std::vector<std::size_t> total;
  std::vector<std::size_t> cech_row;
  std::vector<std::size_t> r_star_ranks;
  /// Fiber has no cohomology above degree 0, so the Čech row is expected to
  /// agree with the vertical cohomology.
  bool cech_row_applicable = false;
  bool passed = false;

  std::string to_json() const;
};

/// Computes vertical and total cohomology, checks that r* induces
/// isomorphisms, and records the Čech-row dimensions.
MayerVietorisReport compare_with_vertical(const ProductFoliationModel& m,
                                          const std::vector<std::vector<std::size_t>>& subsets);

}  // namespace foliacoh

#endif  // FOLIACOH_CECH_MV_HPP
