#ifndef FOLIACOH_COMPLEXES_HPP
#define FOLIACOH_COMPLEXES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foliacoh/ratlinalg.hpp"

namespace foliacoh {

/// Finite cochain complex of Q-vector spaces in degrees 0..top. Degrees
/// outside that range are zero spaces.
class CochainComplex {
 public:
  CochainComplex() = default;
  /// differentials[q] is d^q : C^q -> C^{q+1}, shape dims[q+1] x dims[q], for
  /// q < dims.size()-1. Throws InvariantError on shape mismatch or d∘d != 0.
  CochainComplex(std::vector<std::size_t> dims, std::vector<RationalMatrix> differentials);

  /// Number of degrees carried (top degree + 1).
  std::size_t length() const { return dims_.size(); }
  std::size_t dim(int q) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// d^q, a zero matrix of the right shape outside the stored range.
  RationalMatrix differential(int q) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> differentials_;
};

std::vector<std::size_t> cohomology_dims(const CochainComplex& c);

/// Cocycles ker d^q and coboundaries im d^{q-1} as spanning columns.
QuotientBasis cohomology_basis(const CochainComplex& c, int q);

/// Per-degree matrices f^q : src^q -> dst^q satisfying the chain condition.
class ComplexMap {
 public:
  /// sign = +1 checks f d = d f; sign = -1 accepts anti-chain maps (f d = -d f),
  /// which still induce maps on cohomology.
  ComplexMap(const CochainComplex& src, const CochainComplex& dst,
             std::vector<RationalMatrix> components, int sign = 1);

  const RationalMatrix& component(int q) const { return components_.at(static_cast<std::size_t>(q)); }
  std::size_t length() const { return components_.size(); }

 private:
  std::vector<RationalMatrix> components_;
};

/// Matrix of the induced map H^q(src) -> H^q(dst) in the bases chosen by
/// cohomology_basis.
RationalMatrix induced_map(const ComplexMap& f, const CochainComplex& src,
                           const CochainComplex& dst, int q);

struct ExactnessNode {
  std::size_t node = 0;
  std::size_t dim = 0;
  std::size_t rank_in = 0;
  std::size_t kernel_out = 0;
  bool image_in_kernel = true;
  bool exact() const { return image_in_kernel && rank_in == kernel_out; }
};

struct ExactnessReport {
  std::vector<ExactnessNode> nodes;
  bool exact() const;
  std::optional<ExactnessNode> first_failure() const;
  std::string describe_failure() const;
};

/// Checks a sequence V_0 -> V_1 -> ... -> V_n at every interior node
/// 1..n-1. maps[i] has shape dims[i+1] x dims[i].
ExactnessReport check_exactness(std::span<const std::size_t> dims,
                                std::span<const RationalMatrix> maps);

}  // namespace foliacoh

#endif  // FOLIACOH_COMPLEXES_HPP
