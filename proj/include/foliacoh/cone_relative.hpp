#ifndef FOLIACOH_CONE_RELATIVE_HPP
#define FOLIACOH_CONE_RELATIVE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "foliacoh/complexes.hpp"
#include "foliacoh/foliation_models.hpp"

namespace foliacoh {

/// Cone of h* : Λ(N) -> Λ(M) for h : M -> N. Degree q is Λ^q(N) ⊕ Λ^{q-1}(M)
/// (target part first) with d̄(ω, θ) = (-dω, h*ω + dθ).
struct ConeComplex {
  CochainComplex complex;
  std::vector<std::size_t> target_dims;  // dim Λ^q(N)
  std::vector<std::size_t> source_dims;  // dim Λ^{q-1}(M)
};

ConeComplex mapping_cone(const LeafToLeafMap& h);
std::vector<std::size_t> relative_cohomology(const LeafToLeafMap& h);

/// ... -> H^{q-1}(M) -α*-> H^q(h) -β*-> H^q(N) -h*-> H^q(M) -α*-> H^{q+1}(h) -> ...
/// flattened into one list of spaces, starting and ending with 0.
struct LongExactSequence {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> maps;  // maps[i] : node i -> node i+1
  ExactnessReport exactness;
  /// The connecting map computed by lifting through β, applying d̄ and pulling
  /// back through α agrees with h* on cohomology in every degree.
  bool connecting_equals_pullback = false;

  std::vector<std::size_t> source_cohomology;
  std::vector<std::size_t> target_cohomology;
  std::vector<std::size_t> relative_cohomology;

  /// Index of the node carrying H^q(h), H^q(N) or H^q(M).
  std::size_t relative_node(std::size_t q) const { return 1 + 3 * q; }
  std::size_t target_node(std::size_t q) const { return 2 + 3 * q; }
  std::size_t source_node(std::size_t q) const { return 3 + 3 * q; }
};

LongExactSequence long_exact_sequence(const LeafToLeafMap& h);

struct BoundClaim {
  std::string claim;
  bool holds = true;
};

struct DegreeBoundReport {
  std::vector<BoundClaim> claims;
  bool passed() const;
};

/// Checks, with p = fiber dimension of the source and q = fiber dimension of
/// the target: β* onto in degree p+1; α* : H^q(M) -> H^{q+1} onto; β* iso
/// above p+1; α* iso above q; H^i(h) = 0 for i > max(p+1, q).
DegreeBoundReport check_degree_bounds(const LeafToLeafMap& h, int p, int q_top);
DegreeBoundReport check_degree_bounds(const LongExactSequence& les, int p, int q_top);

/// Dimension lists carry no trailing zeros.
struct HomotopyInvarianceReport {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  std::vector<std::size_t> through_homotopy;
  bool induced_maps_agree = false;
  bool passed() const { return first == second && first == through_homotopy && induced_maps_agree; }
};

/// Throws InputError unless `witness` is a homotopy cylinder(M) -> N from h2
/// (t = 0) to h1 (t = 1).
HomotopyInvarianceReport homotopic_maps_equal_relative(const LeafToLeafMap& h1,
                                                       const LeafToLeafMap& h2,
                                                       const LeafToLeafMap& witness);

std::string les_report_json(const LongExactSequence& les, const DegreeBoundReport& bounds);

}  // namespace foliacoh

#endif  // FOLIACOH_CONE_RELATIVE_HPP
