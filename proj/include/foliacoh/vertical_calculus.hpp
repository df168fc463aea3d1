#ifndef FOLIACOH_VERTICAL_CALCULUS_HPP
#define FOLIACOH_VERTICAL_CALCULUS_HPP

#include <cstddef>
#include <vector>

#include "foliacoh/complexes.hpp"
#include "foliacoh/foliation_models.hpp"

namespace foliacoh {

/// A leafwise q-form on a product model: one rational per (base point, fiber
/// q-simplex), stored base-major.
struct VerticalForm {
  ProductFoliationModel model;
  int degree = 0;
  RationalVector coefficients;

  static VerticalForm zero(const ProductFoliationModel& m, int q);
  static VerticalForm constant(const ProductFoliationModel& m, const Rational& c);
  const Rational& at(std::size_t base_point, std::size_t simplex) const;
  Rational& at(std::size_t base_point, std::size_t simplex);

  friend bool operator==(const VerticalForm& a, const VerticalForm& b) {
    return a.degree == b.degree && a.coefficients == b.coefficients;
  }
};

VerticalForm operator+(const VerticalForm& a, const VerticalForm& b);
VerticalForm operator*(const Rational& s, const VerticalForm& a);

/// The vertical complex: the fiber coboundary repeated on every base point.
struct VerticalComplex {
  CochainComplex complex;
};

/// Block-diagonal d_F^q on forms of degree q.
RationalMatrix vertical_differential_matrix(const ProductFoliationModel& m, int q);
VerticalComplex vertical_differential(const ProductFoliationModel& m);
VerticalForm apply_differential(const VerticalForm& a);

struct WedgeResult {
  VerticalForm form;
  /// Set when deg a + deg b exceeds the fiber dimension; the form is then the
  /// zero form of the clamped degree.
  bool overflow = false;
};

/// Cup product per base point: (a ∪ b)[v0..v_{p+q}] = a[v0..vp] · b[vp..v_{p+q}].
WedgeResult wedge(const VerticalForm& a, const VerticalForm& b);

std::vector<std::size_t> vertical_cohomology(const ProductFoliationModel& m);

/// Matrix of h* on q-forms: (h*b)(x, σ) = ±b(base_map x, fiber_map σ), with the
/// sign of the sorting permutation, and 0 when fiber_map collapses σ.
RationalMatrix pullback_matrix(const LeafToLeafMap& h, int q);
VerticalForm pullback(const LeafToLeafMap& h, const VerticalForm& b);
/// h* as a chain map of vertical complexes (target complex -> source complex).
ComplexMap pullback_map(const LeafToLeafMap& h);
/// h* on vertical cohomology, one matrix per degree.
std::vector<RationalMatrix> induced_map_on_cohomology(const LeafToLeafMap& h);

/// Discrete cylinder M x [0,1]: the fiber is replaced by its prism
/// triangulation, the base is unchanged.
struct CylinderModel {
  ProductFoliationModel cylinder;
  LeafToLeafMap projection;  // cylinder -> base model
  LeafToLeafMap section0;    // base model -> cylinder at t = 0
  LeafToLeafMap section1;    // base model -> cylinder at t = 1
};

CylinderModel make_cylinder(const ProductFoliationModel& m);

/// Builds H : cylinder(source) -> target with H∘s0 = g and H∘s1 = f.
/// Requires the fiber maps to be contiguous (f(σ) ∪ g(σ) a simplex) and the
/// base maps to agree; throws InputError otherwise.
LeafToLeafMap contiguity_homotopy(const LeafToLeafMap& f, const LeafToLeafMap& g);

/// True when `witness` is a map cylinder(source) -> target restricting to g at
/// t = 0 and to f at t = 1.
bool is_homotopy_witness(const LeafToLeafMap& witness, const LeafToLeafMap& f,
                         const LeafToLeafMap& g);

}  // namespace foliacoh

#endif  // FOLIACOH_VERTICAL_CALCULUS_HPP
