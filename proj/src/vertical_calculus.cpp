#include "foliacoh/vertical_calculus.hpp"

#include <algorithm>

#include "foliacoh/errors.hpp"

namespace foliacoh {

namespace {

bool same_shape(const ProductFoliationModel& a, const ProductFoliationModel& b) {
  if (a.base_points() != b.base_points()) return false;
  if (&a.fiber() == &b.fiber()) return true;
  if (a.fiber_dimension() != b.fiber_dimension()) return false;
  for (int q = 0; q <= a.fiber_dimension(); ++q) {
    if (a.fiber().simplices(q) != b.fiber().simplices(q)) return false;
  }
  return true;
}

}  // namespace

VerticalForm VerticalForm::zero(const ProductFoliationModel& m, int q) {
  return VerticalForm{m, q, RationalVector(m.form_dim(q))};
}

VerticalForm VerticalForm::constant(const ProductFoliationModel& m, const Rational& c) {
  return VerticalForm{m, 0, RationalVector(m.form_dim(0), c)};
}

const Rational& VerticalForm::at(std::size_t base_point, std::size_t simplex) const {
  return coefficients.at(model.form_index(base_point, degree, simplex));
}

Rational& VerticalForm::at(std::size_t base_point, std::size_t simplex) {
  return coefficients.at(model.form_index(base_point, degree, simplex));
}

VerticalForm operator+(const VerticalForm& a, const VerticalForm& b) {
  if (a.degree != b.degree || a.coefficients.size() != b.coefficients.size()) {
    throw InvariantError("adding vertical forms of different shape");
  }
  VerticalForm out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

VerticalForm operator*(const Rational& s, const VerticalForm& a) {
  VerticalForm out = a;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

RationalMatrix vertical_differential_matrix(const ProductFoliationModel& m, int q) {
  const RationalMatrix block = m.fiber().coboundary(q);
  RationalMatrix d(m.form_dim(q + 1), m.form_dim(q));
  for (std::size_t x = 0; x < m.base_points(); ++x) {
    d.add_block(x * block.rows(), x * block.cols(), block);
  }
  return d;
}

VerticalComplex vertical_differential(const ProductFoliationModel& m) {
  const int top = std::max(m.fiber_dimension(), 0);
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> ds;
  for (int q = 0; q <= top; ++q) dims.push_back(m.form_dim(q));
  for (int q = 0; q < top; ++q) ds.push_back(vertical_differential_matrix(m, q));
  return VerticalComplex{CochainComplex(std::move(dims), std::move(ds))};
}

VerticalForm apply_differential(const VerticalForm& a) {
  return VerticalForm{a.model, a.degree + 1,
                      vertical_differential_matrix(a.model, a.degree).apply(a.coefficients)};
}

WedgeResult wedge(const VerticalForm& a, const VerticalForm& b) {
  if (!same_shape(a.model, b.model)) throw InputError("wedge: forms live on different models");
  const ProductFoliationModel& m = a.model;
  const int p = a.degree;
  const int q = b.degree;
  if (p + q > m.fiber_dimension()) {
    return WedgeResult{VerticalForm::zero(m, m.fiber_dimension()), true};
  }
  const auto& k = m.fiber();
  VerticalForm out = VerticalForm::zero(m, p + q);
  for (std::size_t s = 0; s < k.count(p + q); ++s) {
    const Simplex& sigma = k.simplex(p + q, s);
    const Simplex front(sigma.begin(), sigma.begin() + p + 1);
    const Simplex back(sigma.begin() + p, sigma.end());
    const std::size_t fi = *k.index_of(front);
    const std::size_t bi = *k.index_of(back);
    for (std::size_t x = 0; x < m.base_points(); ++x) out.at(x, s) = a.at(x, fi) * b.at(x, bi);
  }
  return WedgeResult{std::move(out), false};
}

std::vector<std::size_t> vertical_cohomology(const ProductFoliationModel& m) {
  return cohomology_dims(vertical_differential(m).complex);
}

RationalMatrix pullback_matrix(const LeafToLeafMap& h, int q) {
  const auto& src = h.source();
  const auto& dst = h.target();
  RationalMatrix mat(src.form_dim(q), dst.form_dim(q));
  const auto& k = src.fiber();
  for (std::size_t s = 0; s < k.count(q); ++s) {
    const Simplex& sigma = k.simplex(q, s);
    Simplex image;
    for (std::size_t v : sigma) image.push_back(h.fiber_map()[v]);
    // Sign of the permutation sorting the image; collapsed simplices pull back to 0.
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] == image[j]) sign = 0;
        if (image[i] > image[j]) sign = -sign;
      }
    }
    if (sign == 0) continue;
    std::sort(image.begin(), image.end());
    const std::size_t t = *dst.fiber().index_of(image);
    for (std::size_t x = 0; x < src.base_points(); ++x) {
      mat.set(src.form_index(x, q, s), dst.form_index(h.base_map()[x], q, t), sign);
    }
  }
  return mat;
}

VerticalForm pullback(const LeafToLeafMap& h, const VerticalForm& b) {
  if (b.coefficients.size() != h.target().form_dim(b.degree)) {
    throw InputError("pullback: form does not live on the map's target");
  }
  return VerticalForm{h.source(), b.degree, pullback_matrix(h, b.degree).apply(b.coefficients)};
}

ComplexMap pullback_map(const LeafToLeafMap& h) {
  const auto src = vertical_differential(h.target()).complex;
  const auto dst = vertical_differential(h.source()).complex;
  const std::size_t len = std::max(src.length(), dst.length());
  std::vector<RationalMatrix> parts;
  for (std::size_t q = 0; q < len; ++q) parts.push_back(pullback_matrix(h, static_cast<int>(q)));
  return ComplexMap(src, dst, std::move(parts));
}

std::vector<RationalMatrix> induced_map_on_cohomology(const LeafToLeafMap& h) {
  const auto src = vertical_differential(h.target()).complex;
  const auto dst = vertical_differential(h.source()).complex;
  const ComplexMap f = pullback_map(h);
  std::vector<RationalMatrix> out;
  for (std::size_t q = 0; q < f.length(); ++q) out.push_back(induced_map(f, src, dst, static_cast<int>(q)));
  return out;
}

CylinderModel make_cylinder(const ProductFoliationModel& m) {
  ProductFoliationModel cyl(m.base_points(), complexes::cylinder(m.fiber()));
  std::vector<std::size_t> base(m.base_points());
  for (std::size_t x = 0; x < base.size(); ++x) base[x] = x;
  const std::size_t n = m.fiber().vertex_count();
  std::vector<std::size_t> proj(2 * n), s0(n), s1(n);
  for (std::size_t v = 0; v < n; ++v) {
    proj[2 * v] = proj[2 * v + 1] = v;
    s0[v] = 2 * v;
    s1[v] = 2 * v + 1;
  }
  return CylinderModel{cyl, LeafToLeafMap(cyl, m, base, proj), LeafToLeafMap(m, cyl, base, s0),
                       LeafToLeafMap(m, cyl, base, s1)};
}

LeafToLeafMap contiguity_homotopy(const LeafToLeafMap& f, const LeafToLeafMap& g) {
  if (f.base_map() != g.base_map()) {
    throw InputError("homotopic leaf maps over a discrete transversal must agree on base points");
  }
  if (f.source().fiber().vertex_count() != g.source().fiber().vertex_count() ||
      f.target().fiber().vertex_count() != g.target().fiber().vertex_count()) {
    throw InputError("homotopy endpoints must share source and target");
  }
  const CylinderModel cyl = make_cylinder(f.source());
  const std::size_t n = f.source().fiber().vertex_count();
  std::vector<std::size_t> fiber(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    fiber[2 * v] = g.fiber_map()[v];
    fiber[2 * v + 1] = f.fiber_map()[v];
  }
  return LeafToLeafMap(cyl.cylinder, f.target(), f.base_map(), std::move(fiber));
}

bool is_homotopy_witness(const LeafToLeafMap& witness, const LeafToLeafMap& f,
                         const LeafToLeafMap& g) {
  const CylinderModel cyl = make_cylinder(f.source());
  if (witness.source().base_points() != cyl.cylinder.base_points() ||
      witness.source().fiber().simplices(1) != cyl.cylinder.fiber().simplices(1) ||
      witness.source().fiber().vertex_count() != cyl.cylinder.fiber().vertex_count()) {
    return false;
  }
  return same_map(compose(witness, cyl.section0), g) && same_map(compose(witness, cyl.section1), f);
}

}  // namespace foliacoh
