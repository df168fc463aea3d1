#include "foliacoh/complexes.hpp"

#include <sstream>

#include "foliacoh/errors.hpp"

namespace foliacoh {

CochainComplex::CochainComplex(std::vector<std::size_t> dims,
                               std::vector<RationalMatrix> differentials)
    : dims_(std::move(dims)), differentials_(std::move(differentials)) {
  const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
  if (differentials_.size() != expected) {
    throw InvariantError("CochainComplex: need one differential per consecutive degree pair");
  }
  for (std::size_t q = 0; q < differentials_.size(); ++q) {
    const auto& d = differentials_[q];
    if (d.rows() != dims_[q + 1] || d.cols() != dims_[q]) {
      std::ostringstream os;
      os << "CochainComplex: d^" << q << " has shape " << d.rows() << "x" << d.cols()
         << ", expected " << dims_[q + 1] << "x" << dims_[q];
      throw InvariantError(os.str());
    }
  }
  for (std::size_t q = 0; q + 1 < differentials_.size(); ++q) {
    if (!(differentials_[q + 1] * differentials_[q]).is_zero()) {
      std::ostringstream os;
      os << "CochainComplex: d^" << q + 1 << " o d^" << q << " != 0";
      throw InvariantError(os.str());
    }
  }
}

std::size_t CochainComplex::dim(int q) const {
  if (q < 0 || static_cast<std::size_t>(q) >= dims_.size()) return 0;
  return dims_[static_cast<std::size_t>(q)];
}

RationalMatrix CochainComplex::differential(int q) const {
  if (q >= 0 && static_cast<std::size_t>(q) < differentials_.size()) {
    return differentials_[static_cast<std::size_t>(q)];
  }
  return RationalMatrix(dim(q + 1), dim(q));
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  std::vector<std::size_t> ranks(c.length() + 1, 0);
  for (std::size_t q = 0; q + 1 < c.length(); ++q) {
    ranks[q + 1] = rank(c.differential(static_cast<int>(q)));
  }
  // ranks[q] = rank d^{q-1}; rank d^q = ranks[q+1].
  std::vector<std::size_t> h(c.length());
  for (std::size_t q = 0; q < c.length(); ++q) h[q] = c.dims()[q] - ranks[q + 1] - ranks[q];
  return h;
}

QuotientBasis cohomology_basis(const CochainComplex& c, int q) {
  const auto cocycles = RationalMatrix::from_columns(c.dim(q), kernel_basis(c.differential(q)));
  return QuotientBasis(cocycles, c.differential(q - 1));
}

ComplexMap::ComplexMap(const CochainComplex& src, const CochainComplex& dst,
                       std::vector<RationalMatrix> components, int sign)
    : components_(std::move(components)) {
  for (std::size_t q = 0; q < components_.size(); ++q) {
    const int deg = static_cast<int>(q);
    const auto& f = components_[q];
    if (f.rows() != dst.dim(deg) || f.cols() != src.dim(deg)) {
      std::ostringstream os;
      os << "ComplexMap: component " << q << " has shape " << f.rows() << "x" << f.cols();
      throw InvariantError(os.str());
    }
  }
  for (std::size_t q = 0; q + 1 < components_.size(); ++q) {
    const int deg = static_cast<int>(q);
    const RationalMatrix lhs = components_[q + 1] * src.differential(deg);
    const RationalMatrix rhs = dst.differential(deg) * components_[q];
    if (!(sign > 0 ? lhs == rhs : lhs == rhs.scaled(-1))) {
      std::ostringstream os;
      os << "ComplexMap: chain condition fails in degree " << q;
      throw InvariantError(os.str());
    }
  }
}

RationalMatrix induced_map(const ComplexMap& f, const CochainComplex& src,
                           const CochainComplex& dst, int q) {
  return induced_quotient_map(f.component(q), cohomology_basis(src, q), cohomology_basis(dst, q));
}

bool ExactnessReport::exact() const { return !first_failure().has_value(); }

std::optional<ExactnessNode> ExactnessReport::first_failure() const {
  for (const auto& n : nodes) {
    if (!n.exact()) return n;
  }
  return std::nullopt;
}

std::string ExactnessReport::describe_failure() const {
  auto f = first_failure();
  if (!f) return "exact";
  std::ostringstream os;
  os << "not exact at node " << f->node << ": rank(in) = " << f->rank_in
     << ", dim ker(out) = " << f->kernel_out
     << (f->image_in_kernel ? "" : ", image not contained in kernel");
  return os.str();
}

ExactnessReport check_exactness(std::span<const std::size_t> dims,
                                std::span<const RationalMatrix> maps) {
  if (dims.size() != maps.size() + 1) {
    throw InvariantError("check_exactness: need exactly one map between consecutive spaces");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1]) {
      throw InvariantError("check_exactness: maps are not composable with the given spaces");
    }
  }
  ExactnessReport report;
  for (std::size_t k = 1; k + 1 < dims.size(); ++k) {
    ExactnessNode node;
    node.node = k;
    node.dim = dims[k];
    node.rank_in = rank(maps[k - 1]);
    node.kernel_out = dims[k] - rank(maps[k]);
    node.image_in_kernel = (maps[k] * maps[k - 1]).is_zero();
    report.nodes.push_back(node);
  }
  return report;
}

}  // namespace foliacoh
