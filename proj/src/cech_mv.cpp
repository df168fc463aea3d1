#include "foliacoh/cech_mv.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "foliacoh/errors.hpp"
#include "foliacoh/vertical_calculus.hpp"

namespace foliacoh {

namespace {

std::vector<std::size_t> drop(const std::vector<std::size_t>& t, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j != i) out.push_back(t[j]);
  }
  return out;
}

std::size_t position_of(const std::vector<std::size_t>& sorted, std::size_t x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Offsets of every tuple of size p+1 inside K^{p,q}; last entry is the block size.
std::vector<std::size_t> block_offsets(const ProductFoliationModel& m, const ProductCover& cover,
                                       std::size_t p, int q) {
  std::vector<std::size_t> off{0};
  const std::size_t n = m.fiber().count(q);
  for (const auto& t : cover.tuples(p)) off.push_back(off.back() + cover.intersection.at(t).size() * n);
  return off;
}

std::size_t tuple_position(const ProductCover& cover, std::size_t p, const std::vector<std::size_t>& t) {
  const auto& layer = cover.tuples(p);
  auto it = std::lower_bound(layer.begin(), layer.end(), t);
  if (it == layer.end() || *it != t) throw InvariantError("tuple missing from nerve");
  return static_cast<std::size_t>(it - layer.begin());
}

std::vector<std::size_t> leaf_offsets(const FoliatedCoverModel& c, std::size_t p) {
  std::vector<std::size_t> off{0};
  for (std::size_t k : c.tuples_of_degree(p)) off.push_back(off.back() + c.tuples()[k].leaves.size());
  return off;
}

}  // namespace

RationalMatrix cech_delta(const ProductFoliationModel& m, const ProductCover& cover, std::size_t p,
                          int q) {
  const auto src_off = block_offsets(m, cover, p, q);
  const auto dst_off = block_offsets(m, cover, p + 1, q);
  RationalMatrix delta(dst_off.back(), src_off.back());
  const std::size_t n = m.fiber().count(q);
  const auto& upper = cover.tuples(p + 1);
  for (std::size_t t = 0; t < upper.size(); ++t) {
    const auto& points = cover.intersection.at(upper[t]);
    for (std::size_t i = 0; i < upper[t].size(); ++i) {
      const auto face = drop(upper[t], i);
      const std::size_t f = tuple_position(cover, p, face);
      const auto& face_points = cover.intersection.at(face);
      const Rational sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t a = 0; a < points.size(); ++a) {
        const std::size_t b = position_of(face_points, points[a]);
        for (std::size_t s = 0; s < n; ++s) {
          delta.add_to(dst_off[t] + a * n + s, src_off[f] + b * n + s, sign);
        }
      }
    }
  }
  return delta;
}

RationalMatrix cech_delta(const FoliatedCoverModel& c, std::size_t p) {
  const auto src_off = leaf_offsets(c, p);
  const auto dst_off = leaf_offsets(c, p + 1);
  RationalMatrix delta(dst_off.back(), src_off.back());
  const auto& src_tuples = c.tuples_of_degree(p);
  const auto& upper = c.tuples_of_degree(p + 1);
  for (std::size_t t = 0; t < upper.size(); ++t) {
    const CoverTuple& tuple = c.tuples()[upper[t]];
    for (std::size_t i = 0; i < tuple.indices.size(); ++i) {
      const std::size_t face = c.find_tuple(drop(tuple.indices, i));
      const std::size_t f = static_cast<std::size_t>(
          std::find(src_tuples.begin(), src_tuples.end(), face) - src_tuples.begin());
      const Rational sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t x = 0; x < tuple.leaves.size(); ++x) {
        delta.add_to(dst_off[t] + x, src_off[f] + tuple.restrictions[i][x], sign);
      }
    }
  }
  return delta;
}

DoubleComplex::DoubleComplex(ProductFoliationModel model, ProductCover cover)
    : model_(std::move(model)), cover_(std::move(cover)) {
  const std::size_t np = columns();
  const int nq = static_cast<int>(rows());
  delta_.assign(np, {});
  d_fiber_.assign(np, {});
  for (std::size_t p = 0; p < np; ++p) {
    for (int q = 0; q < nq; ++q) {
      delta_[p].push_back(cech_delta(model_, cover_, p, q));
      const RationalMatrix block = model_.fiber().coboundary(q);
      RationalMatrix d(dim(p, q + 1), dim(p, q));
      std::size_t r = 0, c = 0;
      for (const auto& t : cover_.tuples(p)) {
        for (std::size_t x = 0; x < cover_.intersection.at(t).size(); ++x) {
          d.add_block(r, c, block);
          r += block.rows();
          c += block.cols();
        }
      }
      d_fiber_[p].push_back(std::move(d));
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (int q = 0; q < nq; ++q) {
      const auto qi = static_cast<std::size_t>(q);
      if (p + 1 < np && !(delta_[p + 1][qi] * delta_[p][qi]).is_zero()) {
        throw InvariantError("double complex: δ∘δ != 0 at (p,q) = (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
      }
      if (q + 1 < nq && !(d_fiber_[p][qi + 1] * d_fiber_[p][qi]).is_zero()) {
        throw InvariantError("double complex: d_F∘d_F != 0 at (p,q) = (" + std::to_string(p) +
                             "," + std::to_string(q) + ")");
      }
      if (p + 1 < np && q + 1 < nq &&
          !(d_fiber_[p + 1][qi] * delta_[p][qi] == delta_[p][qi + 1] * d_fiber_[p][qi])) {
        throw InvariantError("double complex: δ and d_F do not commute at (p,q) = (" +
                             std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
  }
}

std::size_t DoubleComplex::dim(std::size_t p, int q) const {
  if (q < 0) return 0;
  std::size_t n = 0;
  for (const auto& t : cover_.tuples(p)) n += cover_.intersection.at(t).size();
  return n * model_.fiber().count(q);
}

std::size_t DoubleComplex::tuple_offset(std::size_t p, std::size_t t, int q) const {
  return block_offsets(model_, cover_, p, q).at(t);
}

RationalMatrix DoubleComplex::horizontal(std::size_t p, int q) const {
  if (p < delta_.size() && q >= 0 && static_cast<std::size_t>(q) < delta_[p].size()) {
    return delta_[p][static_cast<std::size_t>(q)];
  }
  return RationalMatrix(dim(p + 1, q), dim(p, q));
}

RationalMatrix DoubleComplex::vertical(std::size_t p, int q) const {
  if (p < d_fiber_.size() && q >= 0 && static_cast<std::size_t>(q) < d_fiber_[p].size()) {
    return d_fiber_[p][static_cast<std::size_t>(q)];
  }
  return RationalMatrix(dim(p, q + 1), dim(p, q));
}

DoubleComplex build_double_complex(const ProductFoliationModel& m, const ProductCover& cover) {
  return DoubleComplex(m, cover);
}

TotalComplex total_complex(const DoubleComplex& d) {
  const std::size_t np = d.columns();
  const std::size_t nq = d.rows();
  const std::size_t top = np + nq - 2;
  TotalComplex total;
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<std::size_t> off(np + 1, 0);
    for (std::size_t p = 0; p < np; ++p) {
      const int q = static_cast<int>(n) - static_cast<int>(p);
      off[p + 1] = off[p] + (q >= 0 ? d.dim(p, q) : 0);
    }
    dims.push_back(off[np]);
    total.block_offset.push_back(std::move(off));
  }
  std::vector<RationalMatrix> ds;
  for (std::size_t n = 0; n < top; ++n) {
    RationalMatrix dn(dims[n + 1], dims[n]);
    for (std::size_t p = 0; p < np && p <= n; ++p) {
      const int q = static_cast<int>(n - p);
      const std::size_t col = total.block_offset[n][p];
      if (p + 1 < np) dn.add_block(total.block_offset[n + 1][p + 1], col, d.horizontal(p, q));
      const Rational sign = (p % 2 == 0) ? 1 : -1;
      dn.add_block(total.block_offset[n + 1][p], col, d.vertical(p, q), sign);
    }
    ds.push_back(std::move(dn));
  }
  total.complex = CochainComplex(std::move(dims), std::move(ds));
  return total;
}

std::vector<std::size_t> total_cohomology(const DoubleComplex& d) {
  return cohomology_dims(total_complex(d).complex);
}

ComplexMap restriction_map(const DoubleComplex& d, const TotalComplex& total,
                           const CochainComplex& vertical) {
  const auto& m = d.model();
  const auto& charts = d.cover().tuples(0);
  std::vector<RationalMatrix> parts;
  for (std::size_t n = 0; n < total.complex.length(); ++n) {
    const int q = static_cast<int>(n);
    RationalMatrix r(total.complex.dim(q), vertical.dim(q));
    const std::size_t cells = m.fiber().count(q);
    if (vertical.dim(q) > 0) {
      for (std::size_t a = 0; a < charts.size(); ++a) {
        const std::size_t base = total.block_offset[n][0] + d.tuple_offset(0, a, q);
        const auto& points = d.cover().intersection.at(charts[a]);
        for (std::size_t k = 0; k < points.size(); ++k) {
          for (std::size_t s = 0; s < cells; ++s) {
            r.set(base + k * cells + s, m.form_index(points[k], q, s), 1);
          }
        }
      }
    }
    parts.push_back(std::move(r));
  }
  return ComplexMap(vertical, total.complex, std::move(parts));
}

RationalVector collapse_cocycle(const ProductFoliationModel& m, const ProductCover& cover,
                                const PartitionOfUnity& pou, std::size_t p, int q,
                                const RationalVector& w) {
  if (p == 0) throw InputError("collapse needs p >= 1");
  const auto src_off = block_offsets(m, cover, p, q);
  if (w.size() != src_off.back()) throw InputError("cochain has the wrong size for K^{p,q}");
  if (!is_zero(cech_delta(m, cover, p, q).apply(w))) {
    throw InputError("collapse: the cochain is not a δ-cocycle");
  }
  validate_partition(cover, m.base_points(), pou);

  const auto dst_off = block_offsets(m, cover, p - 1, q);
  const std::size_t n = m.fiber().count(q);
  RationalVector out(dst_off.back());
  const auto& lower = cover.tuples(p - 1);
  for (std::size_t t = 0; t < lower.size(); ++t) {
    const auto& tuple = lower[t];
    const auto& points = cover.intersection.at(tuple);
    for (std::size_t alpha = 0; alpha < cover.subsets.size(); ++alpha) {
      if (std::binary_search(tuple.begin(), tuple.end(), alpha)) continue;  // repeated index
      std::vector<std::size_t> longer = tuple;
      const auto at = std::lower_bound(longer.begin(), longer.end(), alpha);
      const std::size_t slot = static_cast<std::size_t>(at - longer.begin());
      longer.insert(at, alpha);
      if (!cover.intersection.count(longer)) continue;
      const Rational sign = (slot % 2 == 0) ? 1 : -1;
      const std::size_t s_pos = tuple_position(cover, p, longer);
      const auto& longer_points = cover.intersection.at(longer);
      for (std::size_t a = 0; a < points.size(); ++a) {
        const std::size_t x = points[a];
        const Rational& theta = pou.weights[alpha][x];
        if (theta == 0 || !contains(longer_points, x)) continue;
        const std::size_t b = position_of(longer_points, x);
        for (std::size_t s = 0; s < n; ++s) {
          const Rational& value = w[src_off[s_pos] + b * n + s];
          if (value != 0) out[dst_off[t] + a * n + s] += sign * theta * value;
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> cech_row_cohomology(const FoliatedCoverModel& c) {
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> ds;
  for (std::size_t p = 0; p <= c.max_degree(); ++p) {
    std::size_t n = 0;
    for (std::size_t k : c.tuples_of_degree(p)) n += c.tuples()[k].leaves.size();
    dims.push_back(n);
  }
  for (std::size_t p = 0; p < c.max_degree(); ++p) ds.push_back(cech_delta(c, p));
  return cohomology_dims(CochainComplex(std::move(dims), std::move(ds)));
}

std::string MayerVietorisReport::to_json() const {
  nlohmann::json j;
  j["degrees"] = degrees;
  j["vertical"] = vertical;
  j["total"] = total;
  j["cech_row"] = cech_row;
  j["r_star_ranks"] = r_star_ranks;
  j["cech_row_applicable"] = cech_row_applicable;
  j["verdict"] = passed ? "pass" : "fail";
  return j.dump(2);
}

MayerVietorisReport compare_with_vertical(const ProductFoliationModel& m,
                                          const std::vector<std::vector<std::size_t>>& subsets) {
  const ProductCoverModels models = cover_from_base_subsets(m, subsets);
  const DoubleComplex dc(m, models.cover);
  const TotalComplex total = total_complex(dc);
  const CochainComplex vertical = vertical_differential(m).complex;
  const ComplexMap r = restriction_map(dc, total, vertical);

  MayerVietorisReport report;
  auto vertical_dims = cohomology_dims(vertical);
  auto total_dims = cohomology_dims(total.complex);
  auto row_dims = cech_row_cohomology(models.leaves);
  const std::size_t len = std::max({vertical_dims.size(), total_dims.size(), row_dims.size()});
  vertical_dims.resize(len, 0);
  total_dims.resize(len, 0);
  row_dims.resize(len, 0);

  bool ok = vertical_dims == total_dims;
  for (std::size_t n = 0; n < len; ++n) {
    const int q = static_cast<int>(n);
    report.degrees.push_back(q);
    std::size_t rk = 0;
    if (n < total.complex.length()) {
      const RationalMatrix induced = induced_map(r, vertical, total.complex, q);
      rk = rank(induced);
      ok = ok && induced.rows() == induced.cols() && rk == induced.cols();
    }
    report.r_star_ranks.push_back(rk);
    ok = ok && rk == vertical_dims[n];
  }

  const auto fiber_betti = vertical_dims;  // base_points copies of the fiber Betti numbers
  report.cech_row_applicable =
      std::all_of(fiber_betti.begin() + 1, fiber_betti.end(), [](std::size_t b) { return b == 0; });
  if (report.cech_row_applicable) ok = ok && row_dims == vertical_dims;

  // Drop trailing degrees past the fiber dimension where everything vanishes.
  const std::size_t keep = vertical.length();
  while (report.degrees.size() > keep && vertical_dims.back() == 0 && total_dims.back() == 0 &&
         row_dims.back() == 0 && report.r_star_ranks.back() == 0) {
    report.degrees.pop_back();
    report.r_star_ranks.pop_back();
    vertical_dims.pop_back();
    total_dims.pop_back();
    row_dims.pop_back();
  }

  report.vertical = std::move(vertical_dims);
  report.total = std::move(total_dims);
  report.cech_row = std::move(row_dims);
  report.passed = ok;
  return report;
}

}  // namespace foliacoh
