#include "foliacoh/cone_relative.hpp"

#include <algorithm>
#include <json.hpp>

#include "foliacoh/errors.hpp"
#include "foliacoh/vertical_calculus.hpp"

namespace foliacoh {

namespace {

struct ConeParts {
  CochainComplex source;  // Λ(M)
  CochainComplex target;  // Λ(N)
  ConeComplex cone;
  std::size_t length = 0;
};

ConeParts build_cone(const LeafToLeafMap& h) {
  ConeParts parts{vertical_differential(h.source()).complex,
                  vertical_differential(h.target()).complex, {}, 0};
  const auto& m = parts.source;
  const auto& n = parts.target;
  parts.length = std::max(n.length(), m.length() + 1);
  std::vector<std::size_t> dims;
  for (std::size_t q = 0; q < parts.length; ++q) {
    const int d = static_cast<int>(q);
    parts.cone.target_dims.push_back(n.dim(d));
    parts.cone.source_dims.push_back(m.dim(d - 1));
    dims.push_back(n.dim(d) + m.dim(d - 1));
  }
  std::vector<RationalMatrix> ds;
  for (std::size_t q = 0; q + 1 < parts.length; ++q) {
    const int d = static_cast<int>(q);
    RationalMatrix dq(dims[q + 1], dims[q]);
    dq.add_block(0, 0, n.differential(d), -1);
    dq.add_block(n.dim(d + 1), 0, pullback_matrix(h, d));
    dq.add_block(n.dim(d + 1), n.dim(d), m.differential(d - 1));
    ds.push_back(std::move(dq));
  }
  parts.cone.complex = CochainComplex(std::move(dims), std::move(ds));
  return parts;
}

// θ ↦ (0, θ) from Λ^{q-1}(M) into cone degree q.
RationalMatrix alpha_matrix(const ConeParts& c, std::size_t q) {
  const std::size_t top = c.cone.target_dims[q];
  const std::size_t bottom = c.cone.source_dims[q];
  RationalMatrix a(top + bottom, bottom);
  a.add_block(top, 0, RationalMatrix::identity(bottom));
  return a;
}

// (ω, θ) ↦ ω from cone degree q onto Λ^q(N).
RationalMatrix beta_matrix(const ConeParts& c, std::size_t q) {
  const std::size_t top = c.cone.target_dims[q];
  RationalMatrix b(top, top + c.cone.source_dims[q]);
  b.add_block(0, 0, RationalMatrix::identity(top));
  return b;
}

}  // namespace

ConeComplex mapping_cone(const LeafToLeafMap& h) { return build_cone(h).cone; }

std::vector<std::size_t> relative_cohomology(const LeafToLeafMap& h) {
  return cohomology_dims(mapping_cone(h).complex);
}

LongExactSequence long_exact_sequence(const LeafToLeafMap& h) {
  const ConeParts c = build_cone(h);
  const std::size_t len = c.length;
  LongExactSequence les;

  std::vector<QuotientBasis> hm, hn, hf;
  for (std::size_t q = 0; q < len; ++q) {
    const int d = static_cast<int>(q);
    hm.push_back(cohomology_basis(c.source, d));
    hn.push_back(cohomology_basis(c.target, d));
    hf.push_back(cohomology_basis(c.cone.complex, d));
    les.source_cohomology.push_back(hm.back().dim());
    les.target_cohomology.push_back(hn.back().dim());
    les.relative_cohomology.push_back(hf.back().dim());
  }

  les.labels.push_back("0");
  les.dims.push_back(0);
  les.connecting_equals_pullback = true;
  for (std::size_t q = 0; q < len; ++q) {
    const std::string deg = std::to_string(q);
    // Incoming α*: H^{q-1}(M) -> H^q(h); from the leading 0 when q == 0.
    if (q == 0) {
      les.maps.emplace_back(hf[0].dim(), 0);
    } else {
      les.maps.push_back(induced_quotient_map(alpha_matrix(c, q), hm[q - 1], hf[q]));
    }
    les.labels.push_back("H^" + deg + "(f)");
    les.dims.push_back(hf[q].dim());

    les.maps.push_back(induced_quotient_map(beta_matrix(c, q), hf[q], hn[q]));
    les.labels.push_back("H^" + deg + "(N)");
    les.dims.push_back(hn[q].dim());

    const RationalMatrix pull = induced_quotient_map(pullback_matrix(h, static_cast<int>(q)), hn[q], hm[q]);
    les.maps.push_back(pull);
    les.labels.push_back("H^" + deg + "(M)");
    les.dims.push_back(hm[q].dim());

    // Connecting map: lift through β, apply d̄, pull back through α.
    if (hn[q].dim() > 0 && q + 1 < len) {
      const auto lift = solve(beta_matrix(c, q), hn[q].representatives());
      const RationalMatrix image = c.cone.complex.differential(static_cast<int>(q)) * *lift;
      const auto pre = solve(alpha_matrix(c, q + 1), image);
      if (!pre) throw InvariantError("connecting map: d̄ of a lift is not in the image of α");
      const auto coords = hm[q].coordinates(*pre);
      if (!coords || !(*coords == pull)) les.connecting_equals_pullback = false;
    }
  }
  // H^{len-1}(M) -> H^{len}(h) = 0 -> ... closes the sequence.
  les.maps.emplace_back(0, les.dims.back());
  les.labels.push_back("0");
  les.dims.push_back(0);

  les.exactness = check_exactness(les.dims, les.maps);
  return les;
}

bool DegreeBoundReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const BoundClaim& c) { return c.holds; });
}

DegreeBoundReport check_degree_bounds(const LongExactSequence& les, int p, int q_top) {
  DegreeBoundReport report;
  const int len = static_cast<int>(les.relative_cohomology.size());
  auto h_rel = [&](int i) {
    return (i >= 0 && i < len) ? les.relative_cohomology[static_cast<std::size_t>(i)] : 0;
  };
  auto h_tgt = [&](int i) {
    return (i >= 0 && i < len) ? les.target_cohomology[static_cast<std::size_t>(i)] : 0;
  };
  // β*: H^i(h) -> H^i(N) is maps[target_node(i) - 1].
  auto beta_rank = [&](int i) -> std::size_t {
    if (i < 0 || i >= len) return 0;
    return rank(les.maps[les.target_node(static_cast<std::size_t>(i)) - 1]);
  };
  // α*: H^i(M) -> H^{i+1}(h) is maps[source_node(i)].
  auto alpha_rank = [&](int i) -> std::size_t {
    if (i < 0 || i + 1 >= len) return 0;
    return rank(les.maps[les.source_node(static_cast<std::size_t>(i))]);
  };
  auto h_src = [&](int i) {
    return (i >= 0 && i < len) ? les.source_cohomology[static_cast<std::size_t>(i)] : 0;
  };

  report.claims.push_back({"beta* onto in degree p+1", beta_rank(p + 1) == h_tgt(p + 1)});
  report.claims.push_back({"alpha* : H^q(M) -> H^{q+1}(f) onto", alpha_rank(q_top) == h_rel(q_top + 1)});

  const int limit = len + 1;
  bool beta_iso = true;
  for (int i = p + 2; i <= limit; ++i) {
    beta_iso = beta_iso && beta_rank(i) == h_rel(i) && h_rel(i) == h_tgt(i);
  }
  report.claims.push_back({"beta* iso for i > p+1", beta_iso});

  bool alpha_iso = true;
  for (int i = q_top + 1; i <= limit; ++i) {
    alpha_iso = alpha_iso && alpha_rank(i) == h_src(i) && h_src(i) == h_rel(i + 1);
  }
  report.claims.push_back({"alpha* iso for i > q", alpha_iso});

  bool vanish = true;
  for (int i = std::max(p + 1, q_top) + 1; i <= limit; ++i) vanish = vanish && h_rel(i) == 0;
  report.claims.push_back({"H^i(f) = 0 for i > max(p+1, q)", vanish});
  return report;
}

DegreeBoundReport check_degree_bounds(const LeafToLeafMap& h, int p, int q_top) {
  return check_degree_bounds(long_exact_sequence(h), p, q_top);
}

HomotopyInvarianceReport homotopic_maps_equal_relative(const LeafToLeafMap& h1,
                                                       const LeafToLeafMap& h2,
                                                       const LeafToLeafMap& witness) {
  if (!is_homotopy_witness(witness, h1, h2)) {
    throw InputError("homotopy witness does not restrict to the given maps at t = 0 and t = 1");
  }
  // The cylinder has one more fiber dimension, so compare without trailing zeros.
  const auto trim = [](std::vector<std::size_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  HomotopyInvarianceReport report;
  report.first = trim(relative_cohomology(h1));
  report.second = trim(relative_cohomology(h2));
  report.through_homotopy = trim(relative_cohomology(witness));
  report.induced_maps_agree = induced_map_on_cohomology(h1) == induced_map_on_cohomology(h2);
  return report;
}

std::string les_report_json(const LongExactSequence& les, const DegreeBoundReport& bounds) {
  nlohmann::json j;
  std::vector<int> degrees;
  for (std::size_t q = 0; q < les.relative_cohomology.size(); ++q) degrees.push_back(static_cast<int>(q));
  j["degrees"] = degrees;
  j["source"] = les.source_cohomology;
  j["target"] = les.target_cohomology;
  j["relative"] = les.relative_cohomology;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : les.exactness.nodes) {
    nodes.push_back({{"label", les.labels[n.node]},
                     {"dim", n.dim},
                     {"rank_in", n.rank_in},
                     {"kernel_out", n.kernel_out},
                     {"verdict", n.exact() ? "pass" : "fail"}});
  }
  j["nodes"] = nodes;
  j["connecting_equals_pullback"] = les.connecting_equals_pullback;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : bounds.claims) claims.push_back({{"claim", c.claim}, {"verdict", c.holds ? "pass" : "fail"}});
  j["degree_bounds"] = claims;
  const bool ok = les.exactness.exact() && les.connecting_equals_pullback && bounds.passed();
  j["verdict"] = ok ? "pass" : "fail";
  return j.dump(2);
}

}  // namespace foliacoh
