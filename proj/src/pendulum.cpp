#include "foliacoh/pendulum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "foliacoh/errors.hpp"
#include "foliacoh/foliation_models.hpp"
#include "foliacoh/ratlinalg.hpp"
#include "foliacoh/simplicial.hpp"
#include "foliacoh/vertical_calculus.hpp"

namespace foliacoh::pendulum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStateTol = 1e-12;
constexpr double kPoleClip = 1e-9;
constexpr double kUMax = 1e6;
// Tolerance for deciding that e touches min V_i.
constexpr double kTangencyTol = 1e-9;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

PendulumState::PendulumState(const Vec3& x, const Vec3& v) : x_(x), v_(v) {
  for (double c : x) {
    if (!std::isfinite(c)) throw InputError("state position is not finite");
  }
  for (double c : v) {
    if (!std::isfinite(c)) throw InputError("state velocity is not finite");
  }
  if (std::abs(std::sqrt(dot(x, x)) - 1.0) > kStateTol) throw InputError("state position is not on the unit sphere");
  if (std::abs(dot(x, v)) > kStateTol) throw InputError("state velocity is not tangent to the sphere");
}

PendulumState PolarState::to_cartesian() const {
  if (!(phi > 0 && phi < kPi)) throw InputError("polar angle must lie in (0, pi)");
  const double sp = std::sin(phi), cp = std::cos(phi), st = std::sin(theta), ct = std::cos(theta);
  const Vec3 x{sp * ct, sp * st, cp};
  const Vec3 v{cp * ct * phi_dot - sp * st * theta_dot, cp * st * phi_dot + sp * ct * theta_dot, -sp * phi_dot};
  return PendulumState(x, v);
}

double energy(const PendulumState& s) { return 0.5 * dot(s.v(), s.v()) + s.x()[2]; }

double moment(const PendulumState& s) { return s.x()[0] * s.v()[1] - s.v()[0] * s.x()[1]; }

double energy(const PolarState& s) {
  const double sp = std::sin(s.phi);
  return 0.5 * (s.phi_dot * s.phi_dot + sp * sp * s.theta_dot * s.theta_dot) + std::cos(s.phi);
}

double moment(const PolarState& s) {
  const double sp = std::sin(s.phi);
  return sp * sp * s.theta_dot;
}

double effective_potential(double i, double phi) {
  if (!(phi > 0 && phi < kPi)) throw InputError("effective potential needs phi in (0, pi)");
  const double sp = std::sin(phi);
  return i * i / (2 * sp * sp) + std::cos(phi);
}

double EffectivePotentialProfile::derivative(double phi) const {
  if (!(phi > 0 && phi < kPi)) throw InputError("effective potential needs phi in (0, pi)");
  const double sp = std::sin(phi);
  return -i_ * i_ * std::cos(phi) / (sp * sp * sp) - sp;
}

std::vector<std::pair<double, double>> EffectivePotentialProfile::samples(double lo, double hi,
                                                                          std::size_t n) const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    out.emplace_back(phi, (*this)(phi));
  }
  return out;
}

std::pair<double, double> EffectivePotentialProfile::minimum() const {
  if (i_ == 0) return {kPi, -1.0};
  // V_i' < 0 at π/2 and -> +inf at π; the root is unique there.
  double lo = kPi / 2, hi = kPi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (derivative(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double phi = 0.5 * (lo + hi);
  return {phi, (*this)(phi)};
}

std::pair<double, double> bifurcation_curve(double alpha) {
  if (!std::isfinite(alpha) || std::abs(alpha) < 1) throw InputError("bifurcation curve needs |alpha| >= 1");
  const double a2 = alpha * alpha;
  return {0.5 * a2 - 1.5 / a2, alpha - 1.0 / (a2 * alpha)};
}

std::string to_string(CircleKind k) {
  switch (k) {
    case CircleKind::Maximal: return "maximal";
    case CircleKind::Minimal: return "minimal";
    case CircleKind::Saddle: return "saddle";
  }
  return "?";
}

double solve_u(double e) {
  auto g = [e](double u) { return u - 3.0 / u - 2.0 * e; };
  auto dg = [](double u) { return 1.0 + 3.0 / (u * u); };
  double lo = 1e-300, hi = kUMax;
  if (g(hi) < 0) throw InputError("energy too large for the critical-circle solver");
  double u = std::clamp(std::abs(e) + 2.0, lo, hi);
  for (int it = 0; it < 400; ++it) {
    const double gu = g(u);
    if (gu == 0) return u;
    if (gu < 0) {
      lo = u;
    } else {
      hi = u;
    }
    double next = u - gu / dg(u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 1e-15 * std::max(1.0, u)) return next;
    u = next;
  }
  return u;
}

std::vector<CriticalCircle> critical_circles(double e) {
  if (!std::isfinite(e) || e <= -1) return {};
  const double u = solve_u(e);
  if (u <= 1) return {};
  const double phi0 = std::acos(-1.0 / u);
  const double s = std::sin(phi0);
  const double w = std::sqrt(u);
  return {CriticalCircle{phi0, w, s * s * w, CircleKind::Maximal},
          CriticalCircle{phi0, -w, -s * s * w, CircleKind::Minimal}};
}

std::string to_string(FiberKind k) {
  switch (k) {
    case FiberKind::Empty: return "empty";
    case FiberKind::Torus: return "torus";
    case FiberKind::Circle: return "circle";
  }
  return "?";
}

FiberClassification fiber_components(double e, double i) {
  if (!std::isfinite(e) || !std::isfinite(i)) throw InputError("energy and moment must be finite");
  FiberClassification out;
  const EffectivePotentialProfile v(i);
  const double vmin = v.minimum().second;
  if (vmin > e + kTangencyTol) {
    out.diagnostic = "outside the moment image: min V_i exceeds e";
    return out;
  }
  if (i == 0 && std::abs(e - 1.0) <= kTangencyTol) {
    out.count = 1;
    out.kind = FiberKind::Torus;
    out.critical = true;
    out.diagnostic = "discarded singular value (E, I) = (1, 0)";
    return out;
  }
  if (std::abs(vmin - e) <= kTangencyTol) {
    out.count = 1;
    out.kind = FiberKind::Circle;
    out.critical = true;
    out.diagnostic = i == 0 ? "equilibrium at the south pole" : "on the bifurcation curve";
    return out;
  }
  // Count sublevel runs of V_i on a grid. For i = 0 the clipped ends count as
  // interior: the pole fibers belong to the same torus.
  // The minimizer is added so that thin wells near the pole are not missed.
  constexpr std::size_t n = 4096;
  const double lo = kPoleClip, hi = kPi - kPoleClip;
  std::vector<double> grid;
  for (std::size_t k = 0; k < n; ++k) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1));
  }
  grid.push_back(std::clamp(v.minimum().first, lo, hi));
  std::sort(grid.begin(), grid.end());
  bool inside = false;
  for (double phi : grid) {
    const bool below = v(phi) <= e;
    if (below && !inside) ++out.count;
    inside = below;
  }
  out.kind = out.count == 0 ? FiberKind::Empty : FiberKind::Torus;
  return out;
}

double i_max(double e) {
  if (!std::isfinite(e) || e <= -1) throw InputError("i_max needs e > -1");
  auto min_v = [](double i) { return EffectivePotentialProfile(i).minimum().second; };
  double lo = 0, hi = 1;
  while (min_v(hi) < e) {
    lo = hi;
    hi *= 2;
    if (hi > 1e8) throw InputError("energy too large");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (min_v(mid) < e) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string label(AtomType t) {
  switch (t) {
    case AtomType::A: return "A";
    case AtomType::Saddle: return "B";
    case AtomType::Torus: return "T";
    case AtomType::KleinBottle: return "K";
  }
  return "?";
}

std::string RMark::to_string() const { return infinite ? "inf" : value.get_str(); }

std::string MoleculeGraph::factor_set() const {
  if (atoms.empty()) return "empty";
  std::vector<std::size_t> degree(atoms.size(), 0);
  std::vector<std::size_t> parent(atoms.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t merges = 0;
  for (const auto& e : edges) {
    ++degree[e.from];
    ++degree[e.to];
    const auto a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  const bool tree = merges + 1 == atoms.size() && edges.size() + 1 == atoms.size();
  if (!tree) return "graph";
  if (atoms.size() == 1) return "point";
  const bool path = std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d <= 2; });
  return path ? "segment" : "graph";
}

MoleculeGraph build_molecule(double e, std::size_t sweep_points) {
  if (!std::isfinite(e) || e <= -1) throw InputError("molecule needs e > -1");
  if (e == 1) throw InputError("e = 1 is a critical energy level");
  if (sweep_points < 3) throw InputError("sweep needs at least 3 points");

  const auto circles = critical_circles(e);
  const double top = i_max(e);
  MoleculeGraph mol;

  // Vertices: values of i where the fiber degenerates, ordered by i.
  struct Vertex {
    double i;
    CircleKind kind;
  };
  std::vector<Vertex> vertices;
  for (const auto& c : circles) vertices.push_back({c.i, c.kind});
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.i < b.i; });
  for (const auto& v : vertices) {
    const auto f = fiber_components(e, v.i);
    if (f.kind != FiberKind::Circle) throw InvariantError("critical circle does not give a degenerate fiber");
    if (std::abs(std::abs(v.i) - top) > 1e-6) throw InvariantError("critical circle off the moment-image boundary");
    mol.atoms.push_back(Atom{AtomType::A, v.kind, v.i});
  }

  // Sweep strictly between consecutive vertices; each run of constant torus
  // count c contributes c edges.
  RMark mark;
  if (e > 1) {
    mark.value = make_rational(1, 2);
    mol.gluing = std::array<int, 4>{1, 2, 1, 1};
  }
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const double a = vertices[k].i, b = vertices[k + 1].i;
    std::optional<std::size_t> count;
    for (std::size_t s = 1; s + 1 < sweep_points; ++s) {
      const double i = a + (b - a) * static_cast<double>(s) / static_cast<double>(sweep_points - 1);
      const auto f = fiber_components(e, i);
      if (f.kind != FiberKind::Torus) throw InvariantError("non-torus fiber between critical circles");
      if (count && *count != f.count) throw InvariantError("torus count changes between critical circles");
      count = f.count;
    }
    for (std::size_t c = 0; c < count.value_or(0); ++c) mol.edges.push_back(MoleculeEdge{k, k + 1, mark});
  }
  return mol;
}

std::size_t h0_partition(const MoleculeGraph& mol, std::size_t nodes_per_edge) {
  // Unknowns: per edge two endpoint copies and the interior nodes; per
  // isolated vertex one value. Constraints: endpoint copies of a vertex agree.
  const std::size_t per_edge = nodes_per_edge + 2;
  std::vector<std::vector<std::size_t>> copies(mol.atoms.size());
  std::size_t vars = 0;
  for (const auto& e : mol.edges) {
    if (e.from >= mol.atoms.size() || e.to >= mol.atoms.size()) throw InputError("edge endpoint out of range");
    copies[e.from].push_back(vars);
    copies[e.to].push_back(vars + per_edge - 1);
    vars += per_edge;
  }
  for (const auto& c : copies) {
    if (c.empty()) ++vars;
  }
  RationalMatrix constraints(0, vars);
  std::size_t row = 0;
  for (const auto& c : copies) {
    for (std::size_t k = 1; k < c.size(); ++k) {
      RationalMatrix r(1, vars);
      r.set(0, c[0], 1);
      r.set(0, c[k], -1);
      constraints = vstack(constraints, r);
      ++row;
    }
  }
  return vars - (row == 0 ? 0 : rank(constraints));
}

std::vector<std::vector<std::size_t>> regular_part_vertical_cohomology(const MoleculeGraph& mol,
                                                                       std::size_t base_nodes_per_edge) {
  std::vector<std::vector<std::size_t>> out;
  if (mol.edges.empty()) return out;
  std::vector<std::size_t> dims(3, 0);
  if (base_nodes_per_edge > 0) {
    dims = vertical_cohomology(make_product_model(base_nodes_per_edge, complexes::torus()));
  }
  for (std::size_t k = 0; k < mol.edges.size(); ++k) out.push_back(dims);
  return out;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

AlphaRange parse_alpha_range(const std::string& text) {
  AlphaRange r;
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InputError("alpha range must be start:end:count");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, c1), b = text.substr(c1 + 1, c2 - c1 - 1), n = text.substr(c2 + 1);
    r.start = std::stod(a, &used);
    if (used != a.size()) throw InputError("bad alpha range start");
    r.end = std::stod(b, &used);
    if (used != b.size()) throw InputError("bad alpha range end");
    const long long count = std::stoll(n, &used);
    if (used != n.size() || count < 1) throw InputError("alpha range count must be a positive integer");
    r.count = static_cast<std::size_t>(count);
  } catch (const std::logic_error&) {
    throw InputError("alpha range must be start:end:count");
  }
  if (!std::isfinite(r.start) || !std::isfinite(r.end)) throw InputError("alpha range bounds must be finite");
  return r;
}

std::string bifurcation_csv(const AlphaRange& range) {
  std::ostringstream os;
  os << "alpha,E,I\n";
  for (std::size_t k = 0; k < range.count; ++k) {
    const double alpha =
        range.count == 1 ? range.start
                         : range.start + (range.end - range.start) * static_cast<double>(k) /
                                             static_cast<double>(range.count - 1);
    const auto [e, i] = bifurcation_curve(alpha);
    os << format12(alpha) << ',' << format12(e) << ',' << format12(i) << '\n';
  }
  return os.str();
}

std::string critical_json(double e) {
  if (!std::isfinite(e)) throw InputError("energy must be finite");
  nlohmann::json j;
  j["energy"] = round12(e);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : critical_circles(e)) {
    list.push_back({{"phi0", round12(c.phi0)},
                    {"theta_dot", round12(c.theta_dot)},
                    {"i", round12(c.i)},
                    {"kind", to_string(c.kind)}});
  }
  j["circles"] = list;
  if (list.empty()) j["diagnostic"] = "no relative equilibria for e <= -1";
  return j.dump(2) + "\n";
}

std::string molecule_dot(const MoleculeGraph& mol) {
  std::ostringstream os;
  os << "graph molecule {\n";
  os << "  graph [factor_set=\"" << mol.factor_set() << "\"];\n";
  for (std::size_t k = 0; k < mol.atoms.size(); ++k) {
    os << "  a" << k << " [label=\"" << label(mol.atoms[k].type) << "\", circle=\""
       << to_string(mol.atoms[k].kind) << "\"];\n";
  }
  for (const auto& e : mol.edges) {
    os << "  a" << e.from << " -- a" << e.to << " [label=\"r=" << e.r.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string h0_json(double e, std::size_t nodes_per_edge) {
  const MoleculeGraph mol = build_molecule(e);
  nlohmann::json j;
  j["energy"] = round12(e);
  j["nodes_per_edge"] = nodes_per_edge;
  j["factor_set"] = mol.factor_set();
  j["atoms"] = mol.atoms.size();
  j["edges"] = mol.edges.size();
  j["h0_dimension"] = h0_partition(mol, nodes_per_edge);
  j["regular_part_vertical"] = regular_part_vertical_cohomology(mol, nodes_per_edge);
  return j.dump(2) + "\n";
}

DiscrepancyTable discrepancy_table(const std::vector<double>& energies) {
  DiscrepancyTable t;
  const double r13 = std::sqrt(13.0);
  t.half_closed_phi0 = std::acos((1 - r13) / 6);
  t.half_closed_theta_dot = std::sqrt((r13 + 1) / 2);
  const auto half = critical_circles(0.5);
  t.half_oracle_phi0 = half.at(0).phi0;
  t.half_oracle_theta_dot = half.at(0).theta_dot;
  t.half_phi0_error = std::abs(t.half_oracle_phi0 - t.half_closed_phi0);
  t.half_theta_dot_error = std::abs(t.half_oracle_theta_dot - t.half_closed_theta_dot);

  for (double e : energies) {
    const auto circles = critical_circles(e);
    if (circles.empty()) continue;
    DiscrepancyRow row;
    row.e = e;
    row.oracle_phi0 = circles[0].phi0;
    row.oracle_theta_dot = circles[0].theta_dot;
    const double alpha = e;
    const double root = std::sqrt(alpha * alpha + 12);
    const double c = (alpha - root) / 3;
    if (c >= -1 && c <= 1) {
      row.formula_phi0 = std::acos(c);
      row.phi0_error = std::abs(*row.formula_phi0 - row.oracle_phi0);
    }
    row.formula_theta_dot = std::sqrt(3 / (root - alpha));
    row.theta_dot_error = std::abs(row.formula_theta_dot - row.oracle_theta_dot);
    t.rows.push_back(row);
  }
  return t;
}

std::string DiscrepancyTable::to_csv() const {
  std::ostringstream os;
  os << "e,oracle_phi0,formula_phi0,phi0_error,oracle_theta_dot,formula_theta_dot,theta_dot_error\n";
  os << "0.5 (closed form)," << format12(half_oracle_phi0) << ',' << format12(half_closed_phi0) << ','
     << format12(half_phi0_error) << ',' << format12(half_oracle_theta_dot) << ','
     << format12(half_closed_theta_dot) << ',' << format12(half_theta_dot_error) << '\n';
  for (const auto& r : rows) {
    os << format12(r.e) << ',' << format12(r.oracle_phi0) << ','
       << (r.formula_phi0 ? format12(*r.formula_phi0) : "undefined") << ','
       << (r.phi0_error ? format12(*r.phi0_error) : "undefined") << ',' << format12(r.oracle_theta_dot) << ','
       << format12(r.formula_theta_dot) << ',' << format12(r.theta_dot_error) << '\n';
  }
  return os.str();
}

std::string DiscrepancyTable::to_json() const {
  nlohmann::json j;
  j["closed_form_at_half"] = {{"oracle_phi0", round12(half_oracle_phi0)},
                              {"closed_phi0", round12(half_closed_phi0)},
                              {"phi0_error", half_phi0_error},
                              {"oracle_theta_dot", round12(half_oracle_theta_dot)},
                              {"closed_theta_dot", round12(half_closed_theta_dot)},
                              {"theta_dot_error", half_theta_dot_error},
                              {"agrees", agrees_at_half()}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"e", round12(r.e)},
                          {"oracle_phi0", round12(r.oracle_phi0)},
                          {"oracle_theta_dot", round12(r.oracle_theta_dot)},
                          {"formula_theta_dot", round12(r.formula_theta_dot)},
                          {"theta_dot_error", round12(r.theta_dot_error)}};
    row["formula_phi0"] = r.formula_phi0 ? nlohmann::json(round12(*r.formula_phi0)) : nlohmann::json(nullptr);
    row["phi0_error"] = r.phi0_error ? nlohmann::json(round12(*r.phi0_error)) : nlohmann::json(nullptr);
    list.push_back(row);
  }
  j["general_formula_at_alpha_eq_e"] = list;
  return j.dump(2) + "\n";
}

}  // namespace foliacoh::pendulum
