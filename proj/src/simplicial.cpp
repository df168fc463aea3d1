#include "foliacoh/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "foliacoh/errors.hpp"

namespace foliacoh {

namespace {

std::string format_simplex(const Simplex& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

Simplex remove_vertex(const Simplex& s, std::size_t i) {
  Simplex face;
  face.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != i) face.push_back(s[j]);
  }
  return face;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::size_t vertices,
                                                  std::vector<Simplex> generators) {
  std::set<Simplex> all;
  for (std::size_t v = 0; v < vertices; ++v) all.insert(Simplex{v});
  for (auto g : generators) {
    std::sort(g.begin(), g.end());
    if (g.empty() || std::adjacent_find(g.begin(), g.end()) != g.end()) {
      throw InputError("simplex " + format_simplex(g) + " is empty or repeats a vertex");
    }
    if (g.back() >= vertices) throw InputError("simplex " + format_simplex(g) + " uses an unknown vertex");
    // Every nonempty subset of g.
    const std::size_t n = g.size();
    if (n > 20) throw InputError("simplex dimension too large");
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) face.push_back(g[i]);
      }
      all.insert(std::move(face));
    }
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (const auto& s : all) {
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].push_back(s);
  }
  return SimplicialComplex(vertices, std::move(by_dim));
}

SimplicialComplex::SimplicialComplex(std::size_t vertices,
                                     std::vector<std::vector<Simplex>> by_dimension)
    : vertices_(vertices), by_dim_(std::move(by_dimension)) {
  while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
  for (std::size_t q = 0; q < by_dim_.size(); ++q) {
    for (const auto& s : by_dim_[q]) {
      if (s.size() != q + 1) {
        throw InputError("simplex " + format_simplex(s) + " listed under the wrong dimension");
      }
      if (!std::is_sorted(s.begin(), s.end()) ||
          std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw InputError("simplex " + format_simplex(s) + " is not strictly increasing");
      }
      if (s.back() >= vertices_) {
        throw InputError("simplex " + format_simplex(s) + " uses an unknown vertex");
      }
    }
  }
  if (vertices_ > 0 && (by_dim_.empty() || by_dim_[0].size() != vertices_)) {
    throw InputError("every vertex must be listed as a 0-simplex");
  }
  build_index();
  for (std::size_t q = 1; q < by_dim_.size(); ++q) {
    for (const auto& s : by_dim_[q]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!contains(remove_vertex(s, i))) {
          throw InputError("face of " + format_simplex(s) + " is missing");
        }
      }
    }
  }
}

void SimplicialComplex::build_index() {
  index_.clear();
  for (const auto& layer : by_dim_) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (!index_.emplace(layer[i], i).second) {
        throw InputError("duplicate simplex " + format_simplex(layer[i]));
      }
    }
  }
}

std::size_t SimplicialComplex::count(int q) const {
  if (q < 0 || static_cast<std::size_t>(q) >= by_dim_.size()) return 0;
  return by_dim_[static_cast<std::size_t>(q)].size();
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

const Simplex& SimplicialComplex::simplex(int q, std::size_t index) const {
  return by_dim_.at(static_cast<std::size_t>(q)).at(index);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> empty;
  if (q < 0 || static_cast<std::size_t>(q) >= by_dim_.size()) return empty;
  return by_dim_[static_cast<std::size_t>(q)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RationalMatrix SimplicialComplex::coboundary(int q) const {
  RationalMatrix d(count(q + 1), count(q));
  if (q < 0) return d;
  const auto& upper = simplices(q + 1);
  for (std::size_t row = 0; row < upper.size(); ++row) {
    const Simplex& s = upper[row];
    for (std::size_t i = 0; i < s.size(); ++i) {
      d.set(row, *index_of(remove_vertex(s, i)), (i % 2 == 0) ? 1 : -1);
    }
  }
  return d;
}

std::vector<std::size_t> SimplicialComplex::component_of_vertex() const {
  std::vector<std::size_t> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : simplices(1)) {
    parent[find_root(parent, e[0])] = find_root(parent, e[1]);
  }
  std::map<std::size_t, std::size_t> label;
  std::vector<std::size_t> comp(vertices_);
  for (std::size_t v = 0; v < vertices_; ++v) {
    const std::size_t root = find_root(parent, v);
    auto it = label.try_emplace(root, label.size()).first;
    comp[v] = it->second;
  }
  return comp;
}

std::size_t SimplicialComplex::components() const {
  const auto comp = component_of_vertex();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

namespace complexes {

SimplicialComplex point() { return SimplicialComplex::from_maximal(1, {}); }

SimplicialComplex disjoint_points(std::size_t n) { return SimplicialComplex::from_maximal(n, {}); }

SimplicialComplex cycle(std::size_t n) {
  if (n < 3) throw InputError("a simplicial circle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return SimplicialComplex::from_maximal(n, std::move(edges));
}

SimplicialComplex full_simplex(std::size_t d) {
  Simplex s(d + 1);
  std::iota(s.begin(), s.end(), 0);
  return SimplicialComplex::from_maximal(d + 1, {s});
}

SimplicialComplex path(std::size_t n) {
  if (n == 0) throw InputError("a path needs at least one vertex");
  std::vector<Simplex> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return SimplicialComplex::from_maximal(n, std::move(edges));
}

SimplicialComplex torus() {
  auto id = [](std::size_t i, std::size_t j) { return 3 * (i % 3) + (j % 3); };
  std::vector<Simplex> triangles;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal(9, std::move(triangles));
}

SimplicialComplex cylinder(const SimplicialComplex& k) {
  std::vector<Simplex> prisms;
  for (int q = 0; q <= k.dimension(); ++q) {
    for (const auto& s : k.simplices(q)) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex p;
        for (std::size_t j = 0; j <= i; ++j) p.push_back(2 * s[j]);
        for (std::size_t j = i; j < s.size(); ++j) p.push_back(2 * s[j] + 1);
        prisms.push_back(std::move(p));
      }
    }
  }
  return SimplicialComplex::from_maximal(2 * k.vertex_count(), std::move(prisms));
}

}  // namespace complexes

}  // namespace foliacoh
