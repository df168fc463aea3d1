#ifndef FOLIACOH_SIMPLICIAL_HPP
#define FOLIACOH_SIMPLICIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "foliacoh/ratlinalg.hpp"

namespace foliacoh {

/// Strictly increasing vertex ids.
using Simplex = std::vector<std::size_t>;

/// Finite ordered simplicial complex on vertices 0..n-1. Every vertex is a
/// 0-simplex and every face of a listed simplex is listed.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the generators. Generators are sorted; repeated
  /// vertices inside a generator are rejected.
  static SimplicialComplex from_maximal(std::size_t vertices, std::vector<Simplex> generators);

  /// Validating constructor from explicit per-dimension lists.
  SimplicialComplex(std::size_t vertices, std::vector<std::vector<Simplex>> by_dimension);

  std::size_t vertex_count() const { return vertices_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int q) const;
  std::size_t total_simplices() const;
  const Simplex& simplex(int q, std::size_t index) const;
  const std::vector<Simplex>& simplices(int q) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// (d φ)(σ) = Σ_i (-1)^i φ(σ with vertex i removed); shape count(q+1) x count(q).
  RationalMatrix coboundary(int q) const;

  std::vector<std::size_t> component_of_vertex() const;
  std::size_t components() const;

 private:
  void build_index();

  std::size_t vertices_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

namespace complexes {

SimplicialComplex point();
SimplicialComplex disjoint_points(std::size_t n);
/// Boundary of an n-gon (n >= 3): a circle.
SimplicialComplex cycle(std::size_t n);
/// Full d-simplex with all faces.
SimplicialComplex full_simplex(std::size_t d);
/// Path with n vertices.
SimplicialComplex path(std::size_t n);
/// 9-vertex, 18-triangle torus from the 3x3 grid with opposite sides identified.
SimplicialComplex torus();

/// Prism K x [0,1] with vertex (v, j) numbered 2v + j, triangulated by the
/// staircase subdivision of each prism simplex.
SimplicialComplex cylinder(const SimplicialComplex& k);

}  // namespace complexes

}  // namespace foliacoh

#endif  // FOLIACOH_SIMPLICIAL_HPP
