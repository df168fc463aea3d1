// Independent reference computations for the unit and acceptance suites.
// Everything here is written from the definitions with dense storage and
// shares no code with the library's elimination or coboundary routines.
#ifndef FOLIACOH_TESTS_ORACLES_HPP
#define FOLIACOH_TESTS_ORACLES_HPP

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "foliacoh/ratlinalg.hpp"
#include "foliacoh/simplicial.hpp"

namespace oracle {

using foliacoh::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const foliacoh::RationalMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (const auto& [key, v] : m.entries()) d[key.first][key.second] = v;
  return d;
}

// Plain Gaussian elimination on a dense copy.
inline std::size_t rank(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const foliacoh::RationalMatrix& m) { return rank(to_dense(m)); }

inline foliacoh::RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                              double density, long range = 4) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 3);
  foliacoh::RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng) < density) m.set(i, j, foliacoh::make_rational(num(rng), den(rng)));
    }
  }
  return m;
}

// Low-rank product so that kernels and quotients are nontrivial.
inline foliacoh::RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                std::size_t inner) {
  return random_matrix(rng, rows, inner, 0.7) * random_matrix(rng, inner, cols, 0.7);
}

// Coboundary straight from the definition: (dφ)(σ) = Σ_i (-1)^i φ(σ minus v_i).
inline Dense coboundary(const foliacoh::SimplicialComplex& k, int q) {
  const auto& hi = k.simplices(q + 1);
  const auto& lo = k.simplices(q);
  std::map<foliacoh::Simplex, std::size_t> where;
  for (std::size_t j = 0; j < lo.size(); ++j) where[lo[j]] = j;
  Dense d(hi.size(), std::vector<Rational>(lo.size()));
  for (std::size_t r = 0; r < hi.size(); ++r) {
    for (std::size_t i = 0; i < hi[r].size(); ++i) {
      foliacoh::Simplex face = hi[r];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      d[r][where.at(face)] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

// Betti numbers over Q from dense ranks of the defining coboundaries.
inline std::vector<std::size_t> betti(const foliacoh::SimplicialComplex& k) {
  std::vector<std::size_t> out;
  const int top = k.dimension();
  for (int q = 0; q <= top; ++q) {
    const std::size_t n = k.count(q);
    const std::size_t r_out = q < top ? rank(coboundary(k, q)) : 0;
    const std::size_t r_in = q > 0 ? rank(coboundary(k, q - 1)) : 0;
    out.push_back(n - r_out - r_in);
  }
  return out;
}

}  // namespace oracle

#endif  // FOLIACOH_TESTS_ORACLES_HPP
