#ifndef FOLIACOH_RATLINALG_HPP
#define FOLIACOH_RATLINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "foliacoh/rational.hpp"

namespace foliacoh {

/// Sparse matrix over Q in triplet form. Zero entries are never stored.
class RationalMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix scalar(std::size_t n, const Rational& s);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add_to(std::size_t r, std::size_t c, const Rational& v);

  const std::map<Key, Rational>& entries() const { return entries_; }

  RationalVector column(std::size_t c) const;
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;
  RationalMatrix scaled(const Rational& s) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Adds `b` into this matrix with its top-left corner at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const RationalMatrix& b, const Rational& scale = 1);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Rational> entries_;
};

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form of a sparse matrix. Row i has its leading 1 in
/// column pivots[i]; every pivot column is zero outside its pivot row.
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(const RationalMatrix& m);

/// Rank over Q. Small matrices go through dense fraction-free (Bareiss)
/// elimination on an integer-scaled copy; larger ones through sparse
/// elimination.
std::size_t rank(const RationalMatrix& m);
std::size_t rank_bareiss(const RationalMatrix& m);
std::size_t rank_sparse(const RationalMatrix& m);

/// Basis of the null space, one vector per free column of the RREF.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Indices of a maximal linearly independent set of columns (leftmost first).
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

/// Some X with a * X == b, or nullopt when the system is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

/// A quotient space Z/B of subspaces of Q^n, each given by spanning columns.
/// Representatives are columns of Z independent modulo B, picked leftmost-first
/// so the basis is a deterministic function of the inputs.
class QuotientBasis {
 public:
  QuotientBasis(const RationalMatrix& cocycles, const RationalMatrix& coboundaries);

  std::size_t ambient_dim() const { return representatives_.rows(); }
  std::size_t dim() const { return representatives_.cols(); }
  const RationalMatrix& representatives() const { return representatives_; }
  const RationalMatrix& coboundaries() const { return coboundaries_; }

  /// Coordinates (dim() x k) of the k given column vectors modulo B, or
  /// nullopt if some column is not in Z + B.
  std::optional<RationalMatrix> coordinates(const RationalMatrix& vectors) const;

 private:
  RationalMatrix representatives_;
  RationalMatrix coboundaries_;
};

/// Matrix of the map induced by `f` from src_cocycles/src_coboundaries to
/// dst_cocycles/dst_coboundaries. Throws InvariantError if f sends a source
/// cocycle outside dst cocycles + coboundaries.
RationalMatrix induced_quotient_map(const RationalMatrix& f, const RationalMatrix& src_cocycles,
                                    const RationalMatrix& src_coboundaries,
                                    const RationalMatrix& dst_cocycles,
                                    const RationalMatrix& dst_coboundaries);
RationalMatrix induced_quotient_map(const RationalMatrix& f, const QuotientBasis& src,
                                    const QuotientBasis& dst);

}  // namespace foliacoh

#endif  // FOLIACOH_RATLINALG_HPP
