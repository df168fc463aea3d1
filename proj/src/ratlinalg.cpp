#include "foliacoh/ratlinalg.hpp"

#include <algorithm>
#include <sstream>

#include "foliacoh/errors.hpp"

namespace foliacoh {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

constexpr std::size_t kDenseLimit = 64;

// row := row - factor * other, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

std::vector<SparseRow> sparse_rows(const RationalMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (const auto& [key, value] : m.entries()) rows[key.first].emplace_back(key.second, value);
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  return rows;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) { return scalar(n, 1); }

RationalMatrix RationalMatrix::scalar(std::size_t n, const Rational& s) {
  RationalMatrix m(n, n);
  if (s == 0) return m;
  for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, s);
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<RationalVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_dense: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void RationalMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    std::ostringstream os;
    os << "matrix index (" << r << ", " << c << ") out of bounds for " << rows_ << "x" << cols_;
    throw InvariantError(os.str());
  }
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = entries_.find(Key{r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (v == 0) {
    entries_.erase(Key{r, c});
  } else {
    entries_[Key{r, c}] = v;
  }
}

void RationalMatrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace(Key{r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (const auto& [key, value] : entries_) {
    if (key.second == c) v[key.first] = value;
  }
  return v;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw InvariantError("apply: vector length does not match columns");
  RationalVector out(rows_);
  for (const auto& [key, value] : entries_) {
    if (v[key.second] != 0) out[key.first] += value * v[key.second];
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (const auto& [key, value] : entries_) t.entries_.emplace(Key{key.second, key.first}, value);
  return t;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out(rows_, cols_);
  if (s == 0) return out;
  for (const auto& [key, value] : entries_) out.entries_.emplace(key, value * s);
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvariantError("block: range out of bounds");
  RationalMatrix out(nr, nc);
  for (auto it = entries_.lower_bound(Key{r0, 0}); it != entries_.end(); ++it) {
    const auto [r, c] = it->first;
    if (r >= r0 + nr) break;
    if (c >= c0 && c < c0 + nc) out.entries_.emplace(Key{r - r0, c - c0}, it->second);
  }
  return out;
}

void RationalMatrix::add_block(std::size_t r0, std::size_t c0, const RationalMatrix& b,
                               const Rational& scale) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw InvariantError("add_block: block does not fit");
  }
  for (const auto& [key, value] : b.entries_) add_to(key.first + r0, key.second + c0, value * scale);
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvariantError("matrix product: shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  std::map<RationalMatrix::Key, Rational> acc;
  for (const auto& [ka, va] : a.entries_) {
    const std::size_t k = ka.second;
    for (auto it = b.entries_.lower_bound({k, 0}); it != b.entries_.end() && it->first.first == k;
         ++it) {
      acc[{ka.first, it->first.second}] += va * it->second;
    }
  }
  for (auto& [key, value] : acc) {
    if (value != 0) out.entries_.emplace(key, std::move(value));
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantError("matrix sum: shape mismatch");
  RationalMatrix out = a;
  for (const auto& [key, value] : b.entries_) out.add_to(key.first, key.second, value);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw InvariantError("matrix difference: shape mismatch");
  }
  RationalMatrix out = a;
  for (const auto& [key, value] : b.entries_) out.add_to(key.first, key.second, -value);
  return out;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw InvariantError("hstack: row counts differ");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  out.add_block(0, 0, a);
  out.add_block(0, a.cols(), b);
  return out;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw InvariantError("vstack: column counts differ");
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  out.add_block(0, 0, a);
  out.add_block(a.rows(), 0, b);
  return out;
}

RowEchelon reduced_row_echelon(const RationalMatrix& m) {
  RowEchelon ech;
  ech.cols = m.cols();
  std::vector<SparseRow> rows = sparse_rows(m);

  // Rows are bucketed by leading column; only rows leading in the current
  // column are touched, which keeps fill-in low on incidence-like matrices.
  std::vector<std::vector<std::size_t>> bucket(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) bucket[rows[i].front().first].push_back(i);

  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& candidates = bucket[c];
    if (candidates.empty()) continue;
    auto best = std::min_element(candidates.begin(), candidates.end(), [&](auto x, auto y) {
      return rows[x].size() < rows[y].size();
    });
    const std::size_t pivot_index = *best;
    SparseRow pivot = std::move(rows[pivot_index]);
    const Rational lead = pivot.front().second;
    if (lead != 1) {
      for (auto& e : pivot) e.second /= lead;
    }
    for (std::size_t idx : candidates) {
      if (idx == pivot_index) continue;
      const Rational factor = rows[idx].front().second;
      rows[idx] = axpy(rows[idx], factor, pivot);
      if (!rows[idx].empty()) bucket[rows[idx].front().first].push_back(idx);
    }
    candidates.clear();
    ech.pivots.push_back(c);
    ech.rows.push_back(std::move(pivot));
  }

  // Back substitution to clear entries above each pivot.
  for (std::size_t k = ech.rows.size(); k-- > 0;) {
    const std::size_t pc = ech.pivots[k];
    for (std::size_t j = 0; j < k; ++j) {
      const Rational* v = find_entry(ech.rows[j], pc);
      if (v == nullptr) continue;
      const Rational factor = *v;
      ech.rows[j] = axpy(ech.rows[j], factor, ech.rows[k]);
    }
  }
  return ech;
}

std::size_t rank_sparse(const RationalMatrix& m) {
  // Forward elimination only; no need for the reduced form.
  std::vector<SparseRow> rows = sparse_rows(m);
  std::vector<std::vector<std::size_t>> bucket(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) bucket[rows[i].front().first].push_back(i);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& candidates = bucket[c];
    if (candidates.empty()) continue;
    auto best = std::min_element(candidates.begin(), candidates.end(), [&](auto x, auto y) {
      return rows[x].size() < rows[y].size();
    });
    const std::size_t pivot_index = *best;
    const SparseRow& pivot = rows[pivot_index];
    for (std::size_t idx : candidates) {
      if (idx == pivot_index) continue;
      const Rational factor = rows[idx].front().second / pivot.front().second;
      rows[idx] = axpy(rows[idx], factor, pivot);
      if (!rows[idx].empty()) bucket[rows[idx].front().first].push_back(idx);
    }
    candidates.clear();
    ++r;
  }
  return r;
}

std::size_t rank_bareiss(const RationalMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  // Clear denominators row by row; rank is unchanged by nonzero row scaling.
  std::vector<Integer> row_lcm(nr, Integer(1));
  for (const auto& [key, value] : m.entries()) {
    mpz_lcm(row_lcm[key.first].get_mpz_t(), row_lcm[key.first].get_mpz_t(),
            value.get_den_mpz_t());
  }
  for (const auto& [key, value] : m.entries()) {
    a[key.first][key.second] = value.get_num() * (row_lcm[key.first] / value.get_den());
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.is_zero()) return 0;
  if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit) return rank_bareiss(m);
  return rank_sparse(m);
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
      if (const Rational* e = find_entry(ech.rows[k], free)) v[ech.pivots[k]] = -*e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const RationalMatrix& m) {
  return reduced_row_echelon(m).pivots;
}

std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw InvariantError("solve: row counts differ");
  const RowEchelon ech = reduced_row_echelon(hstack(a, b));
  RationalMatrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    const std::size_t p = ech.pivots[k];
    if (p >= a.cols()) return std::nullopt;
    for (const auto& [col, value] : ech.rows[k]) {
      if (col >= a.cols()) x.set(p, col - a.cols(), value);
    }
  }
  return x;
}

QuotientBasis::QuotientBasis(const RationalMatrix& cocycles, const RationalMatrix& coboundaries)
    : coboundaries_(coboundaries) {
  if (cocycles.rows() != coboundaries.rows()) {
    throw InvariantError("QuotientBasis: ambient dimensions differ");
  }
  const std::vector<std::size_t> pivots = independent_columns(hstack(coboundaries, cocycles));
  std::vector<RationalVector> reps;
  for (std::size_t p : pivots) {
    if (p >= coboundaries.cols()) reps.push_back(cocycles.column(p - coboundaries.cols()));
  }
  representatives_ = RationalMatrix::from_columns(cocycles.rows(), reps);
}

std::optional<RationalMatrix> QuotientBasis::coordinates(const RationalMatrix& vectors) const {
  auto x = solve(hstack(representatives_, coboundaries_), vectors);
  if (!x) return std::nullopt;
  return x->block(0, 0, dim(), vectors.cols());
}

RationalMatrix induced_quotient_map(const RationalMatrix& f, const QuotientBasis& src,
                                    const QuotientBasis& dst) {
  if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim()) {
    throw InvariantError("induced_quotient_map: map shape does not match the quotients");
  }
  auto coords = dst.coordinates(f * src.representatives());
  if (!coords) {
    throw InvariantError(
        "induced_quotient_map: image of a source cocycle is not a target cocycle modulo "
        "coboundaries");
  }
  return *coords;
}

RationalMatrix induced_quotient_map(const RationalMatrix& f, const RationalMatrix& src_cocycles,
                                    const RationalMatrix& src_coboundaries,
                                    const RationalMatrix& dst_cocycles,
                                    const RationalMatrix& dst_coboundaries) {
  return induced_quotient_map(f, QuotientBasis(src_cocycles, src_coboundaries),
                              QuotientBasis(dst_cocycles, dst_coboundaries));
}

}  // namespace foliacoh
