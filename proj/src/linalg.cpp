#include "loopwitt/linalg.hpp"

#include <deque>
#include <stdexcept>

namespace loopwitt {

Matrix Matrix::identity(std::size_t n) { return scalar(n, GaussRat(1)); }

Matrix Matrix::scalar(std::size_t n, const GaussRat& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Matrix::nonzero_entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out.emplace_back(r, c);
  return out;
}

std::vector<GaussRat> Matrix::apply(std::span<const GaussRat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  std::vector<GaussRat> out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const GaussRat& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const GaussRat& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussRat& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussRat& y = b(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  return p;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    GaussRat inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussRat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<GaussRat>> nullspace(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussRat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussRat> x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

void axpy(SparseVec& y, const GaussRat& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (inserted) continue;
    it->second += a * v;
    if (it->second.is_zero()) y.erase(it);
  }
}

SparseVec to_sparse(std::span<const GaussRat> v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.emplace(k, v[k]);
  return out;
}

SparseVec EchelonBasis::reduce_tracked(SparseVec v, SparseVec* combo) const {
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t col = it->first;
    auto row = rows_.find(col);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    GaussRat factor = it->second;
    axpy(v, -factor, row->second.vec);
    if (combo) axpy(*combo, factor, row->second.combo);
    it = v.upper_bound(col);
  }
  return v;
}

SparseVec EchelonBasis::reduce(SparseVec v) const { return reduce_tracked(std::move(v), nullptr); }

bool EchelonBasis::insert(SparseVec v) {
  SparseVec combo;
  SparseVec used;
  SparseVec rest = reduce_tracked(std::move(v), track_ ? &used : nullptr);
  if (rest.empty()) return false;
  if (track_) {
    // rest = v - sum(used_j * g_j) in terms of the generators
    combo.emplace(accepted_, GaussRat(1));
    axpy(combo, GaussRat(-1), used);
  }
  const std::size_t pivot = rest.begin()->first;
  GaussRat inv = rest.begin()->second.inverse();
  for (auto& [k, x] : rest) x *= inv;
  for (auto& [k, x] : combo) x *= inv;
  rows_.emplace(pivot, Row{std::move(rest), std::move(combo)});
  ++accepted_;
  return true;
}

std::optional<std::vector<GaussRat>> EchelonBasis::coordinates(const SparseVec& v) const {
  if (!track_) throw std::logic_error("EchelonBasis::coordinates without tracking");
  SparseVec acc;
  if (!reduce_tracked(v, &acc).empty()) return std::nullopt;
  std::vector<GaussRat> out(accepted_);
  for (const auto& [k, x] : acc) out[k] = x;
  return out;
}

void EchelonBasis::make_reduced() {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Row& row = it->second;
    auto e = row.vec.upper_bound(it->first);
    while (e != row.vec.end()) {
      const std::size_t col = e->first;
      auto other = rows_.find(col);
      if (other == rows_.end()) {
        ++e;
        continue;
      }
      GaussRat factor = e->second;
      axpy(row.vec, -factor, other->second.vec);
      if (track_) axpy(row.combo, -factor, other->second.combo);
      e = row.vec.upper_bound(col);
    }
  }
}

bool EchelonBasis::is_reduced() const {
  for (const auto& [p, row] : rows_)
    for (const auto& [col, x] : row.vec)
      if (col != p && rows_.contains(col)) return false;
  return true;
}

std::vector<SparseVec> EchelonBasis::rows() const {
  std::vector<SparseVec> out;
  for (const auto& [p, row] : rows_) out.push_back(row.vec);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::size_t burnside_dim(std::span<const Matrix> mats) {
  if (mats.empty()) throw std::invalid_argument("burnside_dim: empty generator list");
  const std::size_t d = mats.front().rows();
  for (const auto& m : mats)
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("burnside_dim: generators must be square of one size");

  // Close span{Id} under right multiplication by the generators.
  EchelonBasis span;
  std::deque<Matrix> frontier;
  Matrix id = Matrix::identity(d);
  span.insert(to_sparse(id.flat()));
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Matrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : mats) {
      Matrix y = x * g;
      if (span.insert(to_sparse(y.flat()))) frontier.push_back(std::move(y));
    }
  }
  return span.rank();
}

}  // namespace loopwitt
