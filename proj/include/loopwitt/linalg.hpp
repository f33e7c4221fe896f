#pragma once

#include "loopwitt/gauss_rat.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace loopwitt {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const GaussRat& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussRat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussRat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_entries() const;
  const std::vector<GaussRat>& flat() const { return data_; }
  std::vector<GaussRat> apply(std::span<const GaussRat> v) const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussRat& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussRat& c) { return a *= c; }
  friend Matrix operator*(const GaussRat& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRat> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the kernel, one vector per free column in increasing column order.
std::vector<std::vector<GaussRat>> nullspace(const Matrix& m);

using SparseVec = std::map<std::size_t, GaussRat>;

/// y += a * x, pruning zeros.
void axpy(SparseVec& y, const GaussRat& a, const SparseVec& x);
SparseVec to_sparse(std::span<const GaussRat> v);

/// Incrementally built echelon basis of a subspace of Q(i)^N, stored sparsely.
/// Each row is normalised to 1 at its pivot (its smallest column).
/// With coordinate tracking, every row also remembers its expression in terms of
/// the accepted generators, so membership queries can return coordinates.
class EchelonBasis {
 public:
  explicit EchelonBasis(bool track_coordinates = false) : track_(track_coordinates) {}

  /// Adds v; returns true iff v was independent of the current span.
  bool insert(SparseVec v);
  /// Canonical normal form of v modulo the span (zero at every pivot column).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  /// Coefficients of v over the accepted generators in acceptance order.
  std::optional<std::vector<GaussRat>> coordinates(const SparseVec& v) const;
  /// Back-substitutes so every pivot column is zero outside its own row.
  void make_reduced();
  bool is_reduced() const;

  std::vector<SparseVec> rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };
  SparseVec reduce_tracked(SparseVec v, SparseVec* combo) const;

  bool track_;
  std::size_t accepted_ = 0;
  std::map<std::size_t, Row> rows_;  // keyed by pivot column
};

/// Dimension of the unital associative algebra generated by square matrices.
std::size_t burnside_dim(std::span<const Matrix> mats);

}  // namespace loopwitt
