#pragma once

#include "loopwitt/gauss_rat.hpp"
#include "loopwitt/linalg.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace loopwitt {

/// Dominant integral weight of sl_n in fundamental-weight coordinates (n-1 entries).
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> mu);

  const std::vector<int>& coords() const { return mu_; }
  int rank() const { return static_cast<int>(mu_.size()) + 1; }
  /// lambda_i = sum_{k >= i} mu_k, lambda_n = 0.
  std::vector<int> partition() const;
  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<int> mu_;
};

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)
std::size_t weyl_dim(const DominantWeight& mu, int n);

struct IrrepLimits {
  std::size_t max_dim = 64;
  int max_boxes = 6;
};

class DimensionCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The gl_n module V(mu, c) with explicit matrices for every E_ij.
class Irrep {
 public:
  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const DominantWeight& mu() const { return mu_; }
  const GaussRat& c() const { return c_; }
  /// Action of E_ij, zero-based indices.
  const Matrix& E(int i, int j) const {
    return E_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  std::size_t hw_index() const { return 0; }
  /// Number of tensor factors used by the construction.
  int boxes() const { return boxes_; }
  /// Content vector (occurrences of each e_i) of each basis vector inside the tensor power.
  const std::vector<std::vector<int>>& basis_contents() const { return contents_; }
  /// Eigenvalues of E_11..E_nn on basis vector b.
  std::vector<GaussRat> weight_of(std::size_t b) const;
  /// All n*n matrices.
  const std::vector<Matrix>& generators() const { return E_; }

 private:
  friend Irrep build_irrep(const DominantWeight&, const GaussRat&, int, const IrrepLimits&);
  int n_ = 1;
  std::size_t dim_ = 0;
  DominantWeight mu_;
  GaussRat c_;
  int boxes_ = 0;
  std::vector<Matrix> E_;
  std::vector<std::vector<int>> contents_;
};

/// Cyclic span of a highest-weight vector inside the k-fold tensor power of the
/// natural representation, shifted so that the identity acts by c.
Irrep build_irrep(const DominantWeight& mu, const GaussRat& c, int n, const IrrepLimits& limits = {});

/// [E_ij, E_kl] - delta_jk E_il + delta_li E_kj (zero-based indices).
Matrix gl_relations_residual(const Irrep& rep, int i, int j, int k, int l);

/// Dimension of each weight space, keyed by content vector.
std::map<std::vector<int>, std::size_t> weight_dimensions(const Irrep& rep);

}  // namespace loopwitt
