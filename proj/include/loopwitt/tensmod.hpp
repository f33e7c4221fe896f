#pragma once

#include "loopwitt/glnrep.hpp"
#include "loopwitt/loopalg.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace loopwitt {

class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The box {m in Z^n : |m_i| <= radius}.
class Window {
 public:
  Window(int n, int radius);

  int n() const { return n_; }
  int radius() const { return radius_; }
  bool contains(const Degree& m, int margin = 0) const;
  /// Degrees with |m_i| <= radius - margin, in lexicographic order.
  std::vector<Degree> interior(int margin) const;
  std::vector<Degree> degrees() const { return interior(0); }
  std::size_t size() const;
  /// Position of m in lexicographic order.
  std::size_t index_of(const Degree& m) const;
  Degree degree_at(std::size_t index) const;

 private:
  int n_;
  int radius_;
};

/// Sparse vector of the module: degree m -> coordinates of the m-slice. No zero slices.
using ModVector = std::map<Degree, std::vector<GaussRat>>;

/// y += a * x, dropping slices that cancel.
void add_scaled(ModVector& y, const GaussRat& a, const ModVector& x);
bool is_zero(const ModVector& v);

enum class ActMode { Strict, Truncate };

/// An algebra element prepared for repeated application: one piece per degree r,
/// holding psi of the t^r coefficient, psi of each D^i(r) coefficient, and the
/// columns of sum_ij psi_i r_j E_ji.
struct CompiledAction {
  struct Piece {
    Degree r;
    GaussRat shift;
    std::vector<GaussRat> cartan;
    std::vector<std::vector<std::pair<std::size_t, GaussRat>>> rho;
  };
  std::vector<Piece> pieces;
};

/// V(mu,c) tensor A restricted to a window, with the tau action
///   D(u,r)b . v(x)t^m = psi(b) [ (u,m+alpha) v + sum_ij u_i r_j E_ji v ] (x) t^(m+r)
///   t^r b  . v(x)t^m = psi(b) v (x) t^(m+r)
class TensorModule {
 public:
  TensorModule(std::shared_ptr<const Irrep> rep, std::vector<GaussRat> alpha, BPresPtr bpres, Window window);

  const Irrep& rep() const { return *rep_; }
  const std::shared_ptr<const Irrep>& rep_ptr() const { return rep_; }
  const std::vector<GaussRat>& alpha() const { return alpha_; }
  const BPresPtr& presentation() const { return bpres_; }
  const Window& window() const { return window_; }
  int n() const { return window_.n(); }
  std::size_t d() const { return rep_->dim(); }
  LoopSpace space() const { return LoopSpace(n(), bpres_); }

  ModVector basis_vector(const Degree& m, std::size_t k) const;
  ModVector act(const LoopElem& x, const ModVector& v, ActMode mode = ActMode::Strict) const;
  CompiledAction compile(const LoopElem& x) const;
  ModVector apply(const CompiledAction& a, const ModVector& v, ActMode mode = ActMode::Strict) const;

  /// Block of act(x, .) from the src slices to the dst slices, slice-major with the
  /// irrep basis inside each slice.
  Matrix op_matrix(const LoopElem& x, const std::vector<Degree>& src, const std::vector<Degree>& dst) const;

  /// Coordinates in the whole window, index = index_of(m) * d + k.
  SparseVec flatten(const ModVector& v) const;
  ModVector unflatten(const SparseVec& v) const;
  std::size_t ambient_dim() const { return window_.size() * d(); }

 private:
  void check_vector(const ModVector& v) const;

  std::shared_ptr<const Irrep> rep_;
  std::vector<GaussRat> alpha_;
  BPresPtr bpres_;
  Window window_;
  // Nonzero entries of each column of each E_ij.
  std::vector<std::vector<std::vector<std::pair<std::size_t, GaussRat>>>> columns_;
};

/// act([x,y],v) - act(x,act(y,v)) + act(y,act(x,v)).
ModVector module_axiom_residual(const TensorModule& mod, const LoopElem& x, const LoopElem& y, const ModVector& v);

struct AssocUnitalResidual {
  ModVector assoc;  // t^r b . (t^s b' . v) - t^(r+s) bb' . v
  ModVector unit;   // t^0 . v - v
};
AssocUnitalResidual assoc_unital_check(const TensorModule& mod, const Degree& r, const Degree& s, const BElem& b,
                                       const BElem& bp, const ModVector& v);

struct WeightSlice {
  Degree m;
  std::size_t dim;
};
/// Slice dimensions over the window; throws std::logic_error if the Cartan part fails
/// to act diagonally with eigenvalue m_i + alpha_i.
std::vector<WeightSlice> weight_decomposition(const TensorModule& mod);

}  // namespace loopwitt
