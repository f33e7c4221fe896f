#pragma once

#include "loopwitt/tensmod.hpp"

#include <functional>
#include <string>
#include <vector>

namespace loopwitt {

/// Linear operator on module vectors. Operators built with rho() refer to the
/// module by address; the module must outlive them.
class ModuleOperator {
 public:
  using Fn = std::function<ModVector(const ModVector&)>;
  explicit ModuleOperator(Fn f) : f_(std::move(f)) {}

  static ModuleOperator identity();
  static ModuleOperator rho(const TensorModule& mod, LoopElem x);

  ModVector operator()(const ModVector& v) const { return f_(v); }

  /// Composition: (a * b)(v) = a(b(v)).
  friend ModuleOperator operator*(ModuleOperator a, ModuleOperator b);
  friend ModuleOperator operator+(ModuleOperator a, ModuleOperator b);
  friend ModuleOperator operator-(ModuleOperator a, ModuleOperator b);
  friend ModuleOperator operator*(GaussRat c, ModuleOperator a);

 private:
  Fn f_;
};

ModuleOperator commutator(const ModuleOperator& a, const ModuleOperator& b);

struct OpMatrix {
  Matrix matrix;
  std::vector<Degree> src;
  std::vector<Degree> dst;  // every slice reached, sorted
  bool is_zero() const { return matrix.is_zero(); }
};

/// Matrix of op on the given source slices; destination slices are collected from the images.
OpMatrix operator_matrix(const ModuleOperator& op, const TensorModule& mod, const std::vector<Degree>& src);

enum class OpFamily { T, T1, I2 };

/// T(u,r,b1,b2)  = t^(-r) b1 . D(u,r) b2
/// T1(u,r,b1,b2) = T(u,r,b1,b2) - D(u,0) b1 b2
/// I2(u,r,b1,b2) = psi(b1) D(u,r) b2 - D(u,0) b1 b2
struct OpSpec {
  OpFamily family;
  std::vector<GaussRat> u;
  Degree r;
  BElem b1;
  BElem b2;
};

std::string to_string(const OpSpec& spec);
ModuleOperator make_operator(const OpSpec& spec, const TensorModule& mod);
OpMatrix op_matrix_of(const OpSpec& spec, const TensorModule& mod, const std::vector<Degree>& slices);

/// The Lie element psi(b1) D(u,r) b2 - D(u,0) b1 b2.
LoopElem i2_element(const LoopSpace& space, const std::vector<GaussRat>& u, const Degree& r, const BElem& b1,
                    const BElem& b2);

/// Smallest margin keeping every composition of the two specs inside the window.
int pair_margin(const Degree& r, const Degree& s);

/// [T(u,r,b1,b2), T(v,s,b3,b4)] - T(w,r+s,b1b3,b2b4) + (u,s)T(v,s,b1b2b3,b4) - (v,r)T(u,r,b1b3b4,b2),
/// w = (u,s)v - (v,r)u. Only the parameters of the specs are used.
OpMatrix lemma21_residual(const OpSpec& s1, const OpSpec& s2, const TensorModule& mod,
                          const std::vector<Degree>& slices);

enum class Prop21Kind { T1Bracket, I2Bracket, DDinD1 };
std::string to_string(Prop21Kind kind);

/// T1Bracket: [T1(u,r,b1,b2), T1(v,s,b3,b4)]
///            - T1(w,r+s,b1b3,b2b4) + (u,s)T1(v,s,b3,b1b2b4) - (v,r)T1(u,r,b1,b2b3b4)
/// I2Bracket: the same shape with I2.
/// DDinD1:    [T(u,r,b1,b2), T(v,s,b3,b4)]
///            - T1(w,r+s,b1b3,b2b4) + (u,s)T1(v,s,b1b2b3,b4) - (v,r)T1(u,r,b1b3b4,b2)
OpMatrix prop21_residual(Prop21Kind kind, const OpSpec& s1, const OpSpec& s2, const TensorModule& mod,
                         const std::vector<Degree>& slices);

/// I2 bracket relation evaluated in the loop algebra itself.
LoopElem i2_bracket_residual_lie(const LoopSpace& space, const OpSpec& s1, const OpSpec& s2);

/// Row-reduced basis of a subspace of the windowed module.
struct Subspace {
  EchelonBasis basis;
  std::size_t ambient = 0;
  std::size_t dim() const { return basis.rank(); }
  std::size_t codim() const { return ambient - basis.rank(); }
};

/// W = span{ v(x)t^r - v(x)t^0 : r in window, v in V(mu,c) }.
Subspace W_basis(const TensorModule& mod);

/// Remainder of v modulo the subspace, as a module vector.
ModVector reduce_mod(const Subspace& W, const TensorModule& mod, const ModVector& v);

struct SubspaceCheck {
  bool holds = true;
  std::size_t tested = 0;
  ModVector witness;  // nonzero remainder of the first failing vector
};

/// I2(spec) maps every generator v(x)t^s - v(x)t^0 with in-window image back into W.
SubspaceCheck prop21_5_check(const OpSpec& spec, const TensorModule& mod, const Subspace& W);

struct QuotientCheck {
  bool intertwines = true;
  bool bijective = true;
  std::size_t tested = 0;
  ModVector witness;
};

/// T1(spec) v - I2(spec) v lies in W for every v in the 0-slice, and the 0-slice maps
/// isomorphically onto the quotient by W.
QuotientCheck prop21_6_check(const std::vector<OpSpec>& specs, const TensorModule& mod, const Subspace& W);

/// D(u,0)b on the 0-slice minus psi(b)(u,alpha) Id.
Matrix lemma23_scalar_check(const std::vector<GaussRat>& u, const BElem& b, const TensorModule& mod);

/// D(u,r)b - psi(b) D(u,r) from slice m to slice m+r.
Matrix thm22_collapse_check(const std::vector<GaussRat>& u, const Degree& r, const BElem& b, const TensorModule& mod,
                            const Degree& m);

/// With T(u,r)b = T(u,r,1,b) and w = (v,r)u - (u,s)v:
/// [T(v,s)b, T(u,r)b'] - T(w,r+s)bb' - (u,s)T(v,s)bb' + (v,r)T(u,r)bb'.
OpMatrix tb_relation_residual(const std::vector<GaussRat>& v, const Degree& s, const BElem& b,
                              const std::vector<GaussRat>& u, const Degree& r, const BElem& bp,
                              const TensorModule& mod, const std::vector<Degree>& slices);

/// Dimension of the algebra generated by T(e_i, e_j, 1, 1) on the 0-slice.
std::size_t burnside_Valpha(const TensorModule& mod);

// Rank-one module checks. The module must have n = 1 (so d = 1 and E_11 = c).

/// d_r on slice s minus (r c + s + alpha) Id.
Matrix n1_scalar_action_residual(const TensorModule& mod, int r, int s);
/// (I(r) - r c) applied to the 0-slice, reduced modulo W.
ModVector n1_induced_I_residual(const TensorModule& mod, const Subspace& W, int r);
/// f(X - k) Y v - Y f(X) v with X = d_0 - d_-1, Y = (t-1)^(k+1) d_-1, f = lambda^power, v in slice s.
ModVector n1_lemma25_2_residual(const TensorModule& mod, int k, int power, int s);
/// Slices s for which n1_lemma25_2_residual stays inside the window.
std::vector<int> n1_lemma25_2_slices(const TensorModule& mod, int k, int power);
/// (t-1)^2 t^i d applied to the 0-slice, reduced modulo W.
ModVector n1_prop23_1_residual(const TensorModule& mod, const Subspace& W, int i);

}  // namespace loopwitt
