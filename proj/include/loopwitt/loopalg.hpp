#pragma once

#include "loopwitt/coeffalg.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace loopwitt {

/// Exponent vector r of t^r, length equal to the rank n.
using Degree = std::vector<int>;

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);
std::string degree_str(const Degree& m);
/// (u, r) = sum u_i r_i
GaussRat pairing(const std::vector<GaussRat>& u, const Degree& r);
GaussRat pairing(const std::vector<GaussRat>& u, const std::vector<GaussRat>& v);

/// Basis symbol of A x| DerA: kind 0 is t^r, kind i >= 1 is D^i(r) = t^r t_i d/dt_i.
struct BasisKey {
  int kind = 0;
  Degree degree;

  bool is_apart() const { return kind == 0; }
  /// Zero-based component index of a D-key.
  int component() const { return kind - 1; }
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Finite linear combination of basis symbols tensored with elements of B.
/// D(u,r)b is stored as the entries (D^i, r) -> u_i b; zero coefficients are pruned.
class LoopElem {
 public:
  using Terms = std::map<BasisKey, BElem>;

  LoopElem(int rank, BPresPtr pres);

  int rank() const { return rank_; }
  const BPresPtr& presentation() const { return pres_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_apart_only() const;

  void add_term(const BasisKey& key, const BElem& coef);

  LoopElem& operator+=(const LoopElem& o);
  LoopElem& operator-=(const LoopElem& o);
  LoopElem& operator*=(const GaussRat& c);
  LoopElem& operator*=(const BElem& b);
  friend LoopElem operator+(LoopElem a, const LoopElem& b) { return a += b; }
  friend LoopElem operator-(LoopElem a, const LoopElem& b) { return a -= b; }
  friend LoopElem operator-(LoopElem a) { return a *= GaussRat(-1); }
  friend LoopElem operator*(LoopElem a, const GaussRat& c) { return a *= c; }
  friend LoopElem operator*(const GaussRat& c, LoopElem a) { return a *= c; }
  friend LoopElem operator*(LoopElem a, const BElem& b) { return a *= b; }
  friend bool operator==(const LoopElem& a, const LoopElem& b);

  void require_compatible(const LoopElem& o) const;

 private:
  void check_key(const BasisKey& key) const;
  int rank_;
  BPresPtr pres_;
  Terms terms_;
};

/// Rank and coefficient algebra shared by a family of elements; builds them.
class LoopSpace {
 public:
  LoopSpace(int rank, BPresPtr pres);

  int rank() const { return rank_; }
  const BPresPtr& presentation() const { return pres_; }

  LoopElem zero() const { return LoopElem(rank_, pres_); }
  BElem one() const { return BElem::one(pres_); }
  BElem b(const LaurentPoly& p) const { return BElem(pres_, p); }
  Degree zero_degree() const { return Degree(static_cast<std::size_t>(rank_), 0); }
  /// Unit vector e_i, zero-based.
  std::vector<GaussRat> unit(int i) const;

  LoopElem t(const Degree& r) const { return t(r, one()); }
  LoopElem t(const Degree& r, const BElem& b) const;
  LoopElem D(const std::vector<GaussRat>& u, const Degree& r) const { return D(u, r, one()); }
  LoopElem D(const std::vector<GaussRat>& u, const Degree& r, const BElem& b) const;
  /// Rank one only: d_m = t^m t d/dt.
  LoopElem d(int m) const;

 private:
  int rank_;
  BPresPtr pres_;
};

/// One term of a structure-constant expansion: integer coefficient times basis key.
using StructureTerm = std::pair<long, BasisKey>;

/// [a, b] for basis keys, with B coefficients equal to 1.
std::vector<StructureTerm> basis_bracket(const BasisKey& a, const BasisKey& b);

LoopElem bracket(const LoopElem& x, const LoopElem& y);

/// Memoised structure constants. Not thread-safe; use one table per thread.
class BracketTable {
 public:
  const std::vector<StructureTerm>& lookup(const BasisKey& a, const BasisKey& b);
  LoopElem bracket(const LoopElem& x, const LoopElem& y);
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<std::pair<BasisKey, BasisKey>, std::vector<StructureTerm>> cache_;
};

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
LoopElem jacobi_residual(const LoopElem& x, const LoopElem& y, const LoopElem& z);

/// The degree m with [D(e_i,0), x] = m_i x for all i; throws for zero or
/// non-homogeneous x.
Degree ad_weight(const LoopElem& x);

/// (t-1)^k d_i expanded as sum_j C(k,j) (-1)^(k-j) d_(i+j). Rank one only.
LoopElem poly_derivation(const LoopSpace& space, int k, int i);

/// [(t-1)^k d_i, (t-1)^l d_j] - (l-k+j-i)(t-1)^(k+l) d_(i+j) - (l-k)(t-1)^(k+l-1) d_(i+j)
LoopElem lemma25_1_residual(const LoopSpace& space, int k, int l, int i, int j);

/// I(m) = (t^m - 1)d = d_m - d_0. Rank one only.
LoopElem shifted_derivation(const LoopSpace& space, int m);

/// [I(r), I(s)] - ((s-r) I(r+s) + r I(r) - s I(s))
LoopElem lemma24_residual(const LoopSpace& space, int r, int s);

/// For x = sum a_j d_j in (t-1)C[t,t^-1]d with scalar a_j: the value f(1) where
/// x = (t-1) f(t) d, i.e. sum j a_j. Throws if sum a_j != 0.
GaussRat phi_md(const LoopElem& x);

}  // namespace loopwitt
