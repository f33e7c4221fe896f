#pragma once

#include "loopwitt/gauss_rat.hpp"
#include "loopwitt/laurent_poly.hpp"

#include <memory>
#include <optional>
#include <string>

namespace loopwitt {

enum class BKind { Trivial, PolyQuot, Laurent };

class BPresentation;
using BPresPtr = std::shared_ptr<const BPresentation>;

/// A concrete commutative unital algebra B together with the evaluation
/// homomorphism psi: B -> Q(i), x |-> eval_point.
///
///   Trivial   B = Q(i), psi = identity
///   PolyQuot  B = Q(i)[x] / (modulus), modulus monic with modulus(eval_point) = 0
///   Laurent   B = Q(i)[x, x^-1], eval_point != 0
class BPresentation {
 public:
  static BPresPtr trivial();
  static BPresPtr poly_quot(LaurentPoly modulus, GaussRat eval_point);
  static BPresPtr laurent(GaussRat eval_point);

  BKind kind() const { return kind_; }
  const LaurentPoly& modulus() const { return modulus_; }
  const GaussRat& eval_point() const { return eval_point_; }
  /// Dimension over Q(i), if finite.
  std::optional<int> dimension() const;

  /// Canonical representative of p in B; throws if p is not expressible.
  LaurentPoly reduce(const LaurentPoly& p) const;

  std::string describe() const;

  friend bool operator==(const BPresentation& a, const BPresentation& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.eval_point_ == b.eval_point_;
  }

 private:
  BPresentation(BKind kind, LaurentPoly modulus, GaussRat eval_point)
      : kind_(kind), modulus_(std::move(modulus)), eval_point_(std::move(eval_point)) {}

  BKind kind_;
  LaurentPoly modulus_;
  GaussRat eval_point_;
};

bool same_presentation(const BPresPtr& a, const BPresPtr& b);

class PresentationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of B stored by its canonical representative.
class BElem {
 public:
  BElem(BPresPtr pres, const LaurentPoly& rep);
  static BElem one(BPresPtr pres) { return BElem(std::move(pres), LaurentPoly(GaussRat(1))); }
  static BElem zero(BPresPtr pres) { return BElem(std::move(pres), LaurentPoly()); }
  static BElem scalar(BPresPtr pres, const GaussRat& c) { return BElem(std::move(pres), LaurentPoly(c)); }
  /// The generator x; not available for the trivial presentation.
  static BElem generator(BPresPtr pres);

  const BPresPtr& presentation() const { return pres_; }
  const LaurentPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  /// Some c with this == c * 1, if the representative is constant.
  std::optional<GaussRat> as_scalar() const;

  BElem& operator+=(const BElem& o);
  BElem& operator-=(const BElem& o);
  BElem& operator*=(const BElem& o);
  BElem& operator*=(const GaussRat& c);
  friend BElem operator+(BElem a, const BElem& b) { return a += b; }
  friend BElem operator-(BElem a, const BElem& b) { return a -= b; }
  friend BElem operator*(BElem a, const BElem& b) { return a *= b; }
  friend BElem operator*(BElem a, const GaussRat& c) { return a *= c; }
  friend BElem operator*(const GaussRat& c, BElem a) { return a *= c; }
  friend BElem operator-(BElem a) { return a *= GaussRat(-1); }
  friend bool operator==(const BElem& a, const BElem& b);

  std::string str() const;

 private:
  void require_same(const BElem& o) const;
  BPresPtr pres_;
  LaurentPoly rep_;
};

/// psi(b): the representative evaluated at the presentation's point.
GaussRat eval_psi(const BElem& b);

/// Whether b lies in M^k, M = ker psi.
bool ideal_membership(const BElem& b, int k);

/// Smallest k with M^k = 0, or nullopt when no power of M vanishes.
std::optional<int> nilpotency_index(const BPresentation& pres);

}  // namespace loopwitt
