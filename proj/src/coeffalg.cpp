#include "loopwitt/coeffalg.hpp"

#include "loopwitt/linalg.hpp"

#include <stdexcept>

namespace loopwitt {

BPresPtr BPresentation::trivial() {
  static const BPresPtr instance(new BPresentation(BKind::Trivial, LaurentPoly(), GaussRat()));
  return instance;
}

BPresPtr BPresentation::poly_quot(LaurentPoly modulus, GaussRat eval_point) {
  if (modulus.is_zero() || !modulus.is_polynomial() || modulus.degree() < 1)
    throw std::invalid_argument("polyquot modulus must be a polynomial of degree >= 1");
  if (modulus.leading() != GaussRat(1))
    throw std::invalid_argument("polyquot modulus must be monic");
  if (!modulus.eval(eval_point).is_zero())
    throw std::invalid_argument("polyquot eval_point must be a root of the modulus");
  return BPresPtr(new BPresentation(BKind::PolyQuot, std::move(modulus), std::move(eval_point)));
}

BPresPtr BPresentation::laurent(GaussRat eval_point) {
  if (eval_point.is_zero()) throw std::invalid_argument("laurent eval_point must be non-zero");
  return BPresPtr(new BPresentation(BKind::Laurent, LaurentPoly(), std::move(eval_point)));
}

std::optional<int> BPresentation::dimension() const {
  switch (kind_) {
    case BKind::Trivial: return 1;
    case BKind::PolyQuot: return modulus_.degree();
    case BKind::Laurent: return std::nullopt;
  }
  return std::nullopt;
}

LaurentPoly BPresentation::reduce(const LaurentPoly& p) const {
  switch (kind_) {
    case BKind::Trivial:
      if (!p.is_constant()) throw std::invalid_argument("trivial B has no generator");
      return p;
    case BKind::PolyQuot:
      if (!p.is_polynomial())
        throw std::invalid_argument("negative powers are not available in a polynomial quotient");
      return divmod(p, modulus_).second;
    case BKind::Laurent: return p;
  }
  return p;
}

std::string BPresentation::describe() const {
  switch (kind_) {
    case BKind::Trivial: return "trivial";
    case BKind::PolyQuot:
      return "polyquot(" + modulus_.str() + ") at " + eval_point_.compact();
    case BKind::Laurent: return "laurent at " + eval_point_.compact();
  }
  return {};
}

bool same_presentation(const BPresPtr& a, const BPresPtr& b) {
  return a == b || (a && b && *a == *b);
}

BElem::BElem(BPresPtr pres, const LaurentPoly& rep) : pres_(std::move(pres)) {
  if (!pres_) throw std::invalid_argument("BElem without presentation");
  rep_ = pres_->reduce(rep);
}

BElem BElem::generator(BPresPtr pres) {
  return BElem(std::move(pres), LaurentPoly::monomial(GaussRat(1), 1));
}

std::optional<GaussRat> BElem::as_scalar() const {
  if (!rep_.is_constant()) return std::nullopt;
  return rep_.coefficient(0);
}

void BElem::require_same(const BElem& o) const {
  if (!same_presentation(pres_, o.pres_))
    throw PresentationMismatch("B elements from different presentations: " + pres_->describe() +
                               " vs " + o.pres_->describe());
}

BElem& BElem::operator+=(const BElem& o) {
  require_same(o);
  rep_ += o.rep_;
  return *this;
}

BElem& BElem::operator-=(const BElem& o) {
  require_same(o);
  rep_ -= o.rep_;
  return *this;
}

BElem& BElem::operator*=(const BElem& o) {
  require_same(o);
  rep_ = pres_->reduce(rep_ * o.rep_);
  return *this;
}

BElem& BElem::operator*=(const GaussRat& c) {
  rep_ *= c;
  return *this;
}

bool operator==(const BElem& a, const BElem& b) {
  return same_presentation(a.pres_, b.pres_) && a.rep_ == b.rep_;
}

std::string BElem::str() const { return rep_.str(); }

GaussRat eval_psi(const BElem& b) {
  const auto& pres = *b.presentation();
  if (pres.kind() == BKind::Trivial) return b.rep().coefficient(0);
  return b.rep().eval(pres.eval_point());
}

bool ideal_membership(const BElem& b, int k) {
  if (k < 1) throw std::invalid_argument("ideal_membership: k must be >= 1");
  const auto& pres = *b.presentation();
  switch (pres.kind()) {
    case BKind::Trivial: return b.is_zero();
    case BKind::Laurent: {
      if (b.is_zero()) return true;
      // Clear the unit power of x, then test divisibility by (x - a)^k.
      LaurentPoly p = b.rep().shifted(-b.rep().low_degree());
      return divmod(p, LaurentPoly::linear_power(pres.eval_point(), k)).second.is_zero();
    }
    case BKind::PolyQuot: {
      // b in M^k iff b lies in the image of multiplication by (x - a)^k on B.
      const int dim = pres.modulus().degree();
      const LaurentPoly gen = LaurentPoly::linear_power(pres.eval_point(), k);
      Matrix image(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim) + 1);
      for (int j = 0; j < dim; ++j) {
        LaurentPoly col = pres.reduce(gen.shifted(j));
        for (int e = 0; e < dim; ++e) image(e, j) = col.coefficient(e);
      }
      Matrix augmented = image;
      for (int e = 0; e < dim; ++e) augmented(e, dim) = b.rep().coefficient(e);
      for (int e = 0; e < dim; ++e) image(e, dim) = GaussRat();
      return rank(image) == rank(augmented);
    }
  }
  return false;
}

std::optional<int> nilpotency_index(const BPresentation& pres) {
  switch (pres.kind()) {
    case BKind::Trivial: return 1;
    case BKind::Laurent: return std::nullopt;
    case BKind::PolyQuot: {
      const int dim = pres.modulus().degree();
      const LaurentPoly step = LaurentPoly::linear_power(pres.eval_point(), 1);
      LaurentPoly power = step;
      for (int k = 1; k <= dim; ++k) {
        if (pres.reduce(power).is_zero()) return k;
        power = power * step;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace loopwitt
