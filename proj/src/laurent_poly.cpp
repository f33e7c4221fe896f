#include "loopwitt/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace loopwitt {

LaurentPoly::LaurentPoly(GaussRat c) {
  if (!c.is_zero()) terms_.emplace(0, std::move(c));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(GaussRat c, int exp) {
  LaurentPoly p;
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::linear_power(const GaussRat& a, int k) {
  if (k < 0) throw std::invalid_argument("linear_power: negative exponent");
  LaurentPoly base(Terms{{1, GaussRat(1)}, {0, -a}});
  return base.pow(k);
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<GaussRat>& low_to_high) {
  LaurentPoly p;
  for (std::size_t e = 0; e < low_to_high.size(); ++e)
    p.add_term(static_cast<int>(e), low_to_high[e]);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::logic_error("low degree of zero polynomial");
  return terms_.begin()->first;
}

GaussRat LaurentPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? GaussRat() : it->second;
}

GaussRat LaurentPoly::leading() const {
  if (terms_.empty()) return GaussRat();
  return terms_.rbegin()->second;
}

GaussRat LaurentPoly::eval(const GaussRat& point) const {
  if (terms_.empty()) return GaussRat();
  if (!is_polynomial() && point.is_zero()) throw DivisionByZero();
  // Horner from the top, then scale down by the lowest power.
  const int low = std::min(0, low_degree());
  GaussRat acc;
  int e = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; e > it->first; --e) acc *= point;
    acc += it->second;
  }
  for (; e > low; --e) acc *= point;
  if (low < 0) {
    GaussRat inv = point.inverse();
    for (int k = low; k < 0; ++k) acc *= inv;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

void LaurentPoly::add_term(int exp, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly result(GaussRat(1));
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    GaussRat coef = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coef = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    if (mono.empty()) {
      out += coef.compact();
    } else if (coef == GaussRat(1)) {
      out += mono;
    } else {
      out += coef.compact() + "*" + mono;
    }
  }
  return out;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::invalid_argument("divmod: negative exponents");
  LaurentPoly q, r = a;
  const int db = b.degree();
  const GaussRat lead = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    LaurentPoly t = LaurentPoly::monomial(r.leading() / lead, r.degree() - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

}  // namespace loopwitt
