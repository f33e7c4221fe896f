#pragma once

#include "loopwitt/gauss_rat.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace loopwitt {

/// Sparse univariate Laurent polynomial over Q(i); no zero coefficient is stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, GaussRat>;

  LaurentPoly() = default;
  LaurentPoly(GaussRat c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(GaussRat c, int exp);
  /// (x - a)^k
  static LaurentPoly linear_power(const GaussRat& a, int k);
  /// Coefficients listed from exponent 0 upward.
  static LaurentPoly from_coefficients(const std::vector<GaussRat>& low_to_high);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_polynomial() const;  // no negative exponents
  int degree() const;          // highest exponent; requires non-zero
  int low_degree() const;      // lowest exponent; requires non-zero
  GaussRat coefficient(int exp) const;
  GaussRat leading() const;

  GaussRat eval(const GaussRat& point) const;
  LaurentPoly shifted(int by) const;  // multiply by x^by

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussRat& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= GaussRat(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const GaussRat& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussRat& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int k) const;

  /// Text in the element syntax with generator name `var`, e.g. "x^2 - 3*x + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void add_term(int exp, const GaussRat& c);
  Terms terms_;
};

/// Euclidean division of polynomials (non-negative exponents only).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace loopwitt
