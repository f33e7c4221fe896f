#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopwitt {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact element of Q(i): re + im*i with both parts in lowest terms.
class GaussRat {
 public:
  GaussRat() = default;
  template <std::integral I>
  GaussRat(I v) : re_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0);

  /// Accepts "p/q+r/s i", "p", "p/q", "r/s i", "-i" and similar forms.
  static GaussRat parse(std::string_view text);
  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;
  GaussRat conj() const { return GaussRat(re_, -im_); }
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Serialized form "p/q+r/s i"; the imaginary part is omitted when zero.
  std::string str() const;
  /// Short form used by the element syntax: "3", "-1/2", "(1/2+3*i)".
  std::string compact() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& x);

}  // namespace loopwitt
