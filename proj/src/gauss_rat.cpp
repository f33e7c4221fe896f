#include "loopwitt/gauss_rat.hpp"

#include <cctype>
#include <utility>

namespace loopwitt {

namespace {

std::string fraction(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string short_fraction(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

[[noreturn]] void bad_scalar(std::string_view text, std::string_view why) {
  throw std::invalid_argument("malformed scalar '" + std::string(text) + "': " +
                              std::string(why));
}

// Reads an unsigned rational "p" or "p/q" starting at pos; empty means 1.
mpq_class read_magnitude(std::string_view text, std::size_t& pos) {
  auto digits = [&](std::string& out) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out.push_back(text[pos++]);
  };
  std::string num;
  digits(num);
  if (num.empty()) return 1;
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den.clear();
    digits(den);
    if (den.empty()) bad_scalar(text, "missing denominator");
  }
  mpz_class d(den);
  if (d == 0) bad_scalar(text, "zero denominator");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat GaussRat::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad_scalar(text, "empty");

  mpq_class re = 0, im = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      bad_scalar(text, "expected sign between parts");
    }
    const std::size_t start = pos;
    mpq_class mag = read_magnitude(s, pos);
    bool imaginary = false;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      imaginary = true;
      ++pos;
    } else if (pos == start) {
      bad_scalar(text, "expected a number");
    }
    (imaginary ? im : re) += sign * mag;
    any = true;
  }
  return GaussRat(re, im);
}

bool GaussRat::is_integer() const { return is_real() && re_.get_den() == 1; }

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussRat(re_ / norm, -im_ / norm);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::str() const {
  std::string out = fraction(re_);
  if (sgn(im_) != 0) {
    out += sgn(im_) > 0 ? "+" : "-";
    out += fraction(abs(im_)) + " i";
  }
  return out;
}

std::string GaussRat::compact() const {
  if (is_real()) return short_fraction(re_);
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return short_fraction(im_) + "*i";
  }
  std::string out = "(" + short_fraction(re_);
  out += sgn(im_) > 0 ? "+" : "-";
  if (abs(im_) != 1) out += short_fraction(abs(im_)) + "*";
  return out + "i)";
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << x.compact(); }

}  // namespace loopwitt
