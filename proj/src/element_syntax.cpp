#include "loopwitt/element_syntax.hpp"

#include <cctype>
#include <cstdlib>
#include <variant>

namespace loopwitt {

namespace {

using Value = std::variant<BElem, LoopElem>;

class Parser {
 public:
  Parser(std::string_view text, std::optional<int> rank, BPresPtr pres)
      : text_(text), rank_(rank), pres_(std::move(pres)) {}

  Value parse_all() {
    Value v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Value add(Value a, const Value& b, bool subtract, std::size_t at) const {
    if (a.index() != b.index()) fail_at(at, "cannot add an algebra element and a B element");
    try {
      if (auto* x = std::get_if<LoopElem>(&a)) {
        subtract ? (*x -= std::get<LoopElem>(b)) : (*x += std::get<LoopElem>(b));
      } else {
        auto& y = std::get<BElem>(a);
        subtract ? (y -= std::get<BElem>(b)) : (y += std::get<BElem>(b));
      }
    } catch (const std::invalid_argument& e) {
      fail_at(at, e.what());
    }
    return a;
  }

  Value multiply(Value a, const Value& b, std::size_t at) const {
    const bool a_loop = std::holds_alternative<LoopElem>(a);
    const bool b_loop = std::holds_alternative<LoopElem>(b);
    if (a_loop && b_loop) fail_at(at, "product of two algebra elements; use the bracket");
    if (a_loop) return std::get<LoopElem>(a) * std::get<BElem>(b);
    if (b_loop) return std::get<LoopElem>(b) * std::get<BElem>(a);
    return std::get<BElem>(a) * std::get<BElem>(b);
  }

  Value divide(Value a, const Value& b, std::size_t at) const {
    const auto* divisor = std::get_if<BElem>(&b);
    auto c = divisor ? divisor->as_scalar() : std::nullopt;
    if (!c) fail_at(at, "can only divide by a scalar");
    if (c->is_zero()) fail_at(at, "division by zero");
    GaussRat inv = c->inverse();
    if (auto* x = std::get_if<LoopElem>(&a)) return *x * inv;
    return std::get<BElem>(a) * inv;
  }

  Value expr() {
    skip_space();
    std::size_t at = pos_;
    Value v = BElem::zero(pres_);
    bool first = true;
    bool negate = !accept('+') && accept('-');
    for (;;) {
      Value t = term();
      if (negate) t = negated(std::move(t));
      v = first ? std::move(t) : add(std::move(v), t, false, at);
      first = false;
      skip_space();
      at = pos_;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return v;
      }
    }
  }

  static Value negated(Value v) {
    if (auto* x = std::get_if<LoopElem>(&v)) return -*x;
    return -std::get<BElem>(v);
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = multiply(std::move(v), unary(), at);
      } else if (accept('/')) {
        v = divide(std::move(v), unary(), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return negated(unary());
    return power();
  }

  Value power() {
    skip_space();
    const std::size_t at = pos_;
    Value base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip_space();
    long k = integer_literal();
    if (neg) k = -k;
    auto* b = std::get_if<BElem>(&base);
    if (!b) fail_at(at, "powers of algebra elements are not defined");
    return belem_power(*b, static_cast<int>(k), at);
  }

  BElem belem_power(const BElem& b, int k, std::size_t at) const {
    const auto& terms = b.rep().terms();
    if (terms.size() == 1) {
      const auto& [e, c] = *terms.begin();
      GaussRat ck(1);
      try {
        GaussRat base = k < 0 ? c.inverse() : c;
        for (int j = 0; j < std::abs(k); ++j) ck *= base;
        return BElem(pres_, LaurentPoly::monomial(ck, e * k));
      } catch (const std::invalid_argument& err) {
        fail_at(at, err.what());
      }
    }
    if (k < 0) fail_at(at, "negative power of a non-monomial");
    if (terms.empty()) return b;
    BElem out = BElem::one(pres_);
    for (int j = 0; j < k; ++j) out *= b;
    return out;
  }

  long integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail_at(start, "integer literal too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Value primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BElem::scalar(pres_, GaussRat(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (c == 'i' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return BElem::scalar(pres_, GaussRat::i());
    }
    if (c == 'x' && !ident_continues(pos_ + 1)) {
      ++pos_;
      try {
        return BElem::generator(pres_);
      } catch (const std::invalid_argument& e) {
        fail_at(at, e.what());
      }
    }
    if (c == 't' && !ident_continues(pos_ + 1)) {
      ++pos_;
      expect('(');
      Degree r = degree_list(at);
      expect(')');
      return LoopSpace(*rank_, pres_).t(r);
    }
    if (c == 'D' && !ident_continues(pos_ + 1)) {
      ++pos_;
      expect('(');
      std::vector<GaussRat> u;
      do {
        u.push_back(scalar_expr());
      } while (accept(','));
      expect(';');
      Degree r = degree_list(at);
      expect(')');
      if (u.size() != r.size()) fail_at(at, "D(u;r) needs u and r of equal length");
      return LoopSpace(*rank_, pres_).D(u, r);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool ident_continues(std::size_t at) const {
    return at < text_.size() && std::isalnum(static_cast<unsigned char>(text_[at]));
  }

  GaussRat scalar_expr() {
    const std::size_t at = pos_;
    Value v = expr();
    const auto* b = std::get_if<BElem>(&v);
    auto c = b ? b->as_scalar() : std::nullopt;
    if (!c) fail_at(at, "expected a scalar");
    return *c;
  }

  Degree degree_list(std::size_t at) {
    Degree r;
    do {
      bool neg = accept('-');
      if (!neg) accept('+');
      long v = integer_literal();
      r.push_back(static_cast<int>(neg ? -v : v));
    } while (accept(','));
    if (!rank_) rank_ = static_cast<int>(r.size());
    if (r.size() != static_cast<std::size_t>(*rank_))
      fail_at(at, "degree of length " + std::to_string(r.size()) + " but rank is " +
                      std::to_string(*rank_));
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<int> rank_;
  BPresPtr pres_;
};

std::string join_ints(const Degree& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out;
}

}  // namespace

LoopElem parse_element(std::string_view text, std::optional<int> rank, const BPresPtr& pres) {
  Parser p(text, rank, pres);
  Value v = p.parse_all();
  if (auto* x = std::get_if<LoopElem>(&v)) return *x;
  const auto& b = std::get<BElem>(v);
  if (b.is_zero() && rank) return LoopElem(*rank, pres);
  throw ParseError(1, 1, "expression is a B element, not an algebra element");
}

BElem parse_belem(std::string_view text, const BPresPtr& pres) {
  Parser p(text, 1, pres);
  Value v = p.parse_all();
  if (auto* b = std::get_if<BElem>(&v)) return *b;
  throw ParseError(1, 1, "expression is an algebra element, not a B element");
}

std::string format_element(const LoopElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, b] : x.terms()) {
    std::string symbol;
    if (key.is_apart()) {
      symbol = "t(" + join_ints(key.degree) + ")";
    } else {
      Degree u(key.degree.size(), 0);
      u[static_cast<std::size_t>(key.component())] = 1;
      symbol = "D(" + join_ints(u) + ";" + join_ints(key.degree) + ")";
    }

    GaussRat scale(1);
    std::string tail;
    const auto& terms = b.rep().terms();
    if (terms.size() == 1) {
      const auto& [e, c] = *terms.begin();
      scale = c;
      tail = e == 0 ? "1" : (e == 1 ? "x" : "x^" + std::to_string(e));
    } else {
      tail = "(" + b.str() + ")";
    }
    const bool negative = scale.is_real() && sgn(scale.re()) < 0;
    if (negative) scale = -scale;
    std::string text = (scale == GaussRat(1) ? "" : scale.compact() + "*") + symbol + "*" + tail;

    if (first) {
      out += negative ? "-" + text : text;
    } else {
      out += (negative ? " - " : " + ") + text;
    }
    first = false;
  }
  return out;
}

}  // namespace loopwitt
