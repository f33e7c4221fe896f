#pragma once

#include "loopwitt/loopalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopwitt {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Element syntax:
//   D(u1,...,un; r1,...,rn)   D(u, r)
//   t(r1,...,rn)              t^r
//   x                         generator of B (x^-1 for Laurent B)
//   i                         imaginary unit
// combined with + - * / ^ and parentheses, e.g. "D(1,0;0,1)*x + t(1,0)*1".
// Products of two algebra elements are rejected; use the bracket instead.

/// Parses a loop-algebra element. If rank is unset it is taken from the first
/// D(...) or t(...) in the text.
LoopElem parse_element(std::string_view text, std::optional<int> rank, const BPresPtr& pres);

/// Parses a B-valued expression such as "x^2 - 3*x + 1".
BElem parse_belem(std::string_view text, const BPresPtr& pres);

/// Deterministic text form, ordered by basis key; re-parses to the same element.
std::string format_element(const LoopElem& x);

}  // namespace loopwitt
