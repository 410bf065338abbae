#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "relcat/arrow_term.hpp"
#include "relcat/formula.hpp"

namespace relcat::syntax {

struct ParseError : std::runtime_error {
  size_t position;  // byte offset into the input
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Formula grammar, ASCII and unicode surface forms both accepted:
//   impl   := join ('->' impl)?           right-associative, lowest
//   join   := meet ('+' meet)?            non-associative
//   meet   := wedge ('x' wedge)?          non-associative
//   wedge  := atom ('/\' atom)?           non-associative, tightest
//   atom   := letter | 'T' | 'Ta' | '(' impl ')'
// 'T', 'Ta' and 'x' are reserved; any other identifier is a letter.
Formula parse_formula(std::string_view text);

// Term grammar:
//   comp   := tens ('.' comp)?            right-associative
//   tens   := atom ('*' atom)?            non-associative
//   atom   := prim '[' formula, ... ']'
//           | 'pair' '(' comp ',' comp ')' | 'copair' '(' comp ',' comp ')'
//           | '?' name '[' formula ',' formula ']'
//           | '(' join '->' comp ')'      hom functor; the formula argument
//                                         sits below the '->' level
//           | '(' comp ')'
// with prim one of id bR bL c dR dL w eps eta p1 p2 i1 i2 term init.
ArrowTerm parse_arrow_term(std::string_view text);

// "lhs = rhs" where both sides are arrow terms; type-checks the balance.
Equation parse_equation(std::string_view text);

}  // namespace relcat::syntax
