#pragma once

#include <string>

#include "relcat/arrow_term.hpp"
#include "relcat/formula.hpp"

namespace relcat::syntax {

enum class Style : uint8_t { Unicode, Ascii };

// Minimal-parenthesis printing; parse(to_string(x)) == x for both styles.
// Binary connectives are non-associative except →, which is right-associative
// and printed tight; ∧/⊓/⊔ are printed with surrounding spaces.
std::string to_string(const Formula& f, Style style = Style::Unicode);
std::string to_string(const ArrowType& t, Style style = Style::Unicode);
std::string to_string(const ArrowTerm& t, Style style = Style::Unicode);
std::string to_string(const Equation& e, Style style = Style::Unicode);

}  // namespace relcat::syntax
