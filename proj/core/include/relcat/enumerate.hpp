#pragma once

#include <string>
#include <vector>

#include "relcat/formula.hpp"

namespace relcat::iso {

struct EnumOptions {
  unsigned max_size = 4;  // binary connectives
  std::vector<std::string> letters{"p", "q", "r"};
  bool include_top = true;
  bool closed = true;            // also build →
  bool diversified_only = true;  // no letter twice in a formula
};

// Every formula of at most max_size connectives over the given material,
// sizes ascending; within a size, the order follows the construction
// (left size ascending, then left subformula, right subformula, ∧ before →).
std::vector<syntax::Formula> enumerate_formulas(const EnumOptions& opts);

}  // namespace relcat::iso
