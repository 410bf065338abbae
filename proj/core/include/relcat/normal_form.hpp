#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcat/formula.hpp"

namespace relcat::iso {

struct FragmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normal form for the ∧/⊤/→ fragment modulo isomorphism: a sorted multiset
// of factors. The empty multiset is ⊤. A factor is a letter or an
// implication with a sorted, nonempty multiset of antecedent factors and a
// normal body that is never a single implication (those merge into the
// antecedent) but may be empty.
struct Factor;
using FactorList = std::vector<Factor>;

struct Factor {
  bool impl = false;
  std::string name;        // letter, when !impl
  FactorList antecedent;   // when impl
  FactorList body;         // when impl

  bool operator==(const Factor& o) const;
  std::strong_ordering operator<=>(const Factor& o) const;
};

struct NormalForm {
  FactorList factors;

  bool operator==(const NormalForm&) const = default;
  std::strong_ordering operator<=>(const NormalForm& o) const;
};

// Throws FragmentError on formulas outside ∧/⊤/→.
NormalForm normalize(const syntax::Formula& f);

bool s_equal(const syntax::Formula& a, const syntax::Formula& b);

// The canonical formula of a normal form (factors conjoined right-nested in
// sorted order).
syntax::Formula to_formula(const NormalForm& nf);

std::string to_string(const NormalForm& nf);

}  // namespace relcat::iso
