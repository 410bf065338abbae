#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "relcat/arrow_term.hpp"

namespace relcat::relco {

struct FragmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Binary relation between the letter occurrences of two formulas in the
// ∧/⊤ fragment; positions count letters left to right, units contribute no
// position.
struct Relation {
  size_t dom = 0;
  size_t cod = 0;
  std::set<std::pair<size_t, size_t>> pairs;
  bool operator==(const Relation&) const = default;
};

Relation rel_identity(size_t n);
// f after g: pairs (x, z) with (x, y) in g and (y, z) in f.
Relation rel_compose(const Relation& f, const Relation& g);
Relation rel_tensor(const Relation& f, const Relation& g);

// Number of letter occurrences; throws FragmentError outside the ∧/⊤
// fragment.
size_t occurrence_count(const syntax::Formula& f);

// The relation an arrow term denotes. Throws FragmentError on terms (or
// formula arguments) outside the ∧/⊤ fragment and on holes.
Relation rel_of(const syntax::ArrowTerm& t);

struct RemonDecision {
  bool equal = false;
  syntax::ArrowType type;
  Relation lhs;
  Relation rhs;
};

// Decides equality of two parallel arrow terms in the diagonal monoidal
// fragment by comparing their relations. Throws syntax::TypeError when the
// terms are not parallel, FragmentError outside the fragment.
RemonDecision decide_remon_eq(const syntax::ArrowTerm& f, const syntax::ArrowTerm& g);

std::string to_string(const Relation& r);

}  // namespace relcat::relco
