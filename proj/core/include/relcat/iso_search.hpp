#pragma once

#include <cstddef>
#include <optional>

#include "relcat/arrow_term.hpp"
#include "relcat/formula.hpp"

namespace relcat::iso {

struct IsoSearchOptions {
  unsigned max_steps = 6;      // composition length per direction
  size_t max_states = 20000;   // visited formulas per direction
  size_t terms_per_state = 4;  // distinct arrows kept per reached formula
};

struct IsoWitness {
  syntax::ArrowTerm forward;   // a ⊢ b
  syntax::ArrowTerm backward;  // b ⊢ a
};

// Bounded search for an explicit isomorphism pair between a and b: arrows are
// grown step by step in both directions and candidate pairs are verified to
// compose to identities in the pointed-set model on small carriers. Returns
// nothing when the formulas are not ∧/⊤/→-isomorphic or no pair is found
// within the bounds.
std::optional<IsoWitness> bounded_iso_search(const syntax::Formula& a,
                                             const syntax::Formula& b,
                                             const IsoSearchOptions& opts = {});

}  // namespace relcat::iso
