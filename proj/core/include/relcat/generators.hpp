#pragma once

#include <random>
#include <string>
#include <vector>

#include "relcat/arrow_term.hpp"
#include "relcat/formula.hpp"

namespace relcat::gen {

using Rng = std::mt19937_64;

// Which primitives a generated term or formula may use.
struct Fragment {
  bool diag = true;      // w
  bool closed = false;   // eps, eta, hom functor, → in formulas
  bool additive = false; // p1/p2/i1/i2/pair/copair/term/init, ⊓/⊔/⊤ₐ
};

syntax::Formula random_formula(Rng& rng, unsigned max_connectives,
                               const std::vector<std::string>& letters,
                               const Fragment& frag);

// All arrows out of (resp. into) x built from a single primitive, possibly
// pushed inside by the functorial operations (s ∧ 1, 1 ∧ s, A → s), nested up
// to `congruence` levels. `universe` supplies the free formula parameter of
// η, ε and the injections.
std::vector<syntax::ArrowTerm> steps_from(const syntax::Formula& x,
                                          const std::vector<syntax::Formula>& universe,
                                          const Fragment& frag, int congruence = 2);
std::vector<syntax::ArrowTerm> steps_into(const syntax::Formula& x,
                                          const std::vector<syntax::Formula>& universe,
                                          const Fragment& frag, int congruence = 2);

// Random composite of at most `depth` steps leaving src (target unconstrained).
syntax::ArrowTerm random_term_from(Rng& rng, const syntax::Formula& src, unsigned depth,
                                   const std::vector<syntax::Formula>& universe,
                                   const Fragment& frag);

// Random composite of at most `depth` steps arriving at tgt (source
// unconstrained).
syntax::ArrowTerm random_term_into(Rng& rng, const syntax::Formula& tgt, unsigned depth,
                                   const std::vector<syntax::Formula>& universe,
                                   const Fragment& frag);

// Random composite with both ends free: a random source formula, then at most
// `depth` steps.
syntax::ArrowTerm random_term(Rng& rng, unsigned formula_size, unsigned depth,
                              const std::vector<std::string>& letters,
                              const Fragment& frag);

// Purely syntactic random term over every constructor, not necessarily
// well-typed; for parser and printer round-trip testing.
syntax::ArrowTerm random_raw_term(Rng& rng, unsigned depth,
                                  const std::vector<std::string>& letters);

}  // namespace relcat::gen
