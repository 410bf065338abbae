#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcat/arrow_term.hpp"
#include "relcat/formula.hpp"
#include "relcat/generators.hpp"

namespace relcat::theories {

enum class Theory { SyMon, ReMon, SMC, RMC, Additive };

std::string to_string(Theory t);
Theory parse_theory(const std::string& name);  // throws std::invalid_argument

// A typed term metavariable: the hole named `name` ranges over arrows
// src ⊢ tgt, where src and tgt may mention the schema's formula
// metavariables.
struct TermMeta {
  std::string name;
  syntax::Formula src;
  syntax::Formula tgt;
};

// An equation schema. lhs and rhs are arrow terms over formula metavariables
// (single uppercase letters) and holes for the term metavariables.
struct AxiomSchema {
  std::string name;
  Theory theory;  // smallest theory containing the schema
  std::vector<std::string> formula_metas;
  std::vector<TermMeta> term_metas;
  syntax::ArrowTerm lhs;
  syntax::ArrowTerm rhs;
};

// All axiom schemata of a theory. Sizes: SyMon 16, ReMon 21, SMC 22, RMC 27,
// Additive 8.
const std::vector<AxiomSchema>& axioms(Theory t);

// Lookup across every theory; throws std::out_of_range for unknown names.
const AxiomSchema& schema_by_name(const std::string& name);

struct MetaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Substitution {
  std::map<std::string, syntax::Formula> formulas;
  std::map<std::string, syntax::ArrowTerm> terms;
};

// Instantiates a schema. Throws MetaError when a metavariable of the schema
// is missing from the substitution, and syntax::TypeError when a term
// assigned to a hole does not have the required (instantiated) type.
syntax::Equation instantiate(const AxiomSchema& schema, const Substitution& sub);

// The middle-interchange arrow A∧B∧(C∧D) ⊢ A∧C∧(B∧D) assembled from b and c.
syntax::ArrowTerm mid_interchange(const syntax::Formula& a, const syntax::Formula& b,
                                  const syntax::Formula& c, const syntax::Formula& d);

gen::Fragment fragment_of(Theory t);

// A random well-typed instance of a schema: formula metavariables get random
// formulas of at most size_bound connectives, term metavariables get random
// composites matching their (progressively pinned) types. frag bounds the
// material the random draws may use.
syntax::Equation random_instance(const AxiomSchema& schema, gen::Rng& rng,
                                 unsigned size_bound, const gen::Fragment& frag);

// count instances drawn round-robin over the schemata of the theory.
std::vector<syntax::Equation> random_axiom_instances(Theory t, unsigned size_bound,
                                                     unsigned count, uint64_t seed);

// Equations derivable from eq by the closure rules: symmetry, composition
// with a common arrow on either side, tensoring with an identity, applying a
// hom functor, and transitivity through a composite. All results are
// well-typed consequences of eq in RMC (or Additive for additive sources).
std::vector<syntax::Equation> closure_sample(const syntax::Equation& eq, unsigned count,
                                             uint64_t seed);

// JSON description of the axiom catalog of a theory.
std::string axioms_json(Theory t);

}  // namespace relcat::theories
