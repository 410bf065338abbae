#pragma once

#include <compare>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcat/formula.hpp"

namespace relcat::syntax {

enum class TermKind : uint8_t {
  Id,           // 1_A : A ⊢ A
  BAssocR,      // b→_{A,B,C} : A∧(B∧C) ⊢ (A∧B)∧C
  BAssocL,      // b←_{A,B,C} : (A∧B)∧C ⊢ A∧(B∧C)
  CSym,         // c_{A,B} : A∧B ⊢ B∧A
  DUnitR,       // d→_A : A∧⊤ ⊢ A
  DUnitL,       // d←_A : A ⊢ A∧⊤
  WDiag,        // w_A : A ⊢ A∧A
  Eps,          // ε_{A,B} : A∧(A→B) ⊢ B
  Eta,          // η_{A,B} : B ⊢ A→(A∧B)
  Comp,         // f ∘ g
  Tens,         // f ∧ g
  HomFun,       // A→f : A→B ⊢ A→C for f : B ⊢ C
  Proj1,        // p1_{A,B} : A⊓B ⊢ A
  Proj2,        // p2_{A,B} : A⊓B ⊢ B
  Pair,         // ⟨f,g⟩ : C ⊢ A⊓B
  Inj1,         // i1_{A,B} : A ⊢ A⊔B
  Inj2,         // i2_{A,B} : B ⊢ A⊔B
  Copair,       // [f,g] : A⊔B ⊢ C
  ToTerminal,   // term_A : A ⊢ ⊤ₐ
  FromInitial,  // init_A : ⊤ₐ ⊢ A
  Hole,         // typed metavariable in an axiom pattern
};

// Immutable arrow-term tree; copies share structure.
class ArrowTerm {
 public:
  ArrowTerm();  // defaults to id[⊤]

  static ArrowTerm id(Formula a);
  static ArrowTerm assoc_r(Formula a, Formula b, Formula c);
  static ArrowTerm assoc_l(Formula a, Formula b, Formula c);
  static ArrowTerm sym(Formula a, Formula b);
  static ArrowTerm unit_r(Formula a);
  static ArrowTerm unit_l(Formula a);
  static ArrowTerm diag(Formula a);
  static ArrowTerm eps(Formula a, Formula b);
  static ArrowTerm eta(Formula a, Formula b);
  static ArrowTerm comp(ArrowTerm f, ArrowTerm g);
  static ArrowTerm tens(ArrowTerm f, ArrowTerm g);
  static ArrowTerm hom_fun(Formula a, ArrowTerm f);
  static ArrowTerm proj1(Formula a, Formula b);
  static ArrowTerm proj2(Formula a, Formula b);
  static ArrowTerm pair(ArrowTerm f, ArrowTerm g);
  static ArrowTerm inj1(Formula a, Formula b);
  static ArrowTerm inj2(Formula a, Formula b);
  static ArrowTerm copair(ArrowTerm f, ArrowTerm g);
  static ArrowTerm to_terminal(Formula a);
  static ArrowTerm from_initial(Formula a);
  static ArrowTerm hole(std::string name, ArrowType type);

  TermKind kind() const;
  const std::vector<Formula>& formulas() const;
  const std::vector<ArrowTerm>& subterms() const;
  const std::string& hole_name() const;   // Hole only
  const ArrowType& hole_type() const;     // Hole only

  bool operator==(const ArrowTerm& o) const;
  bool operator!=(const ArrowTerm& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const ArrowTerm& o) const;

  size_t size() const;  // number of term nodes

  struct Node;  // defined in arrow_term.cpp

 private:
  explicit ArrowTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Principal type of a term; throws TypeError with both offending formulae when
// a composition, pair or copair does not balance.
ArrowType infer_type(const ArrowTerm& t);

// A type-balanced pair of arrow terms. The constructor infers both types and
// throws TypeError when they disagree.
class Equation {
 public:
  Equation(ArrowTerm lhs, ArrowTerm rhs);
  const ArrowTerm& lhs() const { return lhs_; }
  const ArrowTerm& rhs() const { return rhs_; }
  const ArrowType& type() const { return type_; }

 private:
  ArrowTerm lhs_, rhs_;
  ArrowType type_;
};

// Replaces letters in every formula argument (hole types included).
ArrowTerm substitute(const ArrowTerm& t, const std::map<std::string, Formula>& subst);

// Replaces each hole by the given term; throws TypeError when a provided term
// does not have the hole's type, std::out_of_range when a hole has no image.
ArrowTerm fill_holes(const ArrowTerm& t, const std::map<std::string, ArrowTerm>& terms);

// Names of the holes occurring in t.
std::vector<std::string> hole_names(const ArrowTerm& t);

}  // namespace relcat::syntax
