#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace relcat::syntax {

enum class FormulaKind : uint8_t {
  Letter,   // propositional letter
  Top,      // multiplicative unit
  AddUnit,  // additive unit (zero object in the model)
  Conj,     // A ∧ B
  Impl,     // A → B
  Prod,     // A ⊓ B
  Coprod,   // A ⊔ B
};

constexpr bool is_binary(FormulaKind k) {
  return k == FormulaKind::Conj || k == FormulaKind::Impl ||
         k == FormulaKind::Prod || k == FormulaKind::Coprod;
}

// Immutable formula tree; copies share structure.
class Formula {
 public:
  Formula();  // defaults to ⊤

  static Formula letter(std::string name);
  static Formula top();
  static Formula add_unit();
  static Formula conj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula prod(Formula a, Formula b);
  static Formula coprod(Formula a, Formula b);
  static Formula binary(FormulaKind k, Formula a, Formula b);

  FormulaKind kind() const;
  const std::string& letter_name() const;  // Letter only
  Formula left() const;                    // binary only
  Formula right() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const Formula& o) const;

  // Number of binary connectives.
  size_t size() const;

  const void* raw() const;  // identity of the shared node, for memo tables

  struct Node;  // defined in formula.cpp

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ArrowType {
  Formula source, target;
  bool operator==(const ArrowType&) const = default;
  std::strong_ordering operator<=>(const ArrowType&) const = default;
};

// Letters in left-to-right order of occurrence (leaves of the tree).
std::vector<std::string> occurrences(const Formula& f);

// Sorted, de-duplicated letter set.
std::vector<std::string> letters_of(const Formula& f);

// True when no letter occurs twice.
bool diversified(const Formula& f);

// Replaces every letter present in `subst` by its image.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& subst);

// True when f only uses letters, ⊤ and ∧ (the relational-coherence fragment).
bool in_monoidal_fragment(const Formula& f);

// True when f only uses letters, ⊤, ∧ and → (the S-calculus fragment).
bool in_s_fragment(const Formula& f);

}  // namespace relcat::syntax
