#include "relcat/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace relcat::syntax {

struct Formula::Node {
  FormulaKind kind;
  std::string name;  // Letter only
  std::shared_ptr<const Node> a, b;
};

namespace {

const std::shared_ptr<const Formula::Node>& top_node() {
  static const auto n = std::make_shared<const Formula::Node>(
      Formula::Node{FormulaKind::Top, {}, nullptr, nullptr});
  return n;
}

const std::shared_ptr<const Formula::Node>& add_unit_node() {
  static const auto n = std::make_shared<const Formula::Node>(
      Formula::Node{FormulaKind::AddUnit, {}, nullptr, nullptr});
  return n;
}

}  // namespace

Formula::Formula() : node_(top_node()) {}

Formula Formula::letter(std::string name) {
  if (name.empty()) throw std::invalid_argument("letter name must be nonempty");
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Letter, std::move(name), nullptr, nullptr}));
}

Formula Formula::top() { return Formula(top_node()); }

Formula Formula::add_unit() { return Formula(add_unit_node()); }

Formula Formula::binary(FormulaKind k, Formula a, Formula b) {
  if (!is_binary(k)) throw std::invalid_argument("binary() needs a binary kind");
  return Formula(std::make_shared<const Node>(
      Node{k, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::conj(Formula a, Formula b) {
  return binary(FormulaKind::Conj, std::move(a), std::move(b));
}
Formula Formula::impl(Formula a, Formula b) {
  return binary(FormulaKind::Impl, std::move(a), std::move(b));
}
Formula Formula::prod(Formula a, Formula b) {
  return binary(FormulaKind::Prod, std::move(a), std::move(b));
}
Formula Formula::coprod(Formula a, Formula b) {
  return binary(FormulaKind::Coprod, std::move(a), std::move(b));
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::letter_name() const {
  if (node_->kind != FormulaKind::Letter)
    throw std::logic_error("letter_name() on a non-letter formula");
  return node_->name;
}

Formula Formula::left() const {
  if (!node_->a) throw std::logic_error("left() on a nullary formula");
  return Formula(node_->a);
}

Formula Formula::right() const {
  if (!node_->b) throw std::logic_error("right() on a nullary formula");
  return Formula(node_->b);
}

const void* Formula::raw() const { return node_.get(); }

namespace {

std::strong_ordering cmp(const Formula::Node* x, const Formula::Node* y);

std::strong_ordering cmp_children(const Formula::Node* x, const Formula::Node* y) {
  if (auto c = cmp(x->a.get(), y->a.get()); c != 0) return c;
  return cmp(x->b.get(), y->b.get());
}

std::strong_ordering cmp(const Formula::Node* x, const Formula::Node* y) {
  if (x == y) return std::strong_ordering::equal;
  if (!x) return std::strong_ordering::less;
  if (!y) return std::strong_ordering::greater;
  if (x->kind != y->kind) return x->kind <=> y->kind;
  if (x->kind == FormulaKind::Letter) return x->name <=> y->name;
  return cmp_children(x, y);
}

}  // namespace

bool Formula::operator==(const Formula& o) const {
  return cmp(node_.get(), o.node_.get()) == 0;
}

std::strong_ordering Formula::operator<=>(const Formula& o) const {
  return cmp(node_.get(), o.node_.get());
}

size_t Formula::size() const {
  switch (kind()) {
    case FormulaKind::Letter:
    case FormulaKind::Top:
    case FormulaKind::AddUnit:
      return 0;
    default:
      return 1 + left().size() + right().size();
  }
}

namespace {

void collect_occurrences(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Letter:
      out.push_back(f.letter_name());
      return;
    case FormulaKind::Top:
    case FormulaKind::AddUnit:
      return;
    default:
      collect_occurrences(f.left(), out);
      collect_occurrences(f.right(), out);
  }
}

}  // namespace

std::vector<std::string> occurrences(const Formula& f) {
  std::vector<std::string> out;
  collect_occurrences(f, out);
  return out;
}

std::vector<std::string> letters_of(const Formula& f) {
  auto out = occurrences(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool diversified(const Formula& f) {
  auto occ = occurrences(f);
  std::sort(occ.begin(), occ.end());
  return std::adjacent_find(occ.begin(), occ.end()) == occ.end();
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& subst) {
  switch (f.kind()) {
    case FormulaKind::Letter: {
      auto it = subst.find(f.letter_name());
      return it == subst.end() ? f : it->second;
    }
    case FormulaKind::Top:
    case FormulaKind::AddUnit:
      return f;
    default:
      return Formula::binary(f.kind(), substitute(f.left(), subst),
                             substitute(f.right(), subst));
  }
}

bool in_monoidal_fragment(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Letter:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Conj:
      return in_monoidal_fragment(f.left()) && in_monoidal_fragment(f.right());
    default:
      return false;
  }
}

bool in_s_fragment(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Letter:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Conj:
    case FormulaKind::Impl:
      return in_s_fragment(f.left()) && in_s_fragment(f.right());
    default:
      return false;
  }
}

}  // namespace relcat::syntax
