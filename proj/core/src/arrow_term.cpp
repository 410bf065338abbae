#include "relcat/arrow_term.hpp"

#include <algorithm>
#include <optional>

#include "relcat/printer.hpp"

namespace relcat::syntax {

struct ArrowTerm::Node {
  TermKind kind;
  std::vector<Formula> formulas;
  std::vector<ArrowTerm> subterms;
  std::string hole_name;
  std::optional<ArrowType> hole_type;
};

namespace {

using Node = ArrowTerm::Node;

}  // namespace

ArrowTerm::ArrowTerm()
    : node_(std::make_shared<const Node>(
          Node{TermKind::Id, {Formula::top()}, {}, {}, std::nullopt})) {}

namespace {

std::shared_ptr<const Node> mk(TermKind k, std::vector<Formula> fs,
                               std::vector<ArrowTerm> ts) {
  return std::make_shared<const Node>(
      Node{k, std::move(fs), std::move(ts), {}, std::nullopt});
}

}  // namespace

ArrowTerm ArrowTerm::id(Formula a) {
  return ArrowTerm(mk(TermKind::Id, {std::move(a)}, {}));
}
ArrowTerm ArrowTerm::assoc_r(Formula a, Formula b, Formula c) {
  return ArrowTerm(mk(TermKind::BAssocR, {std::move(a), std::move(b), std::move(c)}, {}));
}
ArrowTerm ArrowTerm::assoc_l(Formula a, Formula b, Formula c) {
  return ArrowTerm(mk(TermKind::BAssocL, {std::move(a), std::move(b), std::move(c)}, {}));
}
ArrowTerm ArrowTerm::sym(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::CSym, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::unit_r(Formula a) {
  return ArrowTerm(mk(TermKind::DUnitR, {std::move(a)}, {}));
}
ArrowTerm ArrowTerm::unit_l(Formula a) {
  return ArrowTerm(mk(TermKind::DUnitL, {std::move(a)}, {}));
}
ArrowTerm ArrowTerm::diag(Formula a) {
  return ArrowTerm(mk(TermKind::WDiag, {std::move(a)}, {}));
}
ArrowTerm ArrowTerm::eps(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::Eps, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::eta(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::Eta, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::comp(ArrowTerm f, ArrowTerm g) {
  return ArrowTerm(mk(TermKind::Comp, {}, {std::move(f), std::move(g)}));
}
ArrowTerm ArrowTerm::tens(ArrowTerm f, ArrowTerm g) {
  return ArrowTerm(mk(TermKind::Tens, {}, {std::move(f), std::move(g)}));
}
ArrowTerm ArrowTerm::hom_fun(Formula a, ArrowTerm f) {
  return ArrowTerm(mk(TermKind::HomFun, {std::move(a)}, {std::move(f)}));
}
ArrowTerm ArrowTerm::proj1(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::Proj1, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::proj2(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::Proj2, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::pair(ArrowTerm f, ArrowTerm g) {
  return ArrowTerm(mk(TermKind::Pair, {}, {std::move(f), std::move(g)}));
}
ArrowTerm ArrowTerm::inj1(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::Inj1, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::inj2(Formula a, Formula b) {
  return ArrowTerm(mk(TermKind::Inj2, {std::move(a), std::move(b)}, {}));
}
ArrowTerm ArrowTerm::copair(ArrowTerm f, ArrowTerm g) {
  return ArrowTerm(mk(TermKind::Copair, {}, {std::move(f), std::move(g)}));
}
ArrowTerm ArrowTerm::to_terminal(Formula a) {
  return ArrowTerm(mk(TermKind::ToTerminal, {std::move(a)}, {}));
}
ArrowTerm ArrowTerm::from_initial(Formula a) {
  return ArrowTerm(mk(TermKind::FromInitial, {std::move(a)}, {}));
}
ArrowTerm ArrowTerm::hole(std::string name, ArrowType type) {
  auto n = std::make_shared<Node>(
      Node{TermKind::Hole, {}, {}, std::move(name), std::move(type)});
  return ArrowTerm(std::shared_ptr<const Node>(std::move(n)));
}

TermKind ArrowTerm::kind() const { return node_->kind; }
const std::vector<Formula>& ArrowTerm::formulas() const { return node_->formulas; }
const std::vector<ArrowTerm>& ArrowTerm::subterms() const { return node_->subterms; }

const std::string& ArrowTerm::hole_name() const {
  if (node_->kind != TermKind::Hole)
    throw std::logic_error("hole_name() on a non-hole term");
  return node_->hole_name;
}

const ArrowType& ArrowTerm::hole_type() const {
  if (node_->kind != TermKind::Hole)
    throw std::logic_error("hole_type() on a non-hole term");
  return *node_->hole_type;
}

std::strong_ordering ArrowTerm::operator<=>(const ArrowTerm& o) const {
  if (node_.get() == o.node_.get()) return std::strong_ordering::equal;
  if (auto c = node_->kind <=> o.node_->kind; c != 0) return c;
  if (auto c = node_->formulas.size() <=> o.node_->formulas.size(); c != 0) return c;
  for (size_t i = 0; i < node_->formulas.size(); ++i)
    if (auto c = node_->formulas[i] <=> o.node_->formulas[i]; c != 0) return c;
  if (auto c = node_->subterms.size() <=> o.node_->subterms.size(); c != 0) return c;
  for (size_t i = 0; i < node_->subterms.size(); ++i)
    if (auto c = node_->subterms[i] <=> o.node_->subterms[i]; c != 0) return c;
  if (node_->kind == TermKind::Hole) {
    if (auto c = node_->hole_name <=> o.node_->hole_name; c != 0) return c;
    return *node_->hole_type <=> *o.node_->hole_type;
  }
  return std::strong_ordering::equal;
}

bool ArrowTerm::operator==(const ArrowTerm& o) const { return (*this <=> o) == 0; }

size_t ArrowTerm::size() const {
  size_t n = 1;
  for (const auto& s : subterms()) n += s.size();
  return n;
}

namespace {

[[noreturn]] void mismatch(const char* what, const Formula& x, const Formula& y) {
  throw TypeError(std::string(what) + ": " + to_string(x) + " vs " + to_string(y));
}

}  // namespace

ArrowType infer_type(const ArrowTerm& t) {
  const auto& fs = t.formulas();
  const auto& ts = t.subterms();
  switch (t.kind()) {
    case TermKind::Id:
      return {fs[0], fs[0]};
    case TermKind::BAssocR:
      return {Formula::conj(fs[0], Formula::conj(fs[1], fs[2])),
              Formula::conj(Formula::conj(fs[0], fs[1]), fs[2])};
    case TermKind::BAssocL:
      return {Formula::conj(Formula::conj(fs[0], fs[1]), fs[2]),
              Formula::conj(fs[0], Formula::conj(fs[1], fs[2]))};
    case TermKind::CSym:
      return {Formula::conj(fs[0], fs[1]), Formula::conj(fs[1], fs[0])};
    case TermKind::DUnitR:
      return {Formula::conj(fs[0], Formula::top()), fs[0]};
    case TermKind::DUnitL:
      return {fs[0], Formula::conj(fs[0], Formula::top())};
    case TermKind::WDiag:
      return {fs[0], Formula::conj(fs[0], fs[0])};
    case TermKind::Eps:
      return {Formula::conj(fs[0], Formula::impl(fs[0], fs[1])), fs[1]};
    case TermKind::Eta:
      return {fs[1], Formula::impl(fs[0], Formula::conj(fs[0], fs[1]))};
    case TermKind::Comp: {
      ArrowType f = infer_type(ts[0]), g = infer_type(ts[1]);
      if (g.target != f.source)
        mismatch("composition mismatch", g.target, f.source);
      return {g.source, f.target};
    }
    case TermKind::Tens: {
      ArrowType f = infer_type(ts[0]), g = infer_type(ts[1]);
      return {Formula::conj(f.source, g.source),
              Formula::conj(f.target, g.target)};
    }
    case TermKind::HomFun: {
      ArrowType f = infer_type(ts[0]);
      return {Formula::impl(fs[0], f.source), Formula::impl(fs[0], f.target)};
    }
    case TermKind::Proj1:
      return {Formula::prod(fs[0], fs[1]), fs[0]};
    case TermKind::Proj2:
      return {Formula::prod(fs[0], fs[1]), fs[1]};
    case TermKind::Pair: {
      ArrowType f = infer_type(ts[0]), g = infer_type(ts[1]);
      if (f.source != g.source)
        mismatch("pair source mismatch", f.source, g.source);
      return {f.source, Formula::prod(f.target, g.target)};
    }
    case TermKind::Inj1:
      return {fs[0], Formula::coprod(fs[0], fs[1])};
    case TermKind::Inj2:
      return {fs[1], Formula::coprod(fs[0], fs[1])};
    case TermKind::Copair: {
      ArrowType f = infer_type(ts[0]), g = infer_type(ts[1]);
      if (f.target != g.target)
        mismatch("copair target mismatch", f.target, g.target);
      return {Formula::coprod(f.source, g.source), f.target};
    }
    case TermKind::ToTerminal:
      return {fs[0], Formula::add_unit()};
    case TermKind::FromInitial:
      return {Formula::add_unit(), fs[0]};
    case TermKind::Hole:
      return t.hole_type();
  }
  throw std::logic_error("unreachable term kind");
}

Equation::Equation(ArrowTerm lhs, ArrowTerm rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), type_(infer_type(lhs_)) {
  ArrowType rt = infer_type(rhs_);
  if (rt != type_)
    throw TypeError("equation sides have different types: " + to_string(type_) +
                    " vs " + to_string(rt));
}

ArrowTerm substitute(const ArrowTerm& t, const std::map<std::string, Formula>& subst) {
  std::vector<Formula> fs;
  fs.reserve(t.formulas().size());
  for (const auto& f : t.formulas()) fs.push_back(substitute(f, subst));
  std::vector<ArrowTerm> ts;
  ts.reserve(t.subterms().size());
  for (const auto& s : t.subterms()) ts.push_back(substitute(s, subst));

  switch (t.kind()) {
    case TermKind::Id: return ArrowTerm::id(fs[0]);
    case TermKind::BAssocR: return ArrowTerm::assoc_r(fs[0], fs[1], fs[2]);
    case TermKind::BAssocL: return ArrowTerm::assoc_l(fs[0], fs[1], fs[2]);
    case TermKind::CSym: return ArrowTerm::sym(fs[0], fs[1]);
    case TermKind::DUnitR: return ArrowTerm::unit_r(fs[0]);
    case TermKind::DUnitL: return ArrowTerm::unit_l(fs[0]);
    case TermKind::WDiag: return ArrowTerm::diag(fs[0]);
    case TermKind::Eps: return ArrowTerm::eps(fs[0], fs[1]);
    case TermKind::Eta: return ArrowTerm::eta(fs[0], fs[1]);
    case TermKind::Comp: return ArrowTerm::comp(ts[0], ts[1]);
    case TermKind::Tens: return ArrowTerm::tens(ts[0], ts[1]);
    case TermKind::HomFun: return ArrowTerm::hom_fun(fs[0], ts[0]);
    case TermKind::Proj1: return ArrowTerm::proj1(fs[0], fs[1]);
    case TermKind::Proj2: return ArrowTerm::proj2(fs[0], fs[1]);
    case TermKind::Pair: return ArrowTerm::pair(ts[0], ts[1]);
    case TermKind::Inj1: return ArrowTerm::inj1(fs[0], fs[1]);
    case TermKind::Inj2: return ArrowTerm::inj2(fs[0], fs[1]);
    case TermKind::Copair: return ArrowTerm::copair(ts[0], ts[1]);
    case TermKind::ToTerminal: return ArrowTerm::to_terminal(fs[0]);
    case TermKind::FromInitial: return ArrowTerm::from_initial(fs[0]);
    case TermKind::Hole:
      return ArrowTerm::hole(t.hole_name(),
                             {substitute(t.hole_type().source, subst),
                              substitute(t.hole_type().target, subst)});
  }
  throw std::logic_error("unreachable term kind");
}

ArrowTerm fill_holes(const ArrowTerm& t, const std::map<std::string, ArrowTerm>& terms) {
  if (t.kind() == TermKind::Hole) {
    const ArrowTerm& image = terms.at(t.hole_name());
    ArrowType got = infer_type(image);
    if (got != t.hole_type())
      throw TypeError("term for hole ?" + t.hole_name() + " has type " +
                      to_string(got) + ", expected " + to_string(t.hole_type()));
    return image;
  }
  if (t.subterms().empty()) return t;
  std::vector<ArrowTerm> ts;
  ts.reserve(t.subterms().size());
  for (const auto& s : t.subterms()) ts.push_back(fill_holes(s, terms));
  switch (t.kind()) {
    case TermKind::Comp: return ArrowTerm::comp(ts[0], ts[1]);
    case TermKind::Tens: return ArrowTerm::tens(ts[0], ts[1]);
    case TermKind::HomFun: return ArrowTerm::hom_fun(t.formulas()[0], ts[0]);
    case TermKind::Pair: return ArrowTerm::pair(ts[0], ts[1]);
    case TermKind::Copair: return ArrowTerm::copair(ts[0], ts[1]);
    default:
      throw std::logic_error("unexpected compound term kind");
  }
}

namespace {

void collect_holes(const ArrowTerm& t, std::vector<std::string>& out) {
  if (t.kind() == TermKind::Hole) {
    out.push_back(t.hole_name());
    return;
  }
  for (const auto& s : t.subterms()) collect_holes(s, out);
}

}  // namespace

std::vector<std::string> hole_names(const ArrowTerm& t) {
  std::vector<std::string> out;
  collect_holes(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace relcat::syntax
