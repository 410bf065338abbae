#include "relcat/generators.hpp"

#include <utility>

namespace relcat::gen {

using syntax::ArrowTerm;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::TermKind;

namespace {

size_t draw(Rng& rng, size_t n) { return static_cast<size_t>(rng() % n); }

Formula leaf(Rng& rng, const std::vector<std::string>& letters, const Fragment& frag) {
  // Letters dominate; units show up often enough to exercise the unit laws.
  size_t extra = frag.additive ? 2 : 1;
  size_t k = draw(rng, 3 * letters.size() + extra);
  if (k < 3 * letters.size()) return Formula::letter(letters[k / 3]);
  return (k == 3 * letters.size()) ? Formula::top() : Formula::add_unit();
}

Formula build(Rng& rng, unsigned n, const std::vector<std::string>& letters,
              const Fragment& frag) {
  if (n == 0) return leaf(rng, letters, frag);
  std::vector<FormulaKind> ops{FormulaKind::Conj};
  if (frag.closed) ops.push_back(FormulaKind::Impl);
  if (frag.additive) {
    ops.push_back(FormulaKind::Prod);
    ops.push_back(FormulaKind::Coprod);
  }
  FormulaKind op = ops[draw(rng, ops.size())];
  unsigned l = static_cast<unsigned>(draw(rng, n));
  return Formula::binary(op, build(rng, l, letters, frag),
                         build(rng, n - 1 - l, letters, frag));
}

}  // namespace

Formula random_formula(Rng& rng, unsigned max_connectives,
                       const std::vector<std::string>& letters, const Fragment& frag) {
  unsigned n = static_cast<unsigned>(draw(rng, max_connectives + 1));
  return build(rng, n, letters, frag);
}

std::vector<ArrowTerm> steps_from(const Formula& x, const std::vector<Formula>& universe,
                                  const Fragment& frag, int congruence) {
  std::vector<ArrowTerm> out;
  if (x.kind() == FormulaKind::Conj) {
    Formula a = x.left(), b = x.right();
    if (b.kind() == FormulaKind::Conj)
      out.push_back(ArrowTerm::assoc_r(a, b.left(), b.right()));
    if (a.kind() == FormulaKind::Conj)
      out.push_back(ArrowTerm::assoc_l(a.left(), a.right(), b));
    out.push_back(ArrowTerm::sym(a, b));
    if (b.kind() == FormulaKind::Top) out.push_back(ArrowTerm::unit_r(a));
    if (frag.closed && b.kind() == FormulaKind::Impl && b.left() == a)
      out.push_back(ArrowTerm::eps(a, b.right()));
  }
  out.push_back(ArrowTerm::unit_l(x));
  if (frag.diag) out.push_back(ArrowTerm::diag(x));
  if (frag.closed)
    for (const Formula& u : universe) out.push_back(ArrowTerm::eta(u, x));
  if (frag.additive) {
    if (x.kind() == FormulaKind::Prod) {
      out.push_back(ArrowTerm::proj1(x.left(), x.right()));
      out.push_back(ArrowTerm::proj2(x.left(), x.right()));
    }
    out.push_back(ArrowTerm::to_terminal(x));
    for (const Formula& u : universe) {
      out.push_back(ArrowTerm::inj1(x, u));
      out.push_back(ArrowTerm::inj2(u, x));
    }
    if (x.kind() == FormulaKind::AddUnit)
      for (const Formula& u : universe) out.push_back(ArrowTerm::from_initial(u));
  }
  if (congruence > 0) {
    if (x.kind() == FormulaKind::Conj) {
      for (ArrowTerm& s : steps_from(x.left(), universe, frag, congruence - 1))
        out.push_back(ArrowTerm::tens(std::move(s), ArrowTerm::id(x.right())));
      for (ArrowTerm& s : steps_from(x.right(), universe, frag, congruence - 1))
        out.push_back(ArrowTerm::tens(ArrowTerm::id(x.left()), std::move(s)));
    }
    if (frag.closed && x.kind() == FormulaKind::Impl)
      for (ArrowTerm& s : steps_from(x.right(), universe, frag, congruence - 1))
        out.push_back(ArrowTerm::hom_fun(x.left(), std::move(s)));
  }
  return out;
}

std::vector<ArrowTerm> steps_into(const Formula& x, const std::vector<Formula>& universe,
                                  const Fragment& frag, int congruence) {
  std::vector<ArrowTerm> out;
  if (x.kind() == FormulaKind::Conj) {
    Formula a = x.left(), b = x.right();
    if (a.kind() == FormulaKind::Conj)
      out.push_back(ArrowTerm::assoc_r(a.left(), a.right(), b));
    if (b.kind() == FormulaKind::Conj)
      out.push_back(ArrowTerm::assoc_l(a, b.left(), b.right()));
    out.push_back(ArrowTerm::sym(b, a));
    if (b.kind() == FormulaKind::Top) out.push_back(ArrowTerm::unit_l(a));
    if (frag.diag && a == b) out.push_back(ArrowTerm::diag(a));
  }
  out.push_back(ArrowTerm::unit_r(x));
  if (frag.closed) {
    for (const Formula& u : universe) out.push_back(ArrowTerm::eps(u, x));
    if (x.kind() == FormulaKind::Impl && x.right().kind() == FormulaKind::Conj &&
        x.right().left() == x.left())
      out.push_back(ArrowTerm::eta(x.left(), x.right().right()));
  }
  if (frag.additive) {
    if (x.kind() == FormulaKind::Coprod) {
      out.push_back(ArrowTerm::inj1(x.left(), x.right()));
      out.push_back(ArrowTerm::inj2(x.left(), x.right()));
    }
    out.push_back(ArrowTerm::from_initial(x));
    for (const Formula& u : universe) {
      out.push_back(ArrowTerm::proj1(x, u));
      out.push_back(ArrowTerm::proj2(u, x));
    }
    if (x.kind() == FormulaKind::AddUnit)
      for (const Formula& u : universe) out.push_back(ArrowTerm::to_terminal(u));
  }
  if (congruence > 0) {
    if (x.kind() == FormulaKind::Conj) {
      for (ArrowTerm& s : steps_into(x.left(), universe, frag, congruence - 1))
        out.push_back(ArrowTerm::tens(std::move(s), ArrowTerm::id(x.right())));
      for (ArrowTerm& s : steps_into(x.right(), universe, frag, congruence - 1))
        out.push_back(ArrowTerm::tens(ArrowTerm::id(x.left()), std::move(s)));
    }
    if (frag.closed && x.kind() == FormulaKind::Impl)
      for (ArrowTerm& s : steps_into(x.right(), universe, frag, congruence - 1))
        out.push_back(ArrowTerm::hom_fun(x.left(), std::move(s)));
  }
  return out;
}

ArrowTerm random_term_from(Rng& rng, const Formula& src, unsigned depth,
                           const std::vector<Formula>& universe, const Fragment& frag) {
  ArrowTerm t = ArrowTerm::id(src);
  Formula cur = src;
  unsigned k = static_cast<unsigned>(draw(rng, depth + 1));
  for (unsigned i = 0; i < k; ++i) {
    auto steps = steps_from(cur, universe, frag);
    if (steps.empty()) break;
    ArrowTerm s = steps[draw(rng, steps.size())];
    cur = syntax::infer_type(s).target;
    t = ArrowTerm::comp(std::move(s), std::move(t));
  }
  return t;
}

ArrowTerm random_term_into(Rng& rng, const Formula& tgt, unsigned depth,
                           const std::vector<Formula>& universe, const Fragment& frag) {
  ArrowTerm t = ArrowTerm::id(tgt);
  Formula cur = tgt;
  unsigned k = static_cast<unsigned>(draw(rng, depth + 1));
  for (unsigned i = 0; i < k; ++i) {
    auto steps = steps_into(cur, universe, frag);
    if (steps.empty()) break;
    ArrowTerm s = steps[draw(rng, steps.size())];
    cur = syntax::infer_type(s).source;
    t = ArrowTerm::comp(std::move(t), std::move(s));
  }
  return t;
}

ArrowTerm random_term(Rng& rng, unsigned formula_size, unsigned depth,
                      const std::vector<std::string>& letters, const Fragment& frag) {
  Formula src = random_formula(rng, formula_size, letters, frag);
  std::vector<Formula> universe;
  for (const std::string& l : letters) universe.push_back(Formula::letter(l));
  universe.push_back(Formula::top());
  return random_term_from(rng, src, depth, universe, frag);
}

ArrowTerm random_raw_term(Rng& rng, unsigned depth, const std::vector<std::string>& letters) {
  Fragment all{true, true, true};
  auto f = [&] { return random_formula(rng, 2, letters, all); };
  if (depth == 0) {
    switch (draw(rng, 10)) {
      case 0: return ArrowTerm::id(f());
      case 1: return ArrowTerm::assoc_r(f(), f(), f());
      case 2: return ArrowTerm::assoc_l(f(), f(), f());
      case 3: return ArrowTerm::sym(f(), f());
      case 4: return ArrowTerm::unit_r(f());
      case 5: return ArrowTerm::unit_l(f());
      case 6: return ArrowTerm::diag(f());
      case 7: return ArrowTerm::eps(f(), f());
      case 8: return ArrowTerm::eta(f(), f());
      default: return ArrowTerm::hole("h" + std::to_string(draw(rng, 3)), {f(), f()});
    }
  }
  auto sub = [&] { return random_raw_term(rng, depth - 1, letters); };
  switch (draw(rng, 10)) {
    case 0: return ArrowTerm::comp(sub(), sub());
    case 1: return ArrowTerm::tens(sub(), sub());
    case 2: return ArrowTerm::hom_fun(f(), sub());
    case 3: return ArrowTerm::pair(sub(), sub());
    case 4: return ArrowTerm::copair(sub(), sub());
    case 5: return ArrowTerm::proj1(f(), f());
    case 6: return ArrowTerm::proj2(f(), f());
    case 7: return ArrowTerm::inj1(f(), f());
    case 8: return ArrowTerm::inj2(f(), f());
    default: return draw(rng, 2) ? ArrowTerm::to_terminal(f()) : ArrowTerm::from_initial(f());
  }
}

}  // namespace relcat::gen
