#include "relcat/normal_form.hpp"

#include <algorithm>

#include "relcat/printer.hpp"

namespace relcat::iso {

using syntax::Formula;
using syntax::FormulaKind;

namespace {

std::strong_ordering cmp_lists(const FactorList& a, const FactorList& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

}  // namespace

bool Factor::operator==(const Factor& o) const { return (*this <=> o) == 0; }

std::strong_ordering Factor::operator<=>(const Factor& o) const {
  if (impl != o.impl) return impl <=> o.impl;  // letters sort before impls
  if (!impl) return name <=> o.name;
  if (auto c = cmp_lists(antecedent, o.antecedent); c != 0) return c;
  return cmp_lists(body, o.body);
}

std::strong_ordering NormalForm::operator<=>(const NormalForm& o) const {
  return cmp_lists(factors, o.factors);
}

NormalForm normalize(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Letter:
      return {{Factor{false, f.letter_name(), {}, {}}}};
    case FormulaKind::Top:
      return {};
    case FormulaKind::Conj: {
      NormalForm l = normalize(f.left()), r = normalize(f.right());
      l.factors.insert(l.factors.end(), r.factors.begin(), r.factors.end());
      std::sort(l.factors.begin(), l.factors.end());
      return l;
    }
    case FormulaKind::Impl: {
      NormalForm ant = normalize(f.left()), body = normalize(f.right());
      if (ant.factors.empty()) return body;  // ⊤→C is C
      if (body.factors.size() == 1 && body.factors[0].impl) {
        // A→(C→D) is (A∧C)→D
        Factor inner = std::move(body.factors[0]);
        ant.factors.insert(ant.factors.end(), inner.antecedent.begin(),
                           inner.antecedent.end());
        std::sort(ant.factors.begin(), ant.factors.end());
        return {{Factor{true, "", std::move(ant.factors), std::move(inner.body)}}};
      }
      return {{Factor{true, "", std::move(ant.factors), std::move(body.factors)}}};
    }
    default:
      throw FragmentError("formula " + syntax::to_string(f) +
                          " is outside the ∧/⊤/→ fragment");
  }
}

bool s_equal(const Formula& a, const Formula& b) {
  return normalize(a) == normalize(b);
}

namespace {

Formula conj_all(const FactorList& fs);

Formula factor_formula(const Factor& f) {
  if (!f.impl) return Formula::letter(f.name);
  return Formula::impl(conj_all(f.antecedent), conj_all(f.body));
}

Formula conj_all(const FactorList& fs) {
  if (fs.empty()) return Formula::top();
  Formula out = factor_formula(fs.back());
  for (size_t i = fs.size() - 1; i-- > 0;)
    out = Formula::conj(factor_formula(fs[i]), std::move(out));
  return out;
}

}  // namespace

Formula to_formula(const NormalForm& nf) { return conj_all(nf.factors); }

std::string to_string(const NormalForm& nf) {
  return syntax::to_string(to_formula(nf));
}

}  // namespace relcat::iso
