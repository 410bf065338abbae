#include "relcat/relation.hpp"

#include <map>
#include <vector>

#include "relcat/printer.hpp"

namespace relcat::relco {

using syntax::ArrowTerm;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::TermKind;

Relation rel_identity(size_t n) {
  Relation r{n, n, {}};
  for (size_t i = 0; i < n; ++i) r.pairs.insert({i, i});
  return r;
}

Relation rel_compose(const Relation& f, const Relation& g) {
  std::map<size_t, std::vector<size_t>> by_mid;
  for (const auto& [y, z] : f.pairs) by_mid[y].push_back(z);
  Relation r{g.dom, f.cod, {}};
  for (const auto& [x, y] : g.pairs) {
    auto it = by_mid.find(y);
    if (it == by_mid.end()) continue;
    for (size_t z : it->second) r.pairs.insert({x, z});
  }
  return r;
}

Relation rel_tensor(const Relation& f, const Relation& g) {
  Relation r{f.dom + g.dom, f.cod + g.cod, f.pairs};
  for (const auto& [x, y] : g.pairs) r.pairs.insert({f.dom + x, f.cod + y});
  return r;
}

size_t occurrence_count(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Letter: return 1;
    case FormulaKind::Top: return 0;
    case FormulaKind::Conj:
      return occurrence_count(f.left()) + occurrence_count(f.right());
    default:
      throw FragmentError("formula " + syntax::to_string(f) +
                          " is outside the ∧/⊤ fragment");
  }
}

Relation rel_of(const ArrowTerm& t) {
  const auto& fs = t.formulas();
  const auto& ts = t.subterms();
  switch (t.kind()) {
    case TermKind::Id: return rel_identity(occurrence_count(fs[0]));
    case TermKind::BAssocR:
    case TermKind::BAssocL:
      return rel_identity(occurrence_count(fs[0]) + occurrence_count(fs[1]) +
                          occurrence_count(fs[2]));
    case TermKind::CSym: {
      size_t a = occurrence_count(fs[0]), b = occurrence_count(fs[1]);
      Relation r{a + b, a + b, {}};
      for (size_t i = 0; i < a; ++i) r.pairs.insert({i, b + i});
      for (size_t j = 0; j < b; ++j) r.pairs.insert({a + j, j});
      return r;
    }
    case TermKind::DUnitR:
    case TermKind::DUnitL:
      return rel_identity(occurrence_count(fs[0]));
    case TermKind::WDiag: {
      size_t n = occurrence_count(fs[0]);
      Relation r{n, 2 * n, {}};
      for (size_t i = 0; i < n; ++i) {
        r.pairs.insert({i, i});
        r.pairs.insert({i, n + i});
      }
      return r;
    }
    case TermKind::Comp: return rel_compose(rel_of(ts[0]), rel_of(ts[1]));
    case TermKind::Tens: return rel_tensor(rel_of(ts[0]), rel_of(ts[1]));
    case TermKind::Hole:
      throw FragmentError("hole ?" + t.hole_name() + " has no relation");
    default:
      throw FragmentError("term is outside the diagonal monoidal fragment");
  }
}

RemonDecision decide_remon_eq(const ArrowTerm& f, const ArrowTerm& g) {
  syntax::Equation eq(f, g);  // validates that the terms are parallel
  Relation rf = rel_of(f), rg = rel_of(g);
  return {rf == rg, eq.type(), std::move(rf), std::move(rg)};
}

std::string to_string(const Relation& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& [x, y] : r.pairs) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return s + "}";
}

}  // namespace relcat::relco
