#include "relcat/theories.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include <nlohmann/json.hpp>

#include "relcat/printer.hpp"

namespace relcat::theories {

using syntax::ArrowTerm;
using syntax::ArrowType;
using syntax::Equation;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::TermKind;

std::string to_string(Theory t) {
  switch (t) {
    case Theory::SyMon: return "SyMon";
    case Theory::ReMon: return "ReMon";
    case Theory::SMC: return "SMC";
    case Theory::RMC: return "RMC";
    case Theory::Additive: return "Additive";
  }
  return "?";
}

Theory parse_theory(const std::string& name) {
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "symon") return Theory::SyMon;
  if (low == "remon") return Theory::ReMon;
  if (low == "smc") return Theory::SMC;
  if (low == "rmc") return Theory::RMC;
  if (low == "additive") return Theory::Additive;
  throw std::invalid_argument("unknown theory: " + name);
}

ArrowTerm mid_interchange(const Formula& a, const Formula& b, const Formula& c,
                          const Formula& d) {
  ArrowTerm inner = ArrowTerm::comp(
      ArrowTerm::assoc_l(c, b, d),
      ArrowTerm::comp(ArrowTerm::tens(ArrowTerm::sym(b, c), ArrowTerm::id(d)),
                      ArrowTerm::assoc_r(b, c, d)));
  return ArrowTerm::comp(
      ArrowTerm::assoc_r(a, c, Formula::conj(b, d)),
      ArrowTerm::comp(ArrowTerm::tens(ArrowTerm::id(a), std::move(inner)),
                      ArrowTerm::assoc_l(a, b, Formula::conj(c, d))));
}

namespace {

std::vector<AxiomSchema> make_catalog() {
  using AT = ArrowTerm;
  Formula A = Formula::letter("A"), B = Formula::letter("B"), C = Formula::letter("C");
  Formula D = Formula::letter("D"), E = Formula::letter("E"), F = Formula::letter("F");
  Formula T = Formula::top(), Ta = Formula::add_unit();
  auto h = [](const char* n, Formula s, Formula t) {
    return AT::hole(n, ArrowType{std::move(s), std::move(t)});
  };
  auto c2 = [](AT f, AT g) { return AT::comp(std::move(f), std::move(g)); };
  auto c3 = [&](AT f, AT g, AT k) {
    return c2(std::move(f), c2(std::move(g), std::move(k)));
  };

  std::vector<AxiomSchema> v;
  auto add = [&](const char* name, Theory th, std::vector<std::string> fm,
                 std::vector<TermMeta> tm, AT lhs, AT rhs) {
    v.push_back({name, th, std::move(fm), std::move(tm), std::move(lhs), std::move(rhs)});
  };

  add("(cat 1 a)", Theory::SyMon, {"A", "B"}, {{"f", A, B}},
      c2(h("f", A, B), AT::id(A)), h("f", A, B));
  add("(cat 1 b)", Theory::SyMon, {"A", "B"}, {{"f", A, B}},
      c2(AT::id(B), h("f", A, B)), h("f", A, B));
  add("(cat 2)", Theory::SyMon, {"A", "B", "C", "D"},
      {{"f", A, B}, {"g", B, C}, {"h", C, D}},
      c2(h("h", C, D), c2(h("g", B, C), h("f", A, B))),
      c2(c2(h("h", C, D), h("g", B, C)), h("f", A, B)));
  add("(∧ 1)", Theory::SyMon, {"A", "B"}, {},
      AT::tens(AT::id(A), AT::id(B)), AT::id(Formula::conj(A, B)));
  add("(∧ 2)", Theory::SyMon, {"A", "B", "C", "D", "E", "F"},
      {{"f1", A, B}, {"g1", B, C}, {"f2", D, E}, {"g2", E, F}},
      AT::tens(c2(h("g1", B, C), h("f1", A, B)), c2(h("g2", E, F), h("f2", D, E))),
      c2(AT::tens(h("g1", B, C), h("g2", E, F)),
         AT::tens(h("f1", A, B), h("f2", D, E))));
  add("(b∧→ nat)", Theory::SyMon, {"A", "B", "C", "D", "E", "F"},
      {{"f", A, D}, {"g", B, E}, {"h", C, F}},
      c2(AT::tens(AT::tens(h("f", A, D), h("g", B, E)), h("h", C, F)),
         AT::assoc_r(A, B, C)),
      c2(AT::assoc_r(D, E, F),
         AT::tens(h("f", A, D), AT::tens(h("g", B, E), h("h", C, F)))));
  add("(c∧ nat)", Theory::SyMon, {"A", "B", "C", "D"}, {{"f", A, C}, {"g", B, D}},
      c2(AT::tens(h("g", B, D), h("f", A, C)), AT::sym(A, B)),
      c2(AT::sym(C, D), AT::tens(h("f", A, C), h("g", B, D))));
  add("(d∧→ nat)", Theory::SyMon, {"A", "B"}, {{"f", A, B}},
      c2(h("f", A, B), AT::unit_r(A)),
      c2(AT::unit_r(B), AT::tens(h("f", A, B), AT::id(T))));
  add("(b∧b∧ a)", Theory::SyMon, {"A", "B", "C"}, {},
      c2(AT::assoc_l(A, B, C), AT::assoc_r(A, B, C)),
      AT::id(Formula::conj(A, Formula::conj(B, C))));
  add("(b∧b∧ b)", Theory::SyMon, {"A", "B", "C"}, {},
      c2(AT::assoc_r(A, B, C), AT::assoc_l(A, B, C)),
      AT::id(Formula::conj(Formula::conj(A, B), C)));
  add("(b∧ 5)", Theory::SyMon, {"A", "B", "C", "D"}, {},
      c2(AT::assoc_r(Formula::conj(A, B), C, D), AT::assoc_r(A, B, Formula::conj(C, D))),
      c3(AT::tens(AT::assoc_r(A, B, C), AT::id(D)), AT::assoc_r(A, Formula::conj(B, C), D),
         AT::tens(AT::id(A), AT::assoc_r(B, C, D))));
  add("(c∧c∧)", Theory::SyMon, {"A", "B"}, {},
      c2(AT::sym(B, A), AT::sym(A, B)), AT::id(Formula::conj(A, B)));
  add("(b∧c∧)", Theory::SyMon, {"A", "B", "C"}, {},
      c3(AT::assoc_r(C, A, B), AT::sym(Formula::conj(A, B), C), AT::assoc_r(A, B, C)),
      c3(AT::tens(AT::sym(A, C), AT::id(B)), AT::assoc_r(A, C, B),
         AT::tens(AT::id(A), AT::sym(B, C))));
  add("(d∧d∧ a)", Theory::SyMon, {"A"}, {},
      c2(AT::unit_l(A), AT::unit_r(A)), AT::id(Formula::conj(A, T)));
  add("(d∧d∧ b)", Theory::SyMon, {"A"}, {},
      c2(AT::unit_r(A), AT::unit_l(A)), AT::id(A));
  add("(b∧d∧)", Theory::SyMon, {"A", "B"}, {},
      AT::assoc_r(A, B, T),
      c2(AT::unit_l(Formula::conj(A, B)), AT::tens(AT::id(A), AT::unit_r(B))));

  add("(w∧ nat)", Theory::ReMon, {"A", "B"}, {{"f", A, B}},
      c2(AT::tens(h("f", A, B), h("f", A, B)), AT::diag(A)),
      c2(AT::diag(B), h("f", A, B)));
  add("(b∧w∧)", Theory::ReMon, {"A"}, {},
      c2(AT::tens(AT::diag(A), AT::id(A)), AT::diag(A)),
      c3(AT::assoc_r(A, A, A), AT::tens(AT::id(A), AT::diag(A)), AT::diag(A)));
  add("(c∧w∧)", Theory::ReMon, {"A"}, {},
      c2(AT::sym(A, A), AT::diag(A)), AT::diag(A));
  add("(b∧c∧w∧)", Theory::ReMon, {"A", "B"}, {},
      AT::diag(Formula::conj(A, B)),
      c2(mid_interchange(A, A, B, B), AT::tens(AT::diag(A), AT::diag(B))));
  add("(w∧d∧)", Theory::ReMon, {}, {}, AT::diag(T), AT::unit_l(T));

  add("(A→ 1)", Theory::SMC, {"A", "B"}, {},
      AT::hom_fun(A, AT::id(B)), AT::id(Formula::impl(A, B)));
  add("(A→ 2)", Theory::SMC, {"A", "B", "C", "D"}, {{"f", B, C}, {"g", C, D}},
      c2(AT::hom_fun(A, h("g", C, D)), AT::hom_fun(A, h("f", B, C))),
      AT::hom_fun(A, c2(h("g", C, D), h("f", B, C))));
  add("(ε nat)", Theory::SMC, {"A", "B", "C"}, {{"f", B, C}},
      c2(h("f", B, C), AT::eps(A, B)),
      c2(AT::eps(A, C), AT::tens(AT::id(A), AT::hom_fun(A, h("f", B, C)))));
  add("(η nat)", Theory::SMC, {"A", "B", "C"}, {{"f", B, C}},
      c2(AT::hom_fun(A, AT::tens(AT::id(A), h("f", B, C))), AT::eta(A, B)),
      c2(AT::eta(A, C), h("f", B, C)));
  add("(εη ∧)", Theory::SMC, {"A", "B"}, {},
      c2(AT::eps(A, Formula::conj(A, B)), AT::tens(AT::id(A), AT::eta(A, B))),
      AT::id(Formula::conj(A, B)));
  add("(εη →)", Theory::SMC, {"A", "B"}, {},
      c2(AT::hom_fun(A, AT::eps(A, B)), AT::eta(A, Formula::impl(A, B))),
      AT::id(Formula::impl(A, B)));

  add("(⊓ β1)", Theory::Additive, {"A", "B", "C"}, {{"f", C, A}, {"g", C, B}},
      c2(AT::proj1(A, B), AT::pair(h("f", C, A), h("g", C, B))), h("f", C, A));
  add("(⊓ β2)", Theory::Additive, {"A", "B", "C"}, {{"f", C, A}, {"g", C, B}},
      c2(AT::proj2(A, B), AT::pair(h("f", C, A), h("g", C, B))), h("g", C, B));
  add("(⊓ η)", Theory::Additive, {"A", "B", "C"}, {{"h", C, Formula::prod(A, B)}},
      AT::pair(c2(AT::proj1(A, B), h("h", C, Formula::prod(A, B))),
               c2(AT::proj2(A, B), h("h", C, Formula::prod(A, B)))),
      h("h", C, Formula::prod(A, B)));
  add("(⊔ β1)", Theory::Additive, {"A", "B", "C"}, {{"f", A, C}, {"g", B, C}},
      c2(AT::copair(h("f", A, C), h("g", B, C)), AT::inj1(A, B)), h("f", A, C));
  add("(⊔ β2)", Theory::Additive, {"A", "B", "C"}, {{"f", A, C}, {"g", B, C}},
      c2(AT::copair(h("f", A, C), h("g", B, C)), AT::inj2(A, B)), h("g", B, C));
  add("(⊔ η)", Theory::Additive, {"A", "B", "C"}, {{"h", Formula::coprod(A, B), C}},
      AT::copair(c2(h("h", Formula::coprod(A, B), C), AT::inj1(A, B)),
                 c2(h("h", Formula::coprod(A, B), C), AT::inj2(A, B))),
      h("h", Formula::coprod(A, B), C));
  add("(⊤ₐ uniq)", Theory::Additive, {"A"}, {{"f", A, Ta}},
      h("f", A, Ta), AT::to_terminal(A));
  add("(⊤ₐ couniq)", Theory::Additive, {"A"}, {{"f", Ta, A}},
      h("f", Ta, A), AT::from_initial(A));
  return v;
}

const std::vector<AxiomSchema>& catalog() {
  static const std::vector<AxiomSchema> cat = make_catalog();
  return cat;
}

bool member(Theory t, const AxiomSchema& s) {
  switch (t) {
    case Theory::SyMon: return s.theory == Theory::SyMon;
    case Theory::ReMon: return s.theory == Theory::SyMon || s.theory == Theory::ReMon;
    case Theory::SMC: return s.theory == Theory::SyMon || s.theory == Theory::SMC;
    case Theory::RMC: return s.theory != Theory::Additive;
    case Theory::Additive: return s.theory == Theory::Additive;
  }
  return false;
}

}  // namespace

const std::vector<AxiomSchema>& axioms(Theory t) {
  static const std::vector<AxiomSchema> per[5] = {
      [] { std::vector<AxiomSchema> v; for (const auto& s : catalog()) if (member(Theory::SyMon, s)) v.push_back(s); return v; }(),
      [] { std::vector<AxiomSchema> v; for (const auto& s : catalog()) if (member(Theory::ReMon, s)) v.push_back(s); return v; }(),
      [] { std::vector<AxiomSchema> v; for (const auto& s : catalog()) if (member(Theory::SMC, s)) v.push_back(s); return v; }(),
      [] { std::vector<AxiomSchema> v; for (const auto& s : catalog()) if (member(Theory::RMC, s)) v.push_back(s); return v; }(),
      [] { std::vector<AxiomSchema> v; for (const auto& s : catalog()) if (member(Theory::Additive, s)) v.push_back(s); return v; }(),
  };
  return per[static_cast<int>(t)];
}

const AxiomSchema& schema_by_name(const std::string& name) {
  for (const AxiomSchema& s : catalog())
    if (s.name == name) return s;
  throw std::out_of_range("unknown axiom schema: " + name);
}

Equation instantiate(const AxiomSchema& schema, const Substitution& sub) {
  for (const std::string& m : schema.formula_metas)
    if (!sub.formulas.count(m))
      throw MetaError("unbound formula metavariable " + m + " in " + schema.name);
  for (const TermMeta& tm : schema.term_metas)
    if (!sub.terms.count(tm.name))
      throw MetaError("unbound term metavariable " + tm.name + " in " + schema.name);
  ArrowTerm lhs = syntax::fill_holes(syntax::substitute(schema.lhs, sub.formulas), sub.terms);
  ArrowTerm rhs = syntax::fill_holes(syntax::substitute(schema.rhs, sub.formulas), sub.terms);
  return Equation(std::move(lhs), std::move(rhs));
}

gen::Fragment fragment_of(Theory t) {
  switch (t) {
    case Theory::SyMon: return {false, false, false};
    case Theory::ReMon: return {true, false, false};
    case Theory::SMC: return {false, true, false};
    case Theory::RMC: return {true, true, false};
    case Theory::Additive: return {true, true, true};
  }
  return {};
}

namespace {

const std::vector<std::string> kLetters{"p", "q", "r"};

std::vector<Formula> default_universe() {
  return {Formula::letter("p"), Formula::letter("q"), Formula::letter("r"),
          Formula::top()};
}

bool is_free_meta(const AxiomSchema& schema, const Substitution& sub, const Formula& f) {
  return f.kind() == FormulaKind::Letter &&
         std::find(schema.formula_metas.begin(), schema.formula_metas.end(),
                   f.letter_name()) != schema.formula_metas.end() &&
         !sub.formulas.count(f.letter_name());
}

}  // namespace

Equation random_instance(const AxiomSchema& schema, gen::Rng& rng, unsigned size_bound,
                         const gen::Fragment& frag) {
  std::vector<Formula> universe = default_universe();
  Substitution sub;

  // The product/coproduct η schemata have a composite hole type; their holes
  // are filled with a pairing of independently drawn components.
  if (schema.name == "(⊓ η)") {
    ArrowTerm f = gen::random_term(rng, size_bound, 2, kLetters, frag);
    ArrowType tf = syntax::infer_type(f);
    ArrowTerm g = gen::random_term_from(rng, tf.source, 2, universe, frag);
    ArrowType tg = syntax::infer_type(g);
    sub.formulas = {{"A", tf.target}, {"B", tg.target}, {"C", tf.source}};
    sub.terms.emplace("h", ArrowTerm::pair(std::move(f), std::move(g)));
    return instantiate(schema, sub);
  }
  if (schema.name == "(⊔ η)") {
    ArrowTerm f = gen::random_term(rng, size_bound, 2, kLetters, frag);
    ArrowType tf = syntax::infer_type(f);
    ArrowTerm g = gen::random_term_into(rng, tf.target, 2, universe, frag);
    ArrowType tg = syntax::infer_type(g);
    sub.formulas = {{"A", tf.source}, {"B", tg.source}, {"C", tf.target}};
    sub.terms.emplace("h", ArrowTerm::copair(std::move(f), std::move(g)));
    return instantiate(schema, sub);
  }

  for (const TermMeta& tm : schema.term_metas) {
    Formula s = syntax::substitute(tm.src, sub.formulas);
    Formula t = syntax::substitute(tm.tgt, sub.formulas);
    bool s_free = is_free_meta(schema, sub, s);
    bool t_free = is_free_meta(schema, sub, t);
    ArrowTerm drawn;
    if (s_free && t_free) {
      drawn = gen::random_term(rng, size_bound, 2, kLetters, frag);
      ArrowType ty = syntax::infer_type(drawn);
      sub.formulas.emplace(s.letter_name(), ty.source);
      sub.formulas.emplace(t.letter_name(), ty.target);
    } else if (t_free) {
      drawn = gen::random_term_from(rng, s, 2, universe, frag);
      sub.formulas.emplace(t.letter_name(), syntax::infer_type(drawn).target);
    } else if (s_free) {
      drawn = gen::random_term_into(rng, t, 2, universe, frag);
      sub.formulas.emplace(s.letter_name(), syntax::infer_type(drawn).source);
    } else {
      drawn = ArrowTerm::id(s);
    }
    sub.terms.emplace(tm.name, std::move(drawn));
  }
  for (const std::string& m : schema.formula_metas)
    if (!sub.formulas.count(m))
      sub.formulas.emplace(m, gen::random_formula(rng, size_bound, kLetters, frag));
  return instantiate(schema, sub);
}

std::vector<Equation> random_axiom_instances(Theory t, unsigned size_bound, unsigned count,
                                             uint64_t seed) {
  gen::Rng rng(seed);
  const auto& ax = axioms(t);
  gen::Fragment frag = fragment_of(t);
  std::vector<Equation> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i)
    out.push_back(random_instance(ax[i % ax.size()], rng, size_bound, frag));
  return out;
}

namespace {

void scan_fragment(const Formula& f, gen::Fragment& frag) {
  switch (f.kind()) {
    case FormulaKind::Impl: frag.closed = true; break;
    case FormulaKind::Prod:
    case FormulaKind::Coprod:
    case FormulaKind::AddUnit: frag.additive = true; break;
    default: break;
  }
  if (syntax::is_binary(f.kind())) {
    scan_fragment(f.left(), frag);
    scan_fragment(f.right(), frag);
  }
}

void scan_fragment(const ArrowTerm& t, gen::Fragment& frag) {
  switch (t.kind()) {
    case TermKind::Eps:
    case TermKind::Eta:
    case TermKind::HomFun: frag.closed = true; break;
    case TermKind::Proj1:
    case TermKind::Proj2:
    case TermKind::Pair:
    case TermKind::Inj1:
    case TermKind::Inj2:
    case TermKind::Copair:
    case TermKind::ToTerminal:
    case TermKind::FromInitial: frag.additive = true; break;
    default: break;
  }
  for (const Formula& f : t.formulas()) scan_fragment(f, frag);
  for (const ArrowTerm& s : t.subterms()) scan_fragment(s, frag);
}

}  // namespace

std::vector<Equation> closure_sample(const Equation& eq, unsigned count, uint64_t seed) {
  gen::Rng rng(seed);
  gen::Fragment frag{true, false, false};
  scan_fragment(eq.lhs(), frag);
  scan_fragment(eq.rhs(), frag);
  std::vector<Formula> universe = default_universe();

  std::vector<Equation> out;
  out.reserve(count);
  while (out.size() < count) {
    ArrowTerm l = eq.lhs(), r = eq.rhs();
    unsigned ops = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned j = 0; j < ops; ++j) {
      ArrowType ty = syntax::infer_type(l);
      switch (rng() % 6) {
        case 0:
          std::swap(l, r);
          break;
        case 1: {
          ArrowTerm s = gen::random_term_into(rng, ty.source, 2, universe, frag);
          l = ArrowTerm::comp(std::move(l), s);
          r = ArrowTerm::comp(std::move(r), std::move(s));
          break;
        }
        case 2: {
          ArrowTerm s = gen::random_term_from(rng, ty.target, 2, universe, frag);
          l = ArrowTerm::comp(s, std::move(l));
          r = ArrowTerm::comp(std::move(s), std::move(r));
          break;
        }
        case 3: {
          ArrowTerm g = gen::random_term(rng, 2, 2, kLetters, frag);
          l = ArrowTerm::tens(std::move(l), g);
          r = ArrowTerm::tens(std::move(r), std::move(g));
          break;
        }
        case 4: {
          ArrowTerm g = gen::random_term(rng, 2, 2, kLetters, frag);
          l = ArrowTerm::tens(g, std::move(l));
          r = ArrowTerm::tens(std::move(g), std::move(r));
          break;
        }
        default: {
          if (!frag.closed) {
            std::swap(l, r);
            break;
          }
          Formula u = gen::random_formula(rng, 2, kLetters, frag);
          l = ArrowTerm::hom_fun(u, std::move(l));
          r = ArrowTerm::hom_fun(u, std::move(r));
          break;
        }
      }
    }
    out.emplace_back(std::move(l), std::move(r));
  }
  return out;
}

std::string axioms_json(Theory t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AxiomSchema& s : axioms(t)) {
    nlohmann::json metas = nlohmann::json::array();
    for (const TermMeta& tm : s.term_metas)
      metas.push_back({{"name", tm.name},
                       {"source", syntax::to_string(tm.src)},
                       {"target", syntax::to_string(tm.tgt)}});
    arr.push_back({{"name", s.name},
                   {"theory", to_string(s.theory)},
                   {"formula_metavariables", s.formula_metas},
                   {"term_metavariables", metas},
                   {"lhs", syntax::to_string(s.lhs)},
                   {"rhs", syntax::to_string(s.rhs)}});
  }
  return arr.dump(2);
}

}  // namespace relcat::theories
