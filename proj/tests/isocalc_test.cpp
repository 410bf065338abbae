#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "relcat/arith.hpp"
#include "relcat/enumerate.hpp"
#include "relcat/generators.hpp"
#include "relcat/iso_search.hpp"
#include "relcat/model.hpp"
#include "relcat/normal_form.hpp"
#include "relcat/parser.hpp"
#include "relcat/printer.hpp"

using namespace relcat;
using syntax::Formula;

namespace {

Formula F(const char* s) { return syntax::parse_formula(s); }

// Test-side rewriting with the calculus rules, used as an oracle: a chain of
// rewrites must never change the normal form.
struct Rewriter {
  std::mt19937_64 rng;

  using Step = std::function<Formula()>;

  void collect(const Formula& f, std::vector<Step>& steps,
               const std::function<Formula(Formula)>& rebuild) {
    using syntax::FormulaKind;
    auto mk = [&](Formula g) {
      return [rebuild, g]() { return rebuild(g); };
    };
    if (f.kind() == FormulaKind::Conj) {
      Formula a = f.left(), b = f.right();
      steps.push_back(mk(Formula::conj(b, a)));
      if (a.kind() == FormulaKind::Conj)
        steps.push_back(
            mk(Formula::conj(a.left(), Formula::conj(a.right(), b))));
      if (b.kind() == FormulaKind::Conj)
        steps.push_back(
            mk(Formula::conj(Formula::conj(a, b.left()), b.right())));
      if (a.kind() == FormulaKind::Top) steps.push_back(mk(b));
      if (b.kind() == FormulaKind::Top) steps.push_back(mk(a));
    }
    if (f.kind() == FormulaKind::Impl) {
      Formula a = f.left(), b = f.right();
      if (a.kind() == FormulaKind::Top) steps.push_back(mk(b));
      if (a.kind() == FormulaKind::Conj)
        steps.push_back(mk(Formula::impl(
            a.left(), Formula::impl(a.right(), b))));
      if (b.kind() == FormulaKind::Impl)
        steps.push_back(mk(Formula::impl(Formula::conj(a, b.left()), b.right())));
    }
    // Unit introduction keeps the walk from getting stuck on atoms.
    steps.push_back(mk(Formula::conj(Formula::top(), f)));
    steps.push_back(mk(Formula::impl(Formula::top(), f)));
    if (syntax::is_binary(f.kind())) {
      syntax::FormulaKind k = f.kind();
      Formula l = f.left(), r = f.right();
      collect(l, steps, [rebuild, k, r](Formula x) {
        return rebuild(Formula::binary(k, std::move(x), r));
      });
      collect(r, steps, [rebuild, k, l](Formula x) {
        return rebuild(Formula::binary(k, l, std::move(x)));
      });
    }
  }

  Formula step(const Formula& f) {
    std::vector<Step> steps;
    collect(f, steps, [](Formula x) { return x; });
    std::uniform_int_distribution<size_t> pick(0, steps.size() - 1);
    return steps[pick(rng)]();
  }
};

}  // namespace

TEST_SUITE("isocalc") {

TEST_CASE("normal form identities") {
  CHECK(iso::s_equal(F("p ∧ (q ∧ r)"), F("(r ∧ p) ∧ q")));
  CHECK(iso::s_equal(F("p ∧ ⊤"), F("p")));
  CHECK(iso::s_equal(F("⊤ → p"), F("p")));
  CHECK(iso::s_equal(F("p → (q → r)"), F("(q ∧ p) → r")));
  CHECK(iso::s_equal(F("⊤"), F("⊤ ∧ ⊤")));
  CHECK(iso::s_equal(F("(⊤ → p) ∧ (q ∧ ⊤)"), F("q ∧ p")));
}

TEST_CASE("normal form separations") {
  CHECK_FALSE(iso::s_equal(F("p"), F("p ∧ p")));
  CHECK_FALSE(iso::s_equal(F("p → q"), F("q → p")));
  CHECK_FALSE(iso::s_equal(F("p ∧ (p → q)"), F("q")));
  // A → ⊤ is a two-element object when |A| ≥ 2, so it must not collapse to ⊤.
  CHECK_FALSE(iso::s_equal(F("p → ⊤"), F("⊤")));
  CHECK_FALSE(iso::s_equal(F("p → ⊤"), F("p")));
}

TEST_CASE("normal forms re-read as formulas") {
  iso::NormalForm nf = iso::normalize(F("p → (q → r)"));
  CHECK(iso::to_formula(nf) == F("(p ∧ q) → r"));
  CHECK(iso::to_string(nf) == "p ∧ q → r");
  CHECK(iso::to_formula(iso::normalize(F("⊤ ∧ ⊤"))) == F("⊤"));
  // Normalizing the printed normal form is a fixed point.
  for (const char* s : {"(p → (q → r)) ∧ (⊤ → p)", "p ∧ ((q ∧ ⊤) ∧ p)",
                        "((p ∧ q) → ⊤) ∧ r"}) {
    Formula once = iso::to_formula(iso::normalize(F(s)));
    CHECK(iso::to_formula(iso::normalize(once)) == once);
  }
}

TEST_CASE("fragment guard") {
  CHECK_THROWS_AS(iso::normalize(F("p ⊓ q")), iso::FragmentError);
  CHECK_THROWS_AS(iso::normalize(F("⊤ₐ")), iso::FragmentError);
}

TEST_CASE("random rewrite chains preserve the normal form") {
  Rewriter rw{std::mt19937_64(2024)};
  gen::Rng rng(17);
  gen::Fragment frag{true, true, false};
  for (int trial = 0; trial < 100; ++trial) {
    Formula f = gen::random_formula(rng, 4, {"p", "q", "r"}, frag);
    Formula g = f;
    for (int k = 0; k < 8; ++k) g = rw.step(g);
    INFO(syntax::to_string(f), "  ~~>  ", syntax::to_string(g));
    CHECK(iso::s_equal(f, g));
  }
}

TEST_CASE("arithmetic interpretation") {
  CHECK(iso::arith_eval(F("p → q"), {{"p", 2}, {"q", 3}}) == 15);
  CHECK(iso::arith_eval(F("⊤"), {}) == 1);
  CHECK(iso::arith_eval(F("p ∧ q"), {{"p", 2}, {"q", 3}}) == 6);
  CHECK(iso::arith_eval(F("p → ⊤"), {{"p", 2}}) == 3);
  CHECK(iso::arith_eval(F("(p → q) → r"), {{"p", 1}, {"q", 1}, {"r", 2}}) == 2);
  // Unassigned letters default to 1.
  CHECK(iso::arith_eval(F("p ∧ q"), {{"p", 5}}) == 5);
  CHECK_THROWS_AS(iso::arith_eval(F("p → (q → (r → s))"),
                                  {{"p", 1u << 20}, {"q", 1u << 20},
                                   {"r", 1u << 20}, {"s", 1u << 20}}),
                  iso::ArithOverflow);
}

TEST_CASE("cardinality bridge") {
  // |A| under letter sizes n equals the numeral at values n-1, plus one.
  gen::Rng rng(23);
  gen::Fragment frag{true, true, false};
  std::uniform_int_distribution<uint64_t> size_dist(1, 4);
  int counted = 0;
  for (int attempt = 0; attempt < 2000 && counted < 200; ++attempt) {
    Formula f = gen::random_formula(rng, 6, {"p", "q", "r"}, frag);
    model::Valuation val;
    iso::ArithValuation sigma;
    for (const auto& l : syntax::letters_of(f)) {
      uint64_t n = size_dist(rng);
      val[l] = {n};
      sigma[l] = n - 1;
    }
    model::BigInt sz;
    try {
      sz = model::interp_size(f, val);
    } catch (const model::ModelError&) {
      continue;  // hom tower past the exactness budget, redraw
    }
    CHECK(sz == iso::arith_eval(f, sigma) + 1);
    ++counted;
  }
  CHECK(counted == 200);
}

TEST_CASE("equal normal forms give equal numerals") {
  gen::Rng rng(29);
  gen::Fragment frag{true, true, false};
  std::uniform_int_distribution<uint64_t> vdist(0, 6);
  Rewriter rw{std::mt19937_64(31)};
  int counted = 0;
  for (int attempt = 0; attempt < 500 && counted < 50; ++attempt) {
    Formula a = gen::random_formula(rng, 4, {"p", "q", "r"}, frag);
    Formula b = a;
    for (int k = 0; k < 6; ++k) b = rw.step(b);
    iso::ArithValuation sigma;
    for (const auto& l : syntax::letters_of(a)) sigma[l] = vdist(rng);
    // The fingerprints always exist; compare them, and the exact values when
    // they fit the budget.
    CHECK(iso::arith_fingerprint(a, sigma) == iso::arith_fingerprint(b, sigma));
    try {
      CHECK(iso::arith_eval(a, sigma) == iso::arith_eval(b, sigma));
    } catch (const iso::ArithOverflow&) {
      continue;
    }
    ++counted;
  }
  CHECK(counted >= 40);
}

TEST_CASE("fingerprints agree with exact evaluation when small") {
  gen::Rng rng(37);
  gen::Fragment frag{true, true, false};
  std::uniform_int_distribution<uint64_t> vdist(0, 3);
  int counted = 0;
  for (int trial = 0; counted < 100 && trial < 2000; ++trial) {
    Formula a = gen::random_formula(rng, 4, {"p", "q"}, frag);
    Formula b = gen::random_formula(rng, 4, {"p", "q"}, frag);
    iso::ArithValuation sigma{{"p", vdist(rng)}, {"q", vdist(rng)}};
    iso::BigInt va, vb;
    try {
      va = iso::arith_eval(a, sigma);
      vb = iso::arith_eval(b, sigma);
    } catch (const iso::ArithOverflow&) {
      continue;  // nested towers can exceed the exact bit budget
    }
    iso::Fingerprint fa = iso::arith_fingerprint(a, sigma);
    iso::Fingerprint fb = iso::arith_fingerprint(b, sigma);
    if (va < iso::kExactCeiling) {
      CHECK(fa.exact());
      CHECK(iso::BigInt(fa.small) == va);
    }
    CHECK((fa == fb) == (va == vb));
    ++counted;
  }
  CHECK(counted == 100);
}

TEST_CASE("fingerprints survive saturation") {
  // Equivalent formulas whose numeral is astronomically large must still
  // collide, and inequivalent ones must still separate.
  Formula a = F("p → (q → r)");
  Formula b = F("(q ∧ p) → r");
  iso::ArithValuation sigma{{"p", uint64_t(1) << 20},
                            {"q", uint64_t(1) << 20},
                            {"r", uint64_t(1) << 30}};
  iso::Fingerprint fa = iso::arith_fingerprint(a, sigma);
  iso::Fingerprint fb = iso::arith_fingerprint(b, sigma);
  CHECK_FALSE(fa.exact());
  CHECK(fa == fb);

  iso::Fingerprint fc = iso::arith_fingerprint(F("(q ∧ p) → (r ∧ r)"), sigma);
  CHECK_FALSE(fc.exact());
  CHECK_FALSE(fa == fc);

  // A tower that saturates even the residue on one prime path.
  Formula tower = F("(p → q) → (r → s)");
  iso::ArithValuation big{{"p", 1u << 16}, {"q", 1u << 16}, {"r", 1u << 16},
                          {"s", 1u << 16}};
  iso::Fingerprint ft = iso::arith_fingerprint(tower, big);
  iso::Fingerprint ft2 = iso::arith_fingerprint(
      F("(r ∧ (p → q)) → s"), big);
  CHECK(ft == ft2);
}

TEST_CASE("separation search") {
  auto s1 = iso::find_separation(F("p"), F("p ∧ p"), 4);
  CHECK(s1.separated);
  CHECK(s1.sigma == iso::ArithValuation{{"p", 2}});
  auto s2 = iso::find_separation(F("⊤"), F("p → ⊤"), 4);
  CHECK(s2.separated);
  CHECK(s2.sigma == iso::ArithValuation{{"p", 0}});
  auto s3 = iso::find_separation(F("p ∧ (q ∧ r)"), F("(r ∧ p) ∧ q"), 4);
  CHECK_FALSE(s3.separated);
  CHECK(iso::arith_equal(F("p → (q → r)"), F("(q ∧ p) → r"), 4));
  CHECK_FALSE(iso::arith_equal(F("p"), F("p ∧ p"), 4));
}

TEST_CASE("s_equal matches arith_equal on small diversified formulas") {
  iso::EnumOptions opts;
  opts.max_size = 2;
  opts.letters = {"p", "q"};
  auto formulas = iso::enumerate_formulas(opts);
  for (size_t i = 0; i < formulas.size(); ++i)
    for (size_t j = i + 1; j < formulas.size(); ++j) {
      bool nf = iso::s_equal(formulas[i], formulas[j]);
      bool ar = iso::arith_equal(formulas[i], formulas[j], 4);
      INFO(syntax::to_string(formulas[i]), "  vs  ",
           syntax::to_string(formulas[j]));
      CHECK(nf == ar);
    }
}

TEST_CASE("s_equal is an equivalence and a congruence") {
  iso::EnumOptions opts;
  opts.max_size = 3;
  opts.letters = {"p", "q"};
  opts.diversified_only = false;
  auto formulas = iso::enumerate_formulas(opts);
  REQUIRE(formulas.size() > 50);

  // Reflexivity, and transitivity through the class representative.
  std::map<std::string, Formula> rep;
  for (const Formula& f : formulas) {
    CHECK(iso::s_equal(f, f));
    auto [it, fresh] = rep.emplace(iso::to_string(iso::normalize(f)), f);
    if (!fresh) CHECK(iso::s_equal(it->second, f));
  }

  std::vector<Formula> contexts{F("p"), F("q → p"), F("⊤")};
  size_t equal_pairs = 0;
  for (size_t i = 0; i < formulas.size(); ++i)
    for (size_t j = i + 1; j < formulas.size(); ++j) {
      const Formula &a = formulas[i], &b = formulas[j];
      bool ab = iso::s_equal(a, b);
      CHECK(ab == iso::s_equal(b, a));
      if (!ab) continue;
      ++equal_pairs;
      INFO(syntax::to_string(a), "  ~  ", syntax::to_string(b));
      for (const Formula& c : contexts) {
        CHECK(iso::s_equal(Formula::conj(a, c), Formula::conj(b, c)));
        CHECK(iso::s_equal(Formula::conj(c, a), Formula::conj(c, b)));
        CHECK(iso::s_equal(Formula::impl(a, c), Formula::impl(b, c)));
        CHECK(iso::s_equal(Formula::impl(c, a), Formula::impl(c, b)));
      }
    }
  CHECK(equal_pairs > 20);
}

TEST_CASE("bounded iso search") {
  auto same = iso::bounded_iso_search(F("p ∧ q"), F("p ∧ q"));
  REQUIRE(same.has_value());
  CHECK(same->forward == syntax::parse_arrow_term("id[p ∧ q]"));

  auto comm = iso::bounded_iso_search(F("p ∧ q"), F("q ∧ p"));
  REQUIRE(comm.has_value());

  auto curry = iso::bounded_iso_search(F("p → (q → r)"), F("(q ∧ p) → r"));
  REQUIRE(curry.has_value());
  auto ty = syntax::infer_type(curry->forward);
  CHECK(ty.source == F("p → (q → r)"));
  CHECK(ty.target == F("(q ∧ p) → r"));
  // Verify both round trips in the model, independently of the search.
  auto family = model::default_family({"p", "q", "r"});
  syntax::Equation round_a(
      syntax::ArrowTerm::comp(curry->backward, curry->forward),
      syntax::ArrowTerm::id(F("p → (q → r)")));
  syntax::Equation round_b(
      syntax::ArrowTerm::comp(curry->forward, curry->backward),
      syntax::ArrowTerm::id(F("(q ∧ p) → r")));
  CHECK(model::check_equation(round_a, family).holds);
  CHECK(model::check_equation(round_b, family).holds);

  CHECK_FALSE(iso::bounded_iso_search(F("p"), F("p ∧ p")).has_value());
  // Rejected by the cardinality prune alone: sizes differ under p↦2, q↦3.
  CHECK_FALSE(iso::bounded_iso_search(F("p"), F("q")).has_value());
}

}  // TEST_SUITE
