#include <benchmark/benchmark.h>

#include "relcat/arith.hpp"
#include "relcat/iso_search.hpp"
#include "relcat/model.hpp"
#include "relcat/normal_form.hpp"
#include "relcat/parser.hpp"
#include "relcat/pointed_set.hpp"
#include "relcat/relation.hpp"
#include "relcat/theories.hpp"

using namespace relcat;

static void BM_parse_term(benchmark::State& state) {
  const std::string src =
      "bL[p, q, r] . c[q /\\ r, p] . (c[p, q] . w[p /\\ q]) * id[r] . bR[p, q, r]";
  for (auto _ : state)
    benchmark::DoNotOptimize(syntax::parse_arrow_term(src));
}
BENCHMARK(BM_parse_term);

static void BM_eval_axiom_instance(benchmark::State& state) {
  const auto& schema = theories::schema_by_name("(b∧ 5)");
  theories::Substitution sub;
  sub.formulas["A"] = syntax::parse_formula("p ∧ q");
  sub.formulas["B"] = syntax::parse_formula("q");
  sub.formulas["C"] = syntax::parse_formula("r ∧ r");
  sub.formulas["D"] = syntax::parse_formula("p");
  syntax::Equation eq = theories::instantiate(schema, sub);
  model::Valuation val{{"p", {4}}, {"q", {5}}, {"r", {3}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(model::eval_term(eq.lhs(), val));
    benchmark::DoNotOptimize(model::eval_term(eq.rhs(), val));
  }
}
BENCHMARK(BM_eval_axiom_instance);

static void BM_check_equation_family(benchmark::State& state) {
  syntax::Equation eq = syntax::parse_equation(
      "c[p /\\ q, p /\\ q] . w[p /\\ q] = w[p /\\ q]");
  auto family = model::size_family({"p", "q"}, {1, 2, 3});
  for (auto _ : state)
    benchmark::DoNotOptimize(model::check_equation(eq, family));
}
BENCHMARK(BM_check_equation_family);

static void BM_rel_of_composite(benchmark::State& state) {
  syntax::ArrowTerm t = syntax::parse_arrow_term(
      "(w[(p /\\ q) /\\ (p /\\ q)] . c[p /\\ q, p /\\ q] . w[p /\\ q] . "
      "c[q, p] . c[p, q]) * (w[r /\\ r] . w[r])");
  for (auto _ : state) benchmark::DoNotOptimize(relco::rel_of(t));
}
BENCHMARK(BM_rel_of_composite);

static void BM_normalize(benchmark::State& state) {
  syntax::Formula f = syntax::parse_formula(
      "((p → (q → r)) ∧ ⊤) → ((q ∧ (⊤ ∧ p)) → ((r → ⊤) → (p ∧ (q ∧ r))))");
  for (auto _ : state) benchmark::DoNotOptimize(iso::normalize(f));
}
BENCHMARK(BM_normalize);

static void BM_fingerprint_saturating(benchmark::State& state) {
  syntax::Formula f = syntax::parse_formula("(p → (q → r)) → ((q ∧ p) → r)");
  iso::ArithValuation sigma{{"p", uint64_t(1) << 18},
                            {"q", uint64_t(1) << 17},
                            {"r", uint64_t(1) << 19}};
  for (auto _ : state)
    benchmark::DoNotOptimize(iso::arith_fingerprint(f, sigma));
}
BENCHMARK(BM_fingerprint_saturating);

static void BM_iso_search_currying(benchmark::State& state) {
  syntax::Formula a = syntax::parse_formula("p → (q → r)");
  syntax::Formula b = syntax::parse_formula("(q ∧ p) → r");
  for (auto _ : state)
    benchmark::DoNotOptimize(iso::bounded_iso_search(a, b));
}
BENCHMARK(BM_iso_search_currying);

static void BM_smash_roundtrip(benchmark::State& state) {
  const uint64_t a = 1 << 10, b = 1 << 10;
  for (auto _ : state) {
    uint64_t acc = 0;
    for (uint64_t z = 1; z < (a - 1) * (b - 1) + 1; z += 997) {
      auto [x, y] = pointed::smash_split(z, a, b);
      acc += pointed::smash_pair(x, y, a, b);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_smash_roundtrip);

BENCHMARK_MAIN();
