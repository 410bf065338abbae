#include "relcat/iso_search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "relcat/generators.hpp"
#include "relcat/model.hpp"
#include "relcat/normal_form.hpp"
#include "relcat/pointed_set.hpp"

namespace relcat::iso {

using syntax::ArrowTerm;
using syntax::Equation;
using syntax::Formula;

namespace {

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  if (syntax::is_binary(f.kind())) {
    collect_subformulas(f.left(), out);
    collect_subformulas(f.right(), out);
  }
}

using Reached = std::map<Formula, std::vector<ArrowTerm>>;

Reached explore(const Formula& root, size_t max_size, bool closed,
                const std::vector<Formula>& universe, const IsoSearchOptions& opts) {
  gen::Fragment frag{false, closed, false};
  Reached reached;
  reached[root].push_back(ArrowTerm::id(root));
  std::deque<std::pair<Formula, unsigned>> frontier{{root, 0}};
  while (!frontier.empty()) {
    auto [cur, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= opts.max_steps) continue;
    ArrowTerm base = reached[cur][0];
    for (ArrowTerm& s : gen::steps_from(cur, universe, frag)) {
      Formula next = syntax::infer_type(s).target;
      if (next.size() > max_size) continue;
      auto& arrivals = reached[next];
      bool fresh = arrivals.empty();
      if (arrivals.size() < opts.terms_per_state)
        arrivals.push_back(base.kind() == syntax::TermKind::Id
                               ? std::move(s)
                               : ArrowTerm::comp(std::move(s), base));
      if (fresh) {
        if (reached.size() >= opts.max_states) return reached;
        frontier.emplace_back(next, depth + 1);
      }
    }
  }
  return reached;
}

}  // namespace

std::optional<IsoWitness> bounded_iso_search(const Formula& a, const Formula& b,
                                             const IsoSearchOptions& opts) {
  // Cardinality prune: under distinct letter sizes most non-isomorphic pairs
  // already have different carriers, so reject those before any term search.
  {
    model::Valuation probe;
    uint64_t size = 2;
    for (const Formula* f : {&a, &b})
      for (const std::string& l : syntax::letters_of(*f))
        if (probe.emplace(l, pointed::PointedSet{size}).second) ++size;
    try {
      if (!pointed::iso_check({model::interp_size_small(a, probe)},
                              {model::interp_size_small(b, probe)}))
        return std::nullopt;
    } catch (const model::ModelError&) {
    } catch (const pointed::SizeError&) {
    }
  }
  if (!s_equal(a, b)) return std::nullopt;
  if (a == b) return IsoWitness{ArrowTerm::id(a), ArrowTerm::id(a)};

  std::vector<Formula> universe{Formula::top()};
  collect_subformulas(a, universe);
  collect_subformulas(b, universe);
  bool closed = !syntax::in_monoidal_fragment(a) || !syntax::in_monoidal_fragment(b);
  size_t max_size = std::max(a.size(), b.size()) + 4;

  Reached from_a = explore(a, max_size, closed, universe, opts);
  Reached from_b = explore(b, max_size, closed, universe, opts);
  auto fa = from_a.find(b);
  auto fb = from_b.find(a);
  if (fa == from_a.end() || fb == from_b.end()) return std::nullopt;

  std::vector<std::string> letters = syntax::letters_of(a);
  for (const std::string& l : syntax::letters_of(b))
    if (std::find(letters.begin(), letters.end(), l) == letters.end())
      letters.push_back(l);
  auto family = model::default_family(letters);

  for (const ArrowTerm& f : fa->second)
    for (const ArrowTerm& g : fb->second) {
      Equation round_a(ArrowTerm::comp(g, f), ArrowTerm::id(a));
      Equation round_b(ArrowTerm::comp(f, g), ArrowTerm::id(b));
      auto ra = model::check_equation(round_a, family);
      if (!ra.holds || ra.checked == 0) continue;
      auto rb = model::check_equation(round_b, family);
      if (rb.holds && rb.checked > 0) return IsoWitness{f, g};
    }
  return std::nullopt;
}

}  // namespace relcat::iso
