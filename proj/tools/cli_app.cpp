#include "cli_app.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relcat/arith.hpp"
#include "relcat/arrow_term.hpp"
#include "relcat/config.hpp"
#include "relcat/formula.hpp"
#include "relcat/iso_search.hpp"
#include "relcat/model.hpp"
#include "relcat/normal_form.hpp"
#include "relcat/parser.hpp"
#include "relcat/pointed_set.hpp"
#include "relcat/printer.hpp"
#include "relcat/relation.hpp"
#include "relcat/scan.hpp"
#include "relcat/theories.hpp"

namespace relcat::cli {

namespace {

using nlohmann::json;
using syntax::ArrowTerm;
using syntax::ArrowType;
using syntax::Formula;
using syntax::Style;

uint64_t parse_number(const std::string& s) {
  size_t used = 0;
  unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

// "p=3,q=4"
template <typename Map, typename Value>
Map parse_assignments(const std::string& spec, uint64_t min_value) {
  Map out;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    size_t end = comma == std::string::npos ? spec.size() : comma;
    std::string item = spec.substr(pos, end - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("bad assignment: " + item);
    uint64_t v = parse_number(item.substr(eq + 1));
    if (v < min_value)
      throw std::invalid_argument("value out of range in: " + item);
    out[item.substr(0, eq)] = Value{v};
    pos = end + (comma == std::string::npos ? 0 : 1);
    if (comma == std::string::npos) break;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& spec) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    size_t end = comma == std::string::npos ? spec.size() : comma;
    if (end > pos) out.push_back(spec.substr(pos, end - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void add_letters(const Formula& f, std::vector<std::string>& acc) {
  for (const std::string& l : syntax::letters_of(f))
    if (std::find(acc.begin(), acc.end(), l) == acc.end()) acc.push_back(l);
}

void add_term_letters(const ArrowTerm& t, std::vector<std::string>& acc) {
  for (const Formula& f : t.formulas()) add_letters(f, acc);
  if (t.kind() == syntax::TermKind::Hole) {
    add_letters(t.hole_type().source, acc);
    add_letters(t.hole_type().target, acc);
  }
  for (const ArrowTerm& s : t.subterms()) add_term_letters(s, acc);
}

std::string format_valuation(const model::Valuation& v) {
  std::string s;
  for (const auto& [name, set] : v) {
    if (!s.empty()) s += ", ";
    s += name + "=" + std::to_string(set.size);
  }
  return s;
}

std::string format_sigma(const iso::ArithValuation& v) {
  std::string s;
  for (const auto& [name, value] : v) {
    if (!s.empty()) s += ",";
    s += name + "=" + std::to_string(value);
  }
  return s;
}

json valuation_json(const model::Valuation& v) {
  json j = json::object();
  for (const auto& [name, set] : v) j[name] = set.size;
  return j;
}

struct Options {
  bool ascii = false;
  bool json_out = false;
  Style style() const { return ascii ? Style::Ascii : Style::Unicode; }
};

int do_typecheck(const Options& o, const std::string& src, std::ostream& out) {
  ArrowTerm t = syntax::parse_arrow_term(src);
  ArrowType ty = syntax::infer_type(t);
  if (o.json_out)
    out << json{{"source", syntax::to_string(ty.source, o.style())},
                {"target", syntax::to_string(ty.target, o.style())}}
               .dump(2)
        << "\n";
  else
    out << syntax::to_string(ty, o.style()) << "\n";
  return 0;
}

int do_eval(const Options& o, const std::string& src, const std::string& vspec,
            bool describe, std::ostream& out) {
  ArrowTerm t = syntax::parse_arrow_term(src);
  ArrowType ty = syntax::infer_type(t);
  model::Valuation val =
      parse_assignments<model::Valuation, pointed::PointedSet>(vspec, 1);
  std::vector<std::string> letters;
  add_term_letters(t, letters);
  for (const std::string& l : letters)
    if (!val.count(l)) val[l] = pointed::PointedSet{2};

  pointed::PointedMap m = model::eval_term(t, val);
  if (o.json_out) {
    json j{{"type", syntax::to_string(ty, o.style())},
           {"valuation", valuation_json(val)},
           {"dom", m.dom},
           {"cod", m.cod},
           {"table", m.table}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "type: " << syntax::to_string(ty, o.style()) << "\n";
  out << "valuation: " << format_valuation(val) << "\n";
  out << "dom: " << m.dom << "  cod: " << m.cod << "\n";
  out << "table:";
  for (uint32_t v : m.table) out << " " << v;
  out << "\n";
  if (describe)
    for (uint64_t x = 0; x < m.dom; ++x)
      out << "  " << model::describe_element(ty.source, val, x) << " -> "
          << model::describe_element(ty.target, val, m.table[x]) << "\n";
  return 0;
}

int do_check(const Options& o, const std::string& src, const std::string& vspec,
             const std::string& sizes_spec, std::ostream& out) {
  syntax::Equation eq = syntax::parse_equation(src);
  std::vector<model::Valuation> family;
  if (!vspec.empty()) {
    family.push_back(parse_assignments<model::Valuation, pointed::PointedSet>(vspec, 1));
  } else {
    std::vector<std::string> letters;
    add_term_letters(eq.lhs(), letters);
    add_term_letters(eq.rhs(), letters);
    std::sort(letters.begin(), letters.end());
    std::vector<uint64_t> sizes;
    for (const std::string& s : split_list(sizes_spec)) {
      size_t dots = s.find("..");
      uint64_t lo = parse_number(dots == std::string::npos ? s : s.substr(0, dots));
      uint64_t hi = dots == std::string::npos ? lo : parse_number(s.substr(dots + 2));
      if (lo == 0 || hi < lo) throw std::invalid_argument("sizes must be positive");
      for (uint64_t v = lo; v <= hi; ++v) sizes.push_back(v);
    }
    family = model::size_family(letters, sizes);
  }
  model::CheckResult res = model::check_equation(eq, family);
  if (o.json_out) {
    json j{{"holds", res.holds}, {"checked", res.checked}, {"skipped", res.skipped}};
    if (!res.holds) {
      j["counterexample"] = valuation_json(res.counterexample);
      j["element"] = res.element;
      j["element_description"] =
          model::describe_element(eq.type().source, res.counterexample, res.element);
      j["lhs_value"] = res.lhs_value;
      j["rhs_value"] = res.rhs_value;
    }
    out << j.dump(2) << "\n";
    return res.holds ? 0 : 1;
  }
  if (res.holds) {
    out << "Holds (checked " << res.checked << " valuations";
    if (res.skipped) out << ", skipped " << res.skipped << " over the table cap";
    out << ")\n";
    return 0;
  }
  const auto& cex = res.counterexample;
  out << "Fails at " << format_valuation(cex) << "\n";
  out << "element " << res.element << " = "
      << model::describe_element(eq.type().source, cex, res.element) << "\n";
  out << "lhs gives " << res.lhs_value << " = "
      << model::describe_element(eq.type().target, cex, res.lhs_value) << "\n";
  out << "rhs gives " << res.rhs_value << " = "
      << model::describe_element(eq.type().target, cex, res.rhs_value) << "\n";
  return 1;
}

int do_releq(const Options& o, const std::string& lhs_src, const std::string& rhs_src,
             std::ostream& out) {
  ArrowTerm f = syntax::parse_arrow_term(lhs_src);
  ArrowTerm g = syntax::parse_arrow_term(rhs_src);
  relco::RemonDecision d = relco::decide_remon_eq(f, g);
  if (o.json_out) {
    out << json{{"equal", d.equal},
                {"type", syntax::to_string(d.type, o.style())},
                {"lhs_relation", relco::to_string(d.lhs)},
                {"rhs_relation", relco::to_string(d.rhs)}}
               .dump(2)
        << "\n";
    return d.equal ? 0 : 1;
  }
  out << (d.equal ? "Equal" : "Unequal") << "\n";
  out << "type: " << syntax::to_string(d.type, o.style()) << "\n";
  out << "lhs relation: " << relco::to_string(d.lhs) << "\n";
  out << "rhs relation: " << relco::to_string(d.rhs) << "\n";
  return d.equal ? 0 : 1;
}

int do_iso(const Options& o, const std::string& a_src, const std::string& b_src,
           uint64_t bound, bool witness, std::ostream& out) {
  Formula a = syntax::parse_formula(a_src);
  Formula b = syntax::parse_formula(b_src);
  iso::NormalForm na = iso::normalize(a), nb = iso::normalize(b);
  bool equal = na == nb;

  json j;
  std::string verdict;
  iso::Separation sep;
  if (equal) {
    verdict = "S-EQUAL";
  } else {
    sep = iso::find_separation(a, b, bound);
    verdict = sep.separated
                  ? "S-DIFFERENT arith-differ(" + format_sigma(sep.sigma) + ")"
                  : "S-DIFFERENT arith-agree(bound=" + std::to_string(bound) + ")";
  }

  std::optional<iso::IsoWitness> w;
  if (witness && equal) w = iso::bounded_iso_search(a, b);

  if (o.json_out) {
    j["equal"] = equal;
    j["verdict"] = verdict;
    j["normal_form_lhs"] = iso::to_string(na);
    j["normal_form_rhs"] = iso::to_string(nb);
    if (!equal && sep.separated) j["separation"] = format_sigma(sep.sigma);
    if (witness && equal) {
      if (w)
        j["witness"] = {{"forward", syntax::to_string(w->forward, o.style())},
                        {"backward", syntax::to_string(w->backward, o.style())}};
      else
        j["witness"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return equal ? 0 : 1;
  }

  out << verdict << "\n";
  out << "normal form lhs: " << iso::to_string(na) << "\n";
  out << "normal form rhs: " << iso::to_string(nb) << "\n";
  if (witness && equal) {
    if (w) {
      out << "forward:  " << syntax::to_string(w->forward, o.style()) << "\n";
      out << "backward: " << syntax::to_string(w->backward, o.style()) << "\n";
    } else {
      out << "no isomorphism witness found within bounds\n";
    }
  }
  return equal ? 0 : 1;
}

int do_arith(const Options& o, const std::string& src, const std::string& vspec,
             std::ostream& out) {
  Formula f = syntax::parse_formula(src);
  auto sigma = parse_assignments<iso::ArithValuation, uint64_t>(vspec, 0);
  try {
    iso::BigInt v = iso::arith_eval(f, sigma);
    if (o.json_out)
      out << json{{"exact", true}, {"value", v.str()}}.dump(2) << "\n";
    else
      out << "value: " << v << "\n";
    return 0;
  } catch (const iso::ArithOverflow&) {
    iso::Fingerprint fp = iso::arith_fingerprint(f, sigma);
    json residues = json::array();
    for (uint32_t r : fp.residues) residues.push_back(r);
    if (o.json_out) {
      out << json{{"exact", false}, {"residues", residues}}.dump(2) << "\n";
      return 0;
    }
    out << "value: beyond the exact budget\n";
    out << "fingerprint residues:";
    for (uint32_t r : fp.residues) out << " " << r;
    out << "\n";
    return 0;
  }
}

int do_scan(const Options& o, unsigned max_size, const std::string& letters_spec,
            uint64_t bound, unsigned workers, bool all, std::ostream& out) {
  scan::ScanOptions so;
  so.enumeration.max_size = max_size;
  so.enumeration.letters = split_list(letters_spec);
  so.enumeration.diversified_only = !all;
  so.max_value = bound;
  so.workers = workers;
  scan::ScanReport rep = scan::conjecture_scan(so);
  out << (o.json_out ? scan::to_json_string(rep) + "\n" : scan::to_text(rep));
  return rep.agree ? 0 : 1;
}

int do_axioms(const Options& o, const std::string& theory_name, std::ostream& out) {
  theories::Theory t = theories::parse_theory(theory_name);
  if (o.json_out) {
    out << theories::axioms_json(t) << "\n";
    return 0;
  }
  for (const theories::AxiomSchema& s : theories::axioms(t)) {
    out << s.name << ": " << syntax::to_string(s.lhs, o.style()) << " = "
        << syntax::to_string(s.rhs, o.style()) << "\n";
    for (const theories::TermMeta& tm : s.term_metas)
      out << "    where " << tm.name << " : "
          << syntax::to_string(ArrowType{tm.src, tm.tgt}, o.style()) << "\n";
  }
  return 0;
}

int do_witness(const Options& o, std::ostream& out) {
  model::NonNaturalWitness w = model::naturality_failure_witness();
  auto table_str = [](const pointed::PointedMap& m) {
    std::string s;
    for (uint32_t v : m.table) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
  };
  if (o.json_out) {
    out << json{{"projection", w.projection},
                {"a", w.a},
                {"b", w.b},
                {"f", w.f.table},
                {"g", w.g.table},
                {"element", w.element},
                {"via_projection", w.via_proj},
                {"via_smashed_maps", w.via_map}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "smash projection " << w.projection << " is not natural\n";
  out << "carriers: |A| = " << w.a << ", |B| = " << w.b << "\n";
  out << "f: " << table_str(w.f) << "\n";
  out << "g: " << table_str(w.g) << "\n";
  out << "square disagrees at element " << w.element << ": projection then map gives "
      << w.via_proj << ", map then projection gives " << w.via_map << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for relevant monoidal categories over pointed sets"};
  app.name("relcat");
  app.require_subcommand(1);

  Options opts;
  app.add_flag("--ascii", opts.ascii, "print with ASCII connectives");
  app.add_flag("--json", opts.json_out, "machine-readable output");

  std::string tc_term;
  auto* tc = app.add_subcommand("typecheck", "infer the type of an arrow term");
  tc->add_option("term", tc_term, "arrow term")->required();

  std::string ev_term, ev_val;
  bool ev_describe = false;
  auto* ev = app.add_subcommand("eval", "evaluate an arrow term to a table");
  ev->add_option("term", ev_term, "arrow term")->required();
  ev->add_option("--val", ev_val, "letter sizes, e.g. p=3,q=4 (default 2)");
  ev->add_flag("--describe", ev_describe, "print each mapping structurally");

  std::string ck_eq, ck_val, ck_sizes = "1,2,3";
  auto* ck = app.add_subcommand("check", "check an equation over a valuation family");
  ck->add_option("equation", ck_eq, "lhs = rhs")->required();
  ck->add_option("--val", ck_val, "single valuation, e.g. p=3,q=4");
  ck->add_option("--sizes", ck_sizes, "family sizes (default 1,2,3)");

  std::string rq_lhs, rq_rhs;
  auto* rq = app.add_subcommand("releq",
                                "decide equality in the diagonal monoidal fragment");
  rq->add_option("lhs", rq_lhs, "arrow term")->required();
  rq->add_option("rhs", rq_rhs, "arrow term")->required();

  std::string is_a, is_b;
  uint64_t is_bound = 4;
  bool is_witness = false;
  auto* is = app.add_subcommand("iso", "decide isomorphism of two formulas");
  is->add_option("lhs", is_a, "formula")->required();
  is->add_option("rhs", is_b, "formula")->required();
  is->add_option("--bound", is_bound, "arithmetic search bound (default 4)");
  is->add_flag("--witness", is_witness, "search for an explicit isomorphism pair");

  std::string ar_formula, ar_val;
  auto* ar = app.add_subcommand("arith", "numeral of a formula");
  ar->add_option("formula", ar_formula, "formula")->required();
  ar->add_option("--val,--assign", ar_val, "letter values, e.g. p=2,q=0 (default 1)");

  unsigned sc_max_size = static_cast<unsigned>(env_size_cap(4));
  std::string sc_letters = "p,q,r";
  uint64_t sc_bound = 4;
  unsigned sc_workers = std::max(1u, std::thread::hardware_concurrency());
  bool sc_all = false;
  auto* sc = app.add_subcommand(
      "scan", "compare the normal-form and fingerprint partitions");
  sc->add_option("--max-size", sc_max_size, "connective bound (default 4)");
  sc->add_option("--letters", sc_letters, "letters (default p,q,r)");
  sc->add_option("--bound", sc_bound, "valuation values 0..bound (default 4)");
  sc->add_option("--workers", sc_workers, "worker threads");
  sc->add_flag("--all", sc_all, "include non-diversified formulas");

  std::string ax_theory = "RMC";
  auto* ax = app.add_subcommand("axioms", "list the axiom schemata of a theory");
  ax->add_option("--theory", ax_theory, "SyMon, ReMon, SMC, RMC or Additive");

  auto* wn = app.add_subcommand("witness-nonnatural",
                                "exhibit the non-naturality of a smash projection");

  // --ascii/--json are also accepted after the subcommand name.
  for (CLI::App* sub : {tc, ev, ck, rq, is, ar, sc, ax, wn}) sub->fallthrough();

  try {
    std::vector<const char*> argv;
    argv.push_back("relcat");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tc->parsed()) return do_typecheck(opts, tc_term, out);
    if (ev->parsed()) return do_eval(opts, ev_term, ev_val, ev_describe, out);
    if (ck->parsed()) return do_check(opts, ck_eq, ck_val, ck_sizes, out);
    if (rq->parsed()) return do_releq(opts, rq_lhs, rq_rhs, out);
    if (is->parsed()) return do_iso(opts, is_a, is_b, is_bound, is_witness, out);
    if (ar->parsed()) return do_arith(opts, ar_formula, ar_val, out);
    if (sc->parsed())
      return do_scan(opts, sc_max_size, sc_letters, sc_bound, sc_workers, sc_all, out);
    if (ax->parsed()) return do_axioms(opts, ax_theory, out);
    if (wn->parsed()) return do_witness(opts, out);
  } catch (const syntax::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const syntax::TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return 2;
  } catch (const relco::FragmentError& e) {
    err << "fragment error: " << e.what() << "\n";
    return 2;
  } catch (const iso::FragmentError& e) {
    err << "fragment error: " << e.what() << "\n";
    return 2;
  } catch (const iso::ArithOverflow& e) {
    err << "arithmetic overflow: " << e.what() << "\n";
    return 2;
  } catch (const model::ModelError& e) {
    err << "model error: " << e.what() << "\n";
    return 2;
  } catch (const pointed::SizeError& e) {
    err << "size error: " << e.what() << "\n";
    return 2;
  } catch (const pointed::ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return 2;
  } catch (const theories::MetaError& e) {
    err << "metavariable error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace relcat::cli
