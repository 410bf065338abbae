#include "relcat/printer.hpp"

namespace relcat::syntax {

namespace {

struct Symbols {
  const char* conj;
  const char* impl;
  const char* prod;
  const char* coprod;
  const char* top;
  const char* add_unit;
  const char* turnstile;
};

const Symbols kUnicode{" ∧ ", " → ", " ⊓ ", " ⊔ ", "⊤", "⊤ₐ", " ⊢ "};
const Symbols kAscii{" /\\ ", " -> ", " x ", " + ", "T", "Ta", " |- "};

// Binding strength; a child printed at a level below its context gets parens.
// → is lowest and right-associative, then ⊔, ⊓, ∧; atoms bind tightest.
int level_of(FormulaKind k) {
  switch (k) {
    case FormulaKind::Impl: return 0;
    case FormulaKind::Coprod: return 1;
    case FormulaKind::Prod: return 2;
    case FormulaKind::Conj: return 3;
    default: return 4;
  }
}

void print_formula(const Formula& f, const Symbols& sym, int context, std::string& out) {
  int lvl = level_of(f.kind());
  bool parens = lvl < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::Letter:
      out += f.letter_name();
      break;
    case FormulaKind::Top:
      out += sym.top;
      break;
    case FormulaKind::AddUnit:
      out += sym.add_unit;
      break;
    case FormulaKind::Impl:
      print_formula(f.left(), sym, lvl + 1, out);
      out += sym.impl;
      print_formula(f.right(), sym, lvl, out);  // right-associative
      break;
    case FormulaKind::Coprod:
    case FormulaKind::Prod:
    case FormulaKind::Conj: {
      const char* op = f.kind() == FormulaKind::Conj   ? sym.conj
                       : f.kind() == FormulaKind::Prod ? sym.prod
                                                       : sym.coprod;
      print_formula(f.left(), sym, lvl + 1, out);
      out += op;
      print_formula(f.right(), sym, lvl + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

void print_args(const Symbols& sym, std::string& out,
                const std::vector<Formula>& fs) {
  out += '[';
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    print_formula(fs[i], sym, 0, out);
  }
  out += ']';
}

// Term levels: composition 0 (right-associative), tensor 1 (non-associative),
// atoms 2.
void print_term(const ArrowTerm& t, const Symbols& sym, int context, std::string& out) {
  const auto& fs = t.formulas();
  const auto& ts = t.subterms();
  auto prim = [&](const char* name) {
    out += name;
    print_args(sym, out, fs);
  };
  switch (t.kind()) {
    case TermKind::Id: prim("id"); return;
    case TermKind::BAssocR: prim("bR"); return;
    case TermKind::BAssocL: prim("bL"); return;
    case TermKind::CSym: prim("c"); return;
    case TermKind::DUnitR: prim("dR"); return;
    case TermKind::DUnitL: prim("dL"); return;
    case TermKind::WDiag: prim("w"); return;
    case TermKind::Eps: prim("eps"); return;
    case TermKind::Eta: prim("eta"); return;
    case TermKind::Proj1: prim("p1"); return;
    case TermKind::Proj2: prim("p2"); return;
    case TermKind::Inj1: prim("i1"); return;
    case TermKind::Inj2: prim("i2"); return;
    case TermKind::ToTerminal: prim("term"); return;
    case TermKind::FromInitial: prim("init"); return;
    case TermKind::Comp: {
      bool parens = context > 0;
      if (parens) out += '(';
      print_term(ts[0], sym, 1, out);
      out += " . ";
      print_term(ts[1], sym, 0, out);
      if (parens) out += ')';
      return;
    }
    case TermKind::Tens: {
      bool parens = context > 1;
      if (parens) out += '(';
      print_term(ts[0], sym, 2, out);
      out += " * ";
      print_term(ts[1], sym, 2, out);
      if (parens) out += ')';
      return;
    }
    case TermKind::HomFun:
      out += '(';
      print_formula(fs[0], sym, 1, out);  // parens around a top-level →
      out += sym.impl;
      print_term(ts[0], sym, 0, out);
      out += ')';
      return;
    case TermKind::Pair:
    case TermKind::Copair:
      out += t.kind() == TermKind::Pair ? "pair(" : "copair(";
      print_term(ts[0], sym, 0, out);
      out += ", ";
      print_term(ts[1], sym, 0, out);
      out += ')';
      return;
    case TermKind::Hole:
      out += '?';
      out += t.hole_name();
      out += '[';
      print_formula(t.hole_type().source, sym, 0, out);
      out += ", ";
      print_formula(t.hole_type().target, sym, 0, out);
      out += ']';
      return;
  }
}

const Symbols& pick(Style s) { return s == Style::Unicode ? kUnicode : kAscii; }

}  // namespace

std::string to_string(const Formula& f, Style style) {
  std::string out;
  print_formula(f, pick(style), 0, out);
  return out;
}

std::string to_string(const ArrowType& t, Style style) {
  std::string out;
  const Symbols& sym = pick(style);
  print_formula(t.source, sym, 0, out);
  out += sym.turnstile;
  print_formula(t.target, sym, 0, out);
  return out;
}

std::string to_string(const ArrowTerm& t, Style style) {
  std::string out;
  print_term(t, pick(style), 0, out);
  return out;
}

std::string to_string(const Equation& e, Style style) {
  return to_string(e.lhs(), style) + " = " + to_string(e.rhs(), style);
}

}  // namespace relcat::syntax
