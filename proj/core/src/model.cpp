#include "relcat/model.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "relcat/config.hpp"
#include "relcat/printer.hpp"

namespace relcat::model {

using pointed::PointedMap;
using syntax::ArrowTerm;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::TermKind;

namespace {

BigInt pow_guarded(const BigInt& base, const BigInt& exp) {
  if (base == 0 || base == 1 || exp == 0) return exp == 0 ? BigInt(1) : base;
  if (exp > limits().arith_max_exp)
    throw ModelError("carrier size exponent exceeds the configured budget");
  unsigned e = exp.convert_to<unsigned>();
  uint64_t bits = boost::multiprecision::msb(base) + 1;
  if (bits * e > limits().arith_max_bits)
    throw ModelError("carrier size exceeds the configured bit budget");
  return boost::multiprecision::pow(base, e);
}

}  // namespace

BigInt interp_size(const Formula& f, const Valuation& val) {
  switch (f.kind()) {
    case FormulaKind::Letter: {
      auto it = val.find(f.letter_name());
      if (it == val.end())
        throw ModelError("letter " + f.letter_name() + " has no size in the valuation");
      return it->second.size;
    }
    case FormulaKind::Top: return 2;
    case FormulaKind::AddUnit: return 1;
    case FormulaKind::Conj:
      return (interp_size(f.left(), val) - 1) * (interp_size(f.right(), val) - 1) + 1;
    case FormulaKind::Impl:
      return pow_guarded(interp_size(f.right(), val), interp_size(f.left(), val) - 1);
    case FormulaKind::Prod:
      return interp_size(f.left(), val) * interp_size(f.right(), val);
    case FormulaKind::Coprod:
      return interp_size(f.left(), val) + interp_size(f.right(), val) - 1;
  }
  throw ModelError("unreachable formula kind");
}

uint64_t interp_size_small(const Formula& f, const Valuation& val) {
  BigInt n = interp_size(f, val);
  if (n > limits().table_cap)
    throw pointed::SizeError("carrier of " + syntax::to_string(f) +
                             " exceeds the table cap");
  return n.convert_to<uint64_t>();
}

namespace {

// Composite carriers (smash products of capped factors, products, ...) can
// exceed the cap even when every formula argument is under it; every table
// built here goes through this guard.
pointed::PointedMap sized_map(uint64_t dom, uint64_t cod) {
  for (uint64_t n : {dom, cod})
    if (n > limits().table_cap)
      throw pointed::SizeError("carrier size " + std::to_string(n) +
                               " exceeds the table cap " +
                               std::to_string(limits().table_cap));
  pointed::PointedMap m{dom, cod, {}};
  m.table.resize(dom);
  return m;
}

}  // namespace

PointedMap eval_term(const ArrowTerm& t, const Valuation& val) {
  using namespace pointed;
  const auto& fs = t.formulas();
  const auto& ts = t.subterms();
  auto sz = [&](const Formula& f) { return interp_size_small(f, val); };

  switch (t.kind()) {
    case TermKind::Id: return identity_map(sz(fs[0]));
    case TermKind::BAssocR: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]), c = sz(fs[2]);
      uint64_t bc = smash_size(b, c), ab = smash_size(a, b);
      PointedMap m = sized_map(smash_size(a, bc), smash_size(ab, c));
      for (uint64_t z = 0; z < m.dom; ++z) {
        auto [x, yz] = smash_split(z, a, bc);
        auto [y, w] = smash_split(yz, b, c);
        m.table[z] = static_cast<uint32_t>(
            smash_pair(smash_pair(x, y, a, b), w, ab, c));
      }
      return m;
    }
    case TermKind::BAssocL: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]), c = sz(fs[2]);
      uint64_t bc = smash_size(b, c), ab = smash_size(a, b);
      PointedMap m = sized_map(smash_size(ab, c), smash_size(a, bc));
      for (uint64_t z = 0; z < m.dom; ++z) {
        auto [xy, w] = smash_split(z, ab, c);
        auto [x, y] = smash_split(xy, a, b);
        m.table[z] = static_cast<uint32_t>(
            smash_pair(x, smash_pair(y, w, b, c), a, bc));
      }
      return m;
    }
    case TermKind::CSym: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      PointedMap m = sized_map(smash_size(a, b), smash_size(b, a));
      for (uint64_t z = 0; z < m.dom; ++z) {
        auto [x, y] = smash_split(z, a, b);
        m.table[z] = static_cast<uint32_t>(smash_pair(y, x, b, a));
      }
      return m;
    }
    case TermKind::DUnitR: {
      uint64_t a = sz(fs[0]);
      return smash_proj1(a, 2);
    }
    case TermKind::DUnitL: {
      uint64_t a = sz(fs[0]);
      PointedMap m = sized_map(a, smash_size(a, 2));
      for (uint64_t x = 0; x < a; ++x)
        m.table[x] = static_cast<uint32_t>(smash_pair(x, 1, a, 2));
      return m;
    }
    case TermKind::WDiag: {
      uint64_t a = sz(fs[0]);
      PointedMap m = sized_map(a, smash_size(a, a));
      for (uint64_t x = 0; x < a; ++x)
        m.table[x] = static_cast<uint32_t>(smash_pair(x, x, a, a));
      return m;
    }
    case TermKind::Eps: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      uint64_t h = hom_size(a, b);
      PointedMap m = sized_map(smash_size(a, h), b);
      for (uint64_t z = 0; z < m.dom; ++z) {
        auto [x, code] = smash_split(z, a, h);
        m.table[z] = static_cast<uint32_t>(hom_apply(code, x, a, b));
      }
      return m;
    }
    case TermKind::Eta: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      uint64_t ab = smash_size(a, b);
      PointedMap m = sized_map(b, hom_size(a, ab));
      std::vector<uint32_t> digits(a - 1);
      for (uint64_t y = 0; y < b; ++y) {
        for (uint64_t x = 1; x < a; ++x)
          digits[x - 1] = static_cast<uint32_t>(smash_pair(x, y, a, b));
        m.table[y] = static_cast<uint32_t>(hom_code(digits, ab));
      }
      return m;
    }
    case TermKind::Comp:
      return compose(eval_term(ts[0], val), eval_term(ts[1], val));
    case TermKind::Tens:
      return smash_map(eval_term(ts[0], val), eval_term(ts[1], val));
    case TermKind::HomFun:
      return hom_map(sz(fs[0]), eval_term(ts[0], val));
    case TermKind::Proj1: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      PointedMap m = sized_map(prod_size(a, b), a);
      for (uint64_t z = 0; z < m.dom; ++z)
        m.table[z] = static_cast<uint32_t>(prod_split(z, a, b).first);
      return m;
    }
    case TermKind::Proj2: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      PointedMap m = sized_map(prod_size(a, b), b);
      for (uint64_t z = 0; z < m.dom; ++z)
        m.table[z] = static_cast<uint32_t>(prod_split(z, a, b).second);
      return m;
    }
    case TermKind::Pair: {
      PointedMap f = eval_term(ts[0], val), g = eval_term(ts[1], val);
      PointedMap m = sized_map(f.dom, prod_size(f.cod, g.cod));
      for (uint64_t z = 0; z < m.dom; ++z)
        m.table[z] = static_cast<uint32_t>(
            prod_pair(f.table[z], g.table[z], f.cod, g.cod));
      return m;
    }
    case TermKind::Inj1: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      PointedMap m = sized_map(a, coprod_size(a, b));
      for (uint64_t x = 0; x < a; ++x)
        m.table[x] = static_cast<uint32_t>(coprod_in1(x, a, b));
      return m;
    }
    case TermKind::Inj2: {
      uint64_t a = sz(fs[0]), b = sz(fs[1]);
      PointedMap m = sized_map(b, coprod_size(a, b));
      for (uint64_t y = 0; y < b; ++y)
        m.table[y] = static_cast<uint32_t>(coprod_in2(y, a, b));
      return m;
    }
    case TermKind::Copair: {
      PointedMap f = eval_term(ts[0], val), g = eval_term(ts[1], val);
      PointedMap m = sized_map(coprod_size(f.dom, g.dom), f.cod);
      for (uint64_t z = 0; z < m.dom; ++z) {
        auto [side, x] = pointed::coprod_split(z, f.dom, g.dom);
        m.table[z] = side == 0 ? f.table[x] : g.table[x];
      }
      return m;
    }
    case TermKind::ToTerminal: return constant_map(sz(fs[0]), 1);
    case TermKind::FromInitial: return PointedMap{1, sz(fs[0]), {0}};
    case TermKind::Hole:
      throw ModelError("cannot evaluate hole ?" + t.hole_name());
  }
  throw ModelError("unreachable term kind");
}

std::string describe_element(const Formula& f, const Valuation& val, uint64_t index) {
  using namespace pointed;
  if (index == 0) return "*";
  switch (f.kind()) {
    case FormulaKind::Letter: return f.letter_name() + "#" + std::to_string(index);
    case FormulaKind::Top: return "T#" + std::to_string(index);
    case FormulaKind::AddUnit: return "Ta#" + std::to_string(index);
    case FormulaKind::Conj: {
      uint64_t a = interp_size_small(f.left(), val), b = interp_size_small(f.right(), val);
      auto [x, y] = smash_split(index, a, b);
      return "(" + describe_element(f.left(), val, x) + ", " +
             describe_element(f.right(), val, y) + ")";
    }
    case FormulaKind::Impl: {
      uint64_t a = interp_size_small(f.left(), val), b = interp_size_small(f.right(), val);
      std::string s = "[";
      for (uint64_t x = 1; x < a; ++x) {
        if (x > 1) s += ", ";
        s += describe_element(f.right(), val, hom_apply(index, x, a, b));
      }
      return s + "]";
    }
    case FormulaKind::Prod: {
      uint64_t a = interp_size_small(f.left(), val), b = interp_size_small(f.right(), val);
      auto [x, y] = prod_split(index, a, b);
      return "(" + describe_element(f.left(), val, x) + ", " +
             describe_element(f.right(), val, y) + ")";
    }
    case FormulaKind::Coprod: {
      uint64_t a = interp_size_small(f.left(), val), b = interp_size_small(f.right(), val);
      auto [side, x] = coprod_split(index, a, b);
      return side == 0 ? "in1(" + describe_element(f.left(), val, x) + ")"
                       : "in2(" + describe_element(f.right(), val, x) + ")";
    }
  }
  return "?";
}

std::vector<Valuation> size_family(const std::vector<std::string>& letters,
                                   const std::vector<uint64_t>& sizes) {
  std::vector<Valuation> out;
  if (sizes.empty()) return out;
  size_t total = 1;
  for (size_t i = 0; i < letters.size(); ++i) total *= sizes.size();
  out.reserve(total);
  std::vector<size_t> idx(letters.size(), 0);
  for (size_t n = 0; n < total; ++n) {
    Valuation v;
    size_t rem = n;
    for (size_t i = letters.size(); i-- > 0;) {
      idx[i] = rem % sizes.size();
      rem /= sizes.size();
    }
    for (size_t i = 0; i < letters.size(); ++i)
      v[letters[i]] = pointed::PointedSet{sizes[idx[i]]};
    out.push_back(std::move(v));
  }
  if (out.empty()) out.push_back({});
  return out;
}

std::vector<Valuation> default_family(const std::vector<std::string>& letters) {
  return size_family(letters, {1, 2, 3});
}

CheckResult check_equation(const syntax::Equation& eq,
                           const std::vector<Valuation>& family) {
  CheckResult res;
  for (const Valuation& v : family) {
    PointedMap l, r;
    try {
      l = eval_term(eq.lhs(), v);
      r = eval_term(eq.rhs(), v);
    } catch (const pointed::SizeError&) {
      ++res.skipped;
      continue;
    }
    ++res.checked;
    if (l.table == r.table) continue;
    res.holds = false;
    res.counterexample = v;
    for (uint64_t z = 0; z < l.dom; ++z)
      if (l.table[z] != r.table[z]) {
        res.element = z;
        res.lhs_value = l.table[z];
        res.rhs_value = r.table[z];
        break;
      }
    return res;
  }
  return res;
}

NonNaturalWitness naturality_failure_witness() {
  using namespace pointed;
  auto nth_map = [](uint64_t dom, uint64_t cod, uint64_t code) {
    PointedMap m{dom, cod, {}};
    m.table.resize(dom);
    m.table[0] = 0;
    for (uint64_t x = dom; x-- > 1;) {
      m.table[x] = static_cast<uint32_t>(code % cod);
      code /= cod;
    }
    return m;
  };
  for (uint64_t a = 2; a <= 3; ++a)
    for (uint64_t b = 2; b <= 3; ++b) {
      uint64_t maps_a = hom_size(a, a), maps_b = hom_size(b, b);
      for (uint64_t cf = 0; cf < maps_a; ++cf)
        for (uint64_t cg = 0; cg < maps_b; ++cg) {
          PointedMap f = nth_map(a, a, cf), g = nth_map(b, b, cg);
          PointedMap fg = smash_map(f, g);
          for (int proj = 1; proj <= 2; ++proj) {
            PointedMap p_src = proj == 1 ? smash_proj1(a, b) : smash_proj2(a, b);
            PointedMap p_tgt = p_src;  // f, g are endomaps, same carriers
            PointedMap via_proj = compose(proj == 1 ? f : g, p_src);
            PointedMap via_map = compose(p_tgt, fg);
            for (uint64_t z = 0; z < via_proj.dom; ++z)
              if (via_proj.table[z] != via_map.table[z])
                return {a, b, proj, f, g, z, via_proj.table[z], via_map.table[z]};
          }
        }
    }
  throw ModelError("no naturality failure found on small carriers");
}

}  // namespace relcat::model
