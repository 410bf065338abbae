#include "relcat/arith.hpp"

#include <algorithm>
#include <vector>

#include "relcat/config.hpp"
#include "relcat/printer.hpp"

namespace relcat::iso {

using syntax::Formula;
using syntax::FormulaKind;

namespace {

uint64_t value_of(const ArithValuation& val, const std::string& name) {
  auto it = val.find(name);
  return it == val.end() ? 1 : it->second;
}

BigInt pow_guarded(const BigInt& base, const BigInt& exp) {
  if (exp == 0 || base == 1) return 1;
  if (base == 0) return 0;
  if (exp > limits().arith_max_exp)
    throw ArithOverflow("numeral exponent exceeds the configured budget");
  unsigned e = exp.convert_to<unsigned>();
  uint64_t bits = boost::multiprecision::msb(base) + 1;
  if (bits * e > limits().arith_max_bits)
    throw ArithOverflow("numeral exceeds the configured bit budget");
  return boost::multiprecision::pow(base, e);
}

}  // namespace

BigInt arith_eval(const Formula& f, const ArithValuation& val) {
  switch (f.kind()) {
    case FormulaKind::Letter: return value_of(val, f.letter_name());
    case FormulaKind::Top: return 1;
    case FormulaKind::Conj:
      return arith_eval(f.left(), val) * arith_eval(f.right(), val);
    case FormulaKind::Impl:
      return pow_guarded(arith_eval(f.right(), val) + 1, arith_eval(f.left(), val)) - 1;
    default:
      throw FragmentError("formula " + syntax::to_string(f) +
                          " is outside the ∧/⊤/→ fragment");
  }
}

namespace {

// Eight distinct primes just below 2^31; products of two residues fit in
// uint64 without widening.
constexpr std::array<uint64_t, kResidues> kPrimes = {
    2147483647, 2147483629, 2147483587, 2147483579,
    2147483563, 2147483549, 2147483543, 2147483497};

uint64_t totient(uint64_t n) {
  uint64_t result = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Iterated-totient chain of a modulus, ending at 1. Exponents reduce one
// level down the chain.
std::vector<uint64_t> phi_chain(uint64_t m) {
  std::vector<uint64_t> chain{m};
  while (chain.back() > 1) chain.push_back(totient(chain.back()));
  return chain;
}

const std::array<std::vector<uint64_t>, kResidues>& chains() {
  static const std::array<std::vector<uint64_t>, kResidues> c = [] {
    std::array<std::vector<uint64_t>, kResidues> out;
    for (size_t i = 0; i < kResidues; ++i) out[i] = phi_chain(kPrimes[i]);
    return out;
  }();
  return c;
}

uint64_t modulus_at(const std::vector<uint64_t>& chain, size_t depth) {
  return depth < chain.size() ? chain[depth] : 1;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

// Small tracker: min(value, 64). 64 certifies value >= 64, enough to apply
// the totient reduction x^y ≡ x^(φ(m) + y mod φ(m)) (mod m), valid for
// y >= log2(m) with our moduli below 2^31.
constexpr uint64_t kSmallCap = 64;

uint64_t small_mul(uint64_t a, uint64_t b) { return std::min(a * b, kSmallCap); }

uint64_t small_impl(uint64_t m, uint64_t n) {
  uint64_t base = n + 1;
  if (base == 1 || m == 0) return 0;
  if (m >= kSmallCap) return kSmallCap;  // base >= 2, so 2^64 - 1 past the cap
  uint64_t p = 1;
  for (uint64_t i = 0; i < m; ++i) {
    p *= base;
    if (p > kSmallCap) return kSmallCap;
  }
  return std::min(p - 1, kSmallCap);
}

// Value modulo chain[depth] together with the small tracker.
struct ModValue {
  uint64_t residue;
  uint64_t small;
};

ModValue eval_mod(const Formula& f, const ArithValuation& val,
                  const std::vector<uint64_t>& chain, size_t depth) {
  uint64_t m = modulus_at(chain, depth);
  switch (f.kind()) {
    case FormulaKind::Letter: {
      uint64_t v = value_of(val, f.letter_name());
      return {m == 1 ? 0 : v % m, std::min(v, kSmallCap)};
    }
    case FormulaKind::Top:
      return {m == 1 ? uint64_t(0) : uint64_t(1), 1};
    case FormulaKind::Conj: {
      ModValue l = eval_mod(f.left(), val, chain, depth);
      ModValue r = eval_mod(f.right(), val, chain, depth);
      return {m == 1 ? 0 : l.residue * r.residue % m, small_mul(l.small, r.small)};
    }
    case FormulaKind::Impl: {
      ModValue body = eval_mod(f.right(), val, chain, depth);
      ModValue expo = eval_mod(f.left(), val, chain, depth + 1);
      uint64_t small = small_impl(expo.small, body.small);
      if (m == 1) return {0, small};
      uint64_t base = (body.residue + 1) % m;
      uint64_t phi = modulus_at(chain, depth + 1);
      uint64_t exponent =
          expo.small < kSmallCap ? expo.small : phi + expo.residue % phi;
      uint64_t r = pow_mod(base, exponent, m);
      return {(r + m - 1) % m, small};
    }
    default:
      throw FragmentError("formula " + syntax::to_string(f) +
                          " is outside the ∧/⊤/→ fragment");
  }
}

// Saturating wide evaluation; kSatCap is absorbing, so a value below
// kExactCeiling is exact.
uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSatCap / b) return kSatCap;
  return std::min(a * b, kSatCap);
}

uint64_t eval_sat(const Formula& f, const ArithValuation& val) {
  switch (f.kind()) {
    case FormulaKind::Letter: return std::min(value_of(val, f.letter_name()), kSatCap);
    case FormulaKind::Top: return 1;
    case FormulaKind::Conj: return sat_mul(eval_sat(f.left(), val), eval_sat(f.right(), val));
    case FormulaKind::Impl: {
      uint64_t m = eval_sat(f.left(), val);
      uint64_t n = eval_sat(f.right(), val);
      if (n == 0 || m == 0) return 0;
      if (n >= kSatCap) return kSatCap;
      uint64_t base = n + 1, p = 1;
      for (uint64_t i = 0; i < m; ++i) {
        p = sat_mul(p, base);
        if (p == kSatCap) return kSatCap;
      }
      return p - 1;
    }
    default:
      throw FragmentError("formula " + syntax::to_string(f) +
                          " is outside the ∧/⊤/→ fragment");
  }
}

}  // namespace

Fingerprint arith_fingerprint(const Formula& f, const ArithValuation& val) {
  Fingerprint fp;
  uint64_t s = eval_sat(f, val);
  fp.small = s < kExactCeiling ? s : kSatCap;
  for (size_t i = 0; i < kResidues; ++i)
    fp.residues[i] = static_cast<uint32_t>(eval_mod(f, val, chains()[i], 0).residue);
  return fp;
}

Separation find_separation(const Formula& a, const Formula& b, uint64_t max_value) {
  std::vector<std::string> letters = syntax::letters_of(a);
  for (const std::string& l : syntax::letters_of(b))
    if (std::find(letters.begin(), letters.end(), l) == letters.end())
      letters.push_back(l);
  std::sort(letters.begin(), letters.end());

  size_t total = 1;
  for (size_t i = 0; i < letters.size(); ++i) total *= max_value + 1;
  for (size_t n = 0; n < total; ++n) {
    ArithValuation sigma;
    size_t rem = n;
    for (size_t i = letters.size(); i-- > 0;) {
      sigma[letters[i]] = rem % (max_value + 1);
      rem /= (max_value + 1);
    }
    if (!(arith_fingerprint(a, sigma) == arith_fingerprint(b, sigma)))
      return {true, std::move(sigma)};
  }
  return {};
}

bool arith_equal(const Formula& a, const Formula& b, uint64_t max_value) {
  return !find_separation(a, b, max_value).separated;
}

}  // namespace relcat::iso
