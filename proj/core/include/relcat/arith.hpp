#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "relcat/formula.hpp"
#include "relcat/normal_form.hpp"

namespace relcat::iso {

using BigInt = boost::multiprecision::cpp_int;
using ArithValuation = std::map<std::string, uint64_t>;

struct ArithOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The numeral of a formula: letters take their assigned value, ⊤ is 1,
// ∧ multiplies, and A→B with values m, n is (n+1)^m - 1. Exact; throws
// ArithOverflow past the configured bit budget, FragmentError outside the
// ∧/⊤/→ fragment. Unassigned letters default to 1.
BigInt arith_eval(const syntax::Formula& f, const ArithValuation& val);

// Saturating cap of the widened evaluation; values at the cap stand for
// "at least kExactCeiling".
inline constexpr uint64_t kSatCap = uint64_t(1) << 62;
inline constexpr uint64_t kExactCeiling = kSatCap - 4096;

inline constexpr size_t kResidues = 8;

// Compact certificate of the numeral: its exact value when it fits under
// kExactCeiling (small == value), otherwise small == kSatCap and the value is
// identified by its residues modulo eight fixed 31-bit primes. Equal
// fingerprints mean equal numerals (exactly below the ceiling, by CRT
// certificate above it); unequal fingerprints always mean unequal numerals.
struct Fingerprint {
  uint64_t small = 0;
  std::array<uint32_t, kResidues> residues{};
  bool operator==(const Fingerprint&) const = default;
  bool exact() const { return small < kExactCeiling; }
};

// Total on the fragment: never overflows, any size of numeral.
Fingerprint arith_fingerprint(const syntax::Formula& f, const ArithValuation& val);

struct Separation {
  bool separated = false;
  ArithValuation sigma;  // the separating valuation, when found
};

// Searches valuations with values 0..max_value over the letters of both
// formulas (lexicographically, first letter slowest) for one giving the
// formulas different fingerprints.
Separation find_separation(const syntax::Formula& a, const syntax::Formula& b,
                           uint64_t max_value = 4);

bool arith_equal(const syntax::Formula& a, const syntax::Formula& b,
                 uint64_t max_value = 4);

}  // namespace relcat::iso
