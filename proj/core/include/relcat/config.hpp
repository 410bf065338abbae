#pragma once

#include <cstdint>

namespace relcat {

// Global resource limits. Mutable so the CLI can apply RELCAT_SIZE_CAP; library
// callers may tighten or relax them before evaluating.
struct Limits {
  // Largest pointed-set size a valuation may assign to a letter.
  uint64_t valuation_cap = 6;
  // Largest table materialized while evaluating an arrow term.
  uint64_t table_cap = uint64_t{1} << 20;
  // Exact big-integer arithmetic refuses results beyond this many bits.
  uint64_t arith_max_bits = uint64_t{1} << 21;
  // Exact exponentiation refuses exponents beyond this.
  uint64_t arith_max_exp = uint64_t{1} << 22;
};

Limits& limits();

// Value of the RELCAT_SIZE_CAP environment variable, or `fallback` if unset
// or unparsable.
uint64_t env_size_cap(uint64_t fallback);

}  // namespace relcat
