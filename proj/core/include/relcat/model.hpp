#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relcat/arrow_term.hpp"
#include "relcat/formula.hpp"
#include "relcat/pointed_set.hpp"

namespace relcat::model {

using BigInt = boost::multiprecision::cpp_int;
using Valuation = std::map<std::string, pointed::PointedSet>;

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact carrier size of a formula under a valuation. Throws ModelError for an
// unassigned letter or when an intermediate size blows past the configured
// bit budget.
BigInt interp_size(const syntax::Formula& f, const Valuation& val);

// Same, but additionally enforces the table cap so the carrier can be
// materialised.
uint64_t interp_size_small(const syntax::Formula& f, const Valuation& val);

// Evaluates an arrow term to a table; throws ModelError on holes and
// pointed::SizeError when a carrier is too big.
pointed::PointedMap eval_term(const syntax::ArrowTerm& t, const Valuation& val);

// Structured rendering of element `index` of the carrier of f, e.g.
// "(p#2, q#1)" or "[*, q#1]".
std::string describe_element(const syntax::Formula& f, const Valuation& val,
                             uint64_t index);

// Every valuation of `letters` with sizes drawn from `sizes`; the first
// letter varies slowest.
std::vector<Valuation> size_family(const std::vector<std::string>& letters,
                                   const std::vector<uint64_t>& sizes);

// The stock family with sizes 1, 2, 3.
std::vector<Valuation> default_family(const std::vector<std::string>& letters);

struct CheckResult {
  bool holds = true;
  size_t checked = 0;  // valuations evaluated
  size_t skipped = 0;  // valuations over the table cap
  // Populated when !holds:
  Valuation counterexample;
  uint64_t element = 0;
  uint64_t lhs_value = 0;
  uint64_t rhs_value = 0;
};

// Evaluates both sides over the family and compares tables.
CheckResult check_equation(const syntax::Equation& eq,
                           const std::vector<Valuation>& family);

struct NonNaturalWitness {
  uint64_t a = 0, b = 0;   // carrier sizes of the two slots
  int projection = 0;      // 1 or 2: which smash projection fails
  pointed::PointedMap f, g;
  uint64_t element = 0;    // input of the failing square
  uint64_t via_proj = 0;   // f ∘ proj, evaluated at element
  uint64_t via_map = 0;    // proj ∘ (f∧g), evaluated at element
};

// Exhibits maps f, g for which the candidate smash projection is not natural,
// found by exhaustive search over small carriers.
NonNaturalWitness naturality_failure_witness();

}  // namespace relcat::model
