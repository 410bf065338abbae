#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace relcat::pointed {

// Finite pointed set: elements 0..size-1, element 0 is the point ∗.
struct PointedSet {
  uint64_t size = 1;
  bool operator==(const PointedSet&) const = default;
};

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point-preserving map as a full table: table[x] is the image of x,
// table[0] == 0 always.
struct PointedMap {
  uint64_t dom = 1;
  uint64_t cod = 1;
  std::vector<uint32_t> table{0};
  bool operator==(const PointedMap&) const = default;
};

PointedMap identity_map(uint64_t n);
PointedMap constant_map(uint64_t dom, uint64_t cod);  // everything to ∗

// g ∘ f; throws ShapeError when f.cod != g.dom.
PointedMap compose(const PointedMap& g, const PointedMap& f);

// Equality that insists the two maps are parallel; throws ShapeError
// otherwise.
bool map_equal(const PointedMap& f, const PointedMap& g);

// Finite pointed sets are isomorphic exactly when they are equinumerous.
bool iso_check(const PointedSet& a, const PointedSet& b);

// --- smash product A∧B: identifies every pair containing ∗ -----------------

uint64_t smash_size(uint64_t a, uint64_t b);
uint64_t smash_pair(uint64_t x, uint64_t y, uint64_t a, uint64_t b);
std::pair<uint64_t, uint64_t> smash_split(uint64_t z, uint64_t a, uint64_t b);

// Functorial action f∧g on the smash carriers.
PointedMap smash_map(const PointedMap& f, const PointedMap& g);

// The would-be first and second projections A∧B → A, A∧B → B (point when the
// other slot is ∗). Well-defined maps, but not natural.
PointedMap smash_proj1(uint64_t a, uint64_t b);
PointedMap smash_proj2(uint64_t a, uint64_t b);

// --- internal hom A→B: point-preserving maps, encoded by their values on the
// non-point elements of A as big-endian base-b digits; code 0 is the constant
// ∗ map -----------------------------------------------------------------

// b^(a-1); throws SizeError past the table cap.
uint64_t hom_size(uint64_t a, uint64_t b);
uint64_t hom_apply(uint64_t code, uint64_t x, uint64_t a, uint64_t b);
uint64_t hom_code(const std::vector<uint32_t>& values_on_nonpoint, uint64_t b);

// Post-composition A→f for f : B ⊢ C.
PointedMap hom_map(uint64_t a, const PointedMap& f);

// --- cartesian product A×B, point (∗,∗); carrier blocks are
// [both-or-neither-∗ | x non-∗ paired with ∗ | ∗ paired with y non-∗] -------

uint64_t prod_size(uint64_t a, uint64_t b);
uint64_t prod_pair(uint64_t x, uint64_t y, uint64_t a, uint64_t b);
std::pair<uint64_t, uint64_t> prod_split(uint64_t z, uint64_t a, uint64_t b);

// --- coproduct: the wedge A∨B, disjoint union glued at ∗ --------------------

uint64_t coprod_size(uint64_t a, uint64_t b);
uint64_t coprod_in1(uint64_t x, uint64_t a, uint64_t b);
uint64_t coprod_in2(uint64_t y, uint64_t a, uint64_t b);
// 0 for ∗, otherwise (side, element): side 0 from A, side 1 from B.
std::pair<int, uint64_t> coprod_split(uint64_t z, uint64_t a, uint64_t b);

// --- partial functions on the non-point carriers ----------------------------

inline constexpr int64_t kUndefined = -1;

struct PartialFn {
  uint64_t dom = 0;  // size of the carrier without the point
  uint64_t cod = 0;
  std::vector<int64_t> table;  // kUndefined where the function is undefined
  bool operator==(const PartialFn&) const = default;
};

PartialFn to_partial(const PointedMap& f);
PointedMap from_partial(const PartialFn& f);
PartialFn compose(const PartialFn& g, const PartialFn& f);

}  // namespace relcat::pointed
