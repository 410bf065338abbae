#include <doctest.h>

#include <cstdint>
#include <vector>

#include "relcat/model.hpp"
#include "relcat/parser.hpp"
#include "relcat/pointed_set.hpp"

using namespace relcat::pointed;

namespace {

// Enumerate every point-preserving map dom -> cod by its table.
std::vector<PointedMap> all_maps(uint64_t dom, uint64_t cod) {
  std::vector<PointedMap> out;
  uint64_t count = 1;
  for (uint64_t i = 1; i < dom; ++i) count *= cod;
  for (uint64_t code = 0; code < count; ++code) {
    PointedMap m{dom, cod, std::vector<uint32_t>(dom, 0)};
    uint64_t c = code;
    for (uint64_t i = 1; i < dom; ++i) {
      m.table[i] = static_cast<uint32_t>(c % cod);
      c /= cod;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_SUITE("pointedsets") {

TEST_CASE("smash sizes and pairing") {
  // (a-1)(b-1)+1: each factor loses its point, one joint point remains.
  CHECK(smash_size(3, 4) == 7);
  CHECK(smash_size(1, 5) == 1);
  CHECK(smash_size(5, 1) == 1);
  CHECK(smash_size(2, 2) == 2);

  CHECK(smash_pair(0, 2, 3, 4) == 0);
  CHECK(smash_pair(2, 0, 3, 4) == 0);
  CHECK(smash_pair(1, 1, 3, 4) == 1);
  CHECK(smash_pair(1, 3, 3, 4) == 3);
  CHECK(smash_pair(2, 1, 3, 4) == 4);
  CHECK(smash_pair(2, 3, 3, 4) == 6);

  for (uint64_t z = 1; z < smash_size(3, 4); ++z) {
    auto [x, y] = smash_split(z, 3, 4);
    CHECK(x >= 1);
    CHECK(y >= 1);
    CHECK(smash_pair(x, y, 3, 4) == z);
  }
  auto [x0, y0] = smash_split(0, 3, 4);
  CHECK(x0 == 0);
  CHECK(y0 == 0);
}

TEST_CASE("hom sizes, codes and application") {
  // b^(a-1) tables; code 0 is the constant-point map.
  CHECK(hom_size(3, 4) == 16);
  CHECK(hom_size(1, 7) == 1);
  CHECK(hom_size(4, 1) == 1);
  CHECK(hom_size(2, 3) == 3);

  for (uint64_t x = 0; x < 3; ++x) CHECK(hom_apply(0, x, 3, 4) == 0);

  // Codes are big-endian in the argument: the digit for x=1 is most
  // significant.
  uint64_t nine = 9;  // digits (2, 1) base 4
  CHECK(hom_apply(nine, 0, 3, 4) == 0);
  CHECK(hom_apply(nine, 1, 3, 4) == 2);
  CHECK(hom_apply(nine, 2, 3, 4) == 1);

  for (const PointedMap& m : all_maps(3, 4)) {
    std::vector<uint32_t> values(m.table.begin() + 1, m.table.end());
    uint64_t code = hom_code(values, 4);
    CHECK(code < hom_size(3, 4));
    for (uint64_t x = 0; x < 3; ++x)
      CHECK(hom_apply(code, x, 3, 4) == m.table[x]);
  }
}

TEST_CASE("product layout") {
  // The point (0,0), then the smash-style block, then (x, *), then (*, y).
  CHECK(prod_size(3, 4) == 12);
  CHECK(prod_pair(0, 0, 3, 4) == 0);
  CHECK(prod_pair(1, 1, 3, 4) == 1);
  CHECK(prod_pair(2, 3, 3, 4) == 6);
  CHECK(prod_pair(1, 0, 3, 4) == 7);
  CHECK(prod_pair(2, 0, 3, 4) == 8);
  CHECK(prod_pair(0, 1, 3, 4) == 9);
  CHECK(prod_pair(0, 3, 3, 4) == 11);
  for (uint64_t x = 0; x < 3; ++x)
    for (uint64_t y = 0; y < 4; ++y) {
      auto [px, py] = prod_split(prod_pair(x, y, 3, 4), 3, 4);
      CHECK(px == x);
      CHECK(py == y);
    }
}

TEST_CASE("coproduct layout") {
  // Points identified: a + b - 1 elements.
  CHECK(coprod_size(3, 4) == 6);
  CHECK(coprod_in1(0, 3, 4) == 0);
  CHECK(coprod_in2(0, 3, 4) == 0);
  CHECK(coprod_in1(2, 3, 4) == 2);
  CHECK(coprod_in2(1, 3, 4) == 3);
  CHECK(coprod_in2(3, 3, 4) == 5);
  for (uint64_t z = 1; z < 6; ++z) {
    auto [side, v] = coprod_split(z, 3, 4);
    if (side == 0) CHECK(coprod_in1(v, 3, 4) == z);
    if (side == 1) CHECK(coprod_in2(v, 3, 4) == z);
  }
}

TEST_CASE("distribution of product over coproduct fails on sizes") {
  CHECK(prod_size(2, coprod_size(2, 2)) == 6);
  CHECK(coprod_size(prod_size(2, 2), prod_size(2, 2)) == 7);
}

TEST_CASE("composition and identities") {
  PointedMap f{3, 4, {0, 2, 2}};
  PointedMap g{4, 2, {0, 1, 0, 1}};
  PointedMap gf = compose(g, f);
  CHECK(gf.dom == 3);
  CHECK(gf.cod == 2);
  CHECK(gf.table == std::vector<uint32_t>{0, 0, 0});
  CHECK(map_equal(compose(f, identity_map(3)), f));
  CHECK(map_equal(compose(identity_map(4), f), f));
  CHECK_THROWS_AS(compose(f, g), ShapeError);
  CHECK_THROWS_AS(map_equal(f, g), ShapeError);
  CHECK(constant_map(5, 3).table == std::vector<uint32_t>{0, 0, 0, 0, 0});
}

TEST_CASE("smash of maps") {
  PointedMap f{2, 2, {0, 1}};
  PointedMap k{2, 2, {0, 0}};
  PointedMap fk = smash_map(f, k);
  CHECK(fk.dom == 2);
  // (1,1) hits the point through k, so everything collapses.
  CHECK(fk.table == std::vector<uint32_t>{0, 0});
  PointedMap ff = smash_map(f, f);
  CHECK(ff.table == std::vector<uint32_t>{0, 1});
  PointedMap h = smash_map(PointedMap{3, 3, {0, 2, 1}}, identity_map(4));
  CHECK(h.dom == 7);
  for (uint64_t x = 1; x < 3; ++x)
    for (uint64_t y = 1; y < 4; ++y) {
      uint64_t z = smash_pair(x, y, 3, 4);
      CHECK(h.table[z] == smash_pair(x == 1 ? 2 : 1, y, 3, 4));
    }
}

TEST_CASE("hom of maps is pointwise post-composition") {
  PointedMap g{4, 4, {0, 1, 1, 0}};
  PointedMap hg = hom_map(3, g);
  CHECK(hg.dom == hom_size(3, 4));
  CHECK(hg.cod == hom_size(3, 4));
  for (uint64_t code = 0; code < hg.dom; ++code)
    for (uint64_t x = 0; x < 3; ++x)
      CHECK(hom_apply(hg.table[code], x, 3, 4) ==
            g.table[hom_apply(code, x, 3, 4)]);
  // Functoriality on a composable pair.
  PointedMap k{4, 3, {0, 2, 0, 1}};
  CHECK(map_equal(hom_map(3, compose(k, g)), compose(hom_map(3, k), hom_map(3, g))));
  CHECK(map_equal(hom_map(3, identity_map(4)), identity_map(hom_size(3, 4))));
}

TEST_CASE("projections are well-defined but collapse mixed points") {
  PointedMap p1 = smash_proj1(3, 4);
  PointedMap p2 = smash_proj2(3, 4);
  CHECK(p1.dom == 7);
  CHECK(p1.cod == 3);
  CHECK(p2.cod == 4);
  for (uint64_t x = 1; x < 3; ++x)
    for (uint64_t y = 1; y < 4; ++y) {
      CHECK(p1.table[smash_pair(x, y, 3, 4)] == x);
      CHECK(p2.table[smash_pair(x, y, 3, 4)] == y);
    }
}

TEST_CASE("partial function correspondence") {
  for (uint64_t a = 1; a <= 3; ++a)
    for (uint64_t b = 1; b <= 3; ++b)
      for (const PointedMap& f : all_maps(a, b)) {
        PartialFn p = to_partial(f);
        CHECK(p.dom == a - 1);
        CHECK(p.cod == b - 1);
        CHECK(map_equal(from_partial(p), f));
      }
  // Composition of partial functions matches composition of maps.
  for (const PointedMap& f : all_maps(3, 3))
    for (const PointedMap& g : all_maps(3, 3)) {
      PartialFn lhs = to_partial(compose(g, f));
      PartialFn rhs = compose(to_partial(g), to_partial(f));
      CHECK(lhs == rhs);
    }
  // Undefined entries are exactly the point hits.
  PointedMap f{4, 3, {0, 0, 1, 2}};
  PartialFn p = to_partial(f);
  CHECK(p.table == std::vector<int64_t>{kUndefined, 0, 1});
}

TEST_CASE("table cap guards") {
  // Size arithmetic is pure; only materializing a table trips the cap.
  CHECK(smash_size(1u << 20, 1u << 20) ==
        (uint64_t{(1u << 20) - 1}) * ((1u << 20) - 1) + 1);
  CHECK_THROWS_AS(smash_size(UINT64_MAX, UINT64_MAX), SizeError);
  PointedMap huge = identity_map(1 << 12);
  CHECK_THROWS_AS(smash_map(huge, huge), SizeError);
  CHECK_THROWS_AS(hom_size(40, 1u << 18), SizeError);
}

TEST_CASE("iso check is equinumerosity") {
  CHECK(iso_check(PointedSet{7}, PointedSet{7}));
  CHECK_FALSE(iso_check(PointedSet{1}, PointedSet{2}));
  // Currying: the carriers of (p ∧ q) → r and q → (p → r) always match.
  relcat::model::Valuation val{
      {"p", PointedSet{3}}, {"q", PointedSet{2}}, {"r", PointedSet{2}}};
  auto size = [&](const char* s) {
    return PointedSet{
        relcat::model::interp_size_small(relcat::syntax::parse_formula(s), val)};
  };
  CHECK(iso_check(size("(p ∧ q) → r"), size("q → (p → r)")));
}

}  // TEST_SUITE
