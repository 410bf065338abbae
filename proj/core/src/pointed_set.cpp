#include "relcat/pointed_set.hpp"

#include <string>

#include "relcat/config.hpp"

namespace relcat::pointed {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw SizeError("carrier size overflow");
  return a * b;
}

void check_cap(uint64_t n) {
  if (n > limits().table_cap)
    throw SizeError("carrier size " + std::to_string(n) + " exceeds the table cap " +
                    std::to_string(limits().table_cap));
}

}  // namespace

PointedMap identity_map(uint64_t n) {
  check_cap(n);
  PointedMap m{n, n, {}};
  m.table.resize(n);
  for (uint64_t i = 0; i < n; ++i) m.table[i] = static_cast<uint32_t>(i);
  return m;
}

PointedMap constant_map(uint64_t dom, uint64_t cod) {
  check_cap(dom);
  return {dom, cod, std::vector<uint32_t>(dom, 0)};
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (f.cod != g.dom)
    throw ShapeError("composing maps with codomain " + std::to_string(f.cod) +
                     " and domain " + std::to_string(g.dom));
  PointedMap m{f.dom, g.cod, {}};
  m.table.resize(f.dom);
  for (uint64_t i = 0; i < f.dom; ++i) m.table[i] = g.table[f.table[i]];
  return m;
}

bool map_equal(const PointedMap& f, const PointedMap& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw ShapeError("comparing non-parallel maps");
  return f.table == g.table;
}

bool iso_check(const PointedSet& a, const PointedSet& b) {
  return a.size == b.size;
}

uint64_t smash_size(uint64_t a, uint64_t b) {
  return checked_mul(a - 1, b - 1) + 1;
}

uint64_t smash_pair(uint64_t x, uint64_t y, uint64_t, uint64_t b) {
  if (x == 0 || y == 0) return 0;
  return (x - 1) * (b - 1) + (y - 1) + 1;
}

std::pair<uint64_t, uint64_t> smash_split(uint64_t z, uint64_t, uint64_t b) {
  if (z == 0) return {0, 0};
  return {(z - 1) / (b - 1) + 1, (z - 1) % (b - 1) + 1};
}

PointedMap smash_map(const PointedMap& f, const PointedMap& g) {
  uint64_t n = smash_size(f.dom, g.dom);
  check_cap(n);
  check_cap(smash_size(f.cod, g.cod));
  PointedMap m{n, smash_size(f.cod, g.cod), {}};
  m.table.resize(n);
  for (uint64_t z = 0; z < n; ++z) {
    auto [x, y] = smash_split(z, f.dom, g.dom);
    m.table[z] = static_cast<uint32_t>(
        smash_pair(f.table[x], g.table[y], f.cod, g.cod));
  }
  return m;
}

PointedMap smash_proj1(uint64_t a, uint64_t b) {
  uint64_t n = smash_size(a, b);
  check_cap(n);
  PointedMap m{n, a, {}};
  m.table.resize(n);
  for (uint64_t z = 0; z < n; ++z)
    m.table[z] = static_cast<uint32_t>(smash_split(z, a, b).first);
  return m;
}

PointedMap smash_proj2(uint64_t a, uint64_t b) {
  uint64_t n = smash_size(a, b);
  check_cap(n);
  PointedMap m{n, b, {}};
  m.table.resize(n);
  for (uint64_t z = 0; z < n; ++z)
    m.table[z] = static_cast<uint32_t>(smash_split(z, a, b).second);
  return m;
}

uint64_t hom_size(uint64_t a, uint64_t b) {
  uint64_t n = 1;
  for (uint64_t i = 1; i < a; ++i) {
    n = checked_mul(n, b);
    check_cap(n);
  }
  return n;
}

uint64_t hom_apply(uint64_t code, uint64_t x, uint64_t a, uint64_t b) {
  if (x == 0) return 0;
  uint64_t shift = a - 1 - x;  // big-endian: the value on 1 is most significant
  for (uint64_t i = 0; i < shift; ++i) code /= b;
  return code % b;
}

uint64_t hom_code(const std::vector<uint32_t>& values, uint64_t b) {
  uint64_t code = 0;
  for (uint32_t v : values) code = checked_mul(code, b) + v;
  return code;
}

PointedMap hom_map(uint64_t a, const PointedMap& f) {
  uint64_t n = hom_size(a, f.dom);
  PointedMap m{n, hom_size(a, f.cod), {}};
  m.table.resize(n);
  std::vector<uint32_t> digits(a ? a - 1 : 0);
  for (uint64_t code = 0; code < n; ++code) {
    for (uint64_t x = 1; x < a; ++x)
      digits[x - 1] = f.table[hom_apply(code, x, a, f.dom)];
    m.table[code] = static_cast<uint32_t>(hom_code(digits, f.cod));
  }
  return m;
}

uint64_t prod_size(uint64_t a, uint64_t b) {
  return checked_mul(a, b);
}

uint64_t prod_pair(uint64_t x, uint64_t y, uint64_t a, uint64_t b) {
  uint64_t s = smash_size(a, b);
  if ((x == 0) == (y == 0)) return smash_pair(x, y, a, b);
  if (y == 0) return s + (x - 1);
  return s + (a - 1) + (y - 1);
}

std::pair<uint64_t, uint64_t> prod_split(uint64_t z, uint64_t a, uint64_t b) {
  uint64_t s = smash_size(a, b);
  if (z < s) return smash_split(z, a, b);
  z -= s;
  if (z < a - 1) return {z + 1, 0};
  return {0, z - (a - 1) + 1};
}

uint64_t coprod_size(uint64_t a, uint64_t b) {
  return a + b - 1;
}

uint64_t coprod_in1(uint64_t x, uint64_t, uint64_t) { return x; }

uint64_t coprod_in2(uint64_t y, uint64_t a, uint64_t) {
  return y == 0 ? 0 : a - 1 + y;
}

std::pair<int, uint64_t> coprod_split(uint64_t z, uint64_t a, uint64_t) {
  if (z == 0) return {0, 0};
  if (z < a) return {0, z};
  return {1, z - (a - 1)};
}

PartialFn to_partial(const PointedMap& f) {
  PartialFn p{f.dom - 1, f.cod - 1, {}};
  p.table.resize(p.dom);
  for (uint64_t x = 1; x < f.dom; ++x)
    p.table[x - 1] = f.table[x] == 0 ? kUndefined : static_cast<int64_t>(f.table[x]) - 1;
  return p;
}

PointedMap from_partial(const PartialFn& f) {
  PointedMap m{f.dom + 1, f.cod + 1, {}};
  m.table.resize(f.dom + 1);
  m.table[0] = 0;
  for (uint64_t x = 0; x < f.dom; ++x)
    m.table[x + 1] = f.table[x] == kUndefined
                         ? 0
                         : static_cast<uint32_t>(f.table[x] + 1);
  return m;
}

PartialFn compose(const PartialFn& g, const PartialFn& f) {
  if (f.cod != g.dom)
    throw ShapeError("composing partial functions with codomain " +
                     std::to_string(f.cod) + " and domain " + std::to_string(g.dom));
  PartialFn p{f.dom, g.cod, {}};
  p.table.resize(f.dom);
  for (uint64_t x = 0; x < f.dom; ++x)
    p.table[x] = f.table[x] == kUndefined ? kUndefined : g.table[f.table[x]];
  return p;
}

}  // namespace relcat::pointed
