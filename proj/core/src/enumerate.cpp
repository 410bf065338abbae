#include "relcat/enumerate.hpp"

namespace relcat::iso {

using syntax::Formula;

namespace {

struct Entry {
  Formula f;
  unsigned mask;  // letters used, bit i for letters[i]
};

}  // namespace

std::vector<Formula> enumerate_formulas(const EnumOptions& opts) {
  std::vector<std::vector<Entry>> by_size(opts.max_size + 1);
  if (opts.include_top) by_size[0].push_back({Formula::top(), 0});
  for (size_t i = 0; i < opts.letters.size(); ++i)
    by_size[0].push_back({Formula::letter(opts.letters[i]), 1u << i});

  for (unsigned n = 1; n <= opts.max_size; ++n)
    for (unsigned l = 0; l < n; ++l) {
      unsigned r = n - 1 - l;
      for (const Entry& a : by_size[l])
        for (const Entry& b : by_size[r]) {
          if (opts.diversified_only && (a.mask & b.mask)) continue;
          unsigned mask = a.mask | b.mask;
          by_size[n].push_back({Formula::conj(a.f, b.f), mask});
          if (opts.closed) by_size[n].push_back({Formula::impl(a.f, b.f), mask});
        }
    }

  std::vector<Formula> out;
  size_t total = 0;
  for (const auto& bucket : by_size) total += bucket.size();
  out.reserve(total);
  for (const auto& bucket : by_size)
    for (const Entry& e : bucket) out.push_back(e.f);
  return out;
}

}  // namespace relcat::iso
