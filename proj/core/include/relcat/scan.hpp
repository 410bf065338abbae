#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relcat/enumerate.hpp"

namespace relcat::scan {

struct ScanOptions {
  iso::EnumOptions enumeration;
  uint64_t max_value = 4;  // letter values 0..max_value in the valuations
  unsigned workers = 1;
};

struct ScanReport {
  size_t formulas = 0;
  size_t valuations = 0;
  size_t nf_classes = 0;
  size_t fp_classes = 0;
  bool agree = false;
  // Counterexample pairs, rendered; empty when the partitions coincide.
  std::vector<std::pair<std::string, std::string>> nf_equal_fp_differ;
  std::vector<std::pair<std::string, std::string>> fp_equal_nf_differ;
  double seconds = 0;
};

// Partitions the enumerated formulas two ways — by normal form and by the
// profile of arithmetic fingerprints over every valuation — and compares the
// partitions.
ScanReport conjecture_scan(const ScanOptions& opts);

std::string to_text(const ScanReport& r);
std::string to_json_string(const ScanReport& r);

}  // namespace relcat::scan
