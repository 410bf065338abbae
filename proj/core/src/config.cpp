#include "relcat/config.hpp"

#include <cstdlib>
#include <string>

namespace relcat {

Limits& limits() {
  static Limits instance;
  return instance;
}

uint64_t env_size_cap(uint64_t fallback) {
  const char* raw = std::getenv("RELCAT_SIZE_CAP");
  if (!raw || !*raw) return fallback;
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) return fallback;
    return v;
  } catch (...) {
    return fallback;
  }
}

}  // namespace relcat
