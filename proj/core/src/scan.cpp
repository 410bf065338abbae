#include "relcat/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "relcat/arith.hpp"
#include "relcat/normal_form.hpp"
#include "relcat/printer.hpp"

namespace relcat::scan {

using syntax::Formula;

namespace {

std::vector<iso::ArithValuation> all_sigmas(const std::vector<std::string>& letters,
                                            uint64_t max_value) {
  size_t total = 1;
  for (size_t i = 0; i < letters.size(); ++i) total *= max_value + 1;
  std::vector<iso::ArithValuation> out;
  out.reserve(total);
  for (size_t n = 0; n < total; ++n) {
    iso::ArithValuation sigma;
    size_t rem = n;
    for (size_t i = letters.size(); i-- > 0;) {
      sigma[letters[i]] = rem % (max_value + 1);
      rem /= (max_value + 1);
    }
    out.push_back(std::move(sigma));
  }
  return out;
}

void append_u64(std::string& s, uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>(v >> (8 * i)));
}

std::string profile_key(const Formula& f, const std::vector<iso::ArithValuation>& sigmas) {
  std::string key;
  key.reserve(sigmas.size() * 9);
  for (const auto& sigma : sigmas) {
    iso::Fingerprint fp = iso::arith_fingerprint(f, sigma);
    if (fp.exact()) {
      key.push_back('e');
      append_u64(key, fp.small);
    } else {
      key.push_back('s');
      for (uint32_t r : fp.residues) {
        key.push_back(static_cast<char>(r));
        key.push_back(static_cast<char>(r >> 8));
        key.push_back(static_cast<char>(r >> 16));
        key.push_back(static_cast<char>(r >> 24));
      }
    }
  }
  return key;
}

}  // namespace

ScanReport conjecture_scan(const ScanOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  std::vector<Formula> fs = iso::enumerate_formulas(opts.enumeration);
  std::vector<iso::ArithValuation> sigmas =
      all_sigmas(opts.enumeration.letters, opts.max_value);
  rep.formulas = fs.size();
  rep.valuations = sigmas.size();

  std::vector<std::string> nf_keys(fs.size()), fp_keys(fs.size());
  unsigned workers = std::max(1u, opts.workers);
  std::atomic<size_t> cursor{0};
  auto work = [&] {
    constexpr size_t kChunk = 256;
    for (;;) {
      size_t lo = cursor.fetch_add(kChunk);
      if (lo >= fs.size()) return;
      size_t hi = std::min(lo + kChunk, fs.size());
      for (size_t i = lo; i < hi; ++i) {
        nf_keys[i] = iso::to_string(iso::normalize(fs[i]));
        fp_keys[i] = profile_key(fs[i], sigmas);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::unordered_map<std::string, size_t> nf_id, fp_id;
  std::vector<size_t> nf_of(fs.size()), fp_of(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    nf_of[i] = nf_id.emplace(std::move(nf_keys[i]), nf_id.size()).first->second;
    fp_of[i] = fp_id.emplace(std::move(fp_keys[i]), fp_id.size()).first->second;
  }
  rep.nf_classes = nf_id.size();
  rep.fp_classes = fp_id.size();

  std::vector<std::vector<size_t>> nf_members(nf_id.size()), fp_members(fp_id.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    nf_members[nf_of[i]].push_back(i);
    fp_members[fp_of[i]].push_back(i);
  }

  constexpr size_t kMaxWitnesses = 5;
  for (const auto& members : nf_members)
    for (size_t i = 1; i < members.size(); ++i)
      if (fp_of[members[i]] != fp_of[members[0]]) {
        if (rep.nf_equal_fp_differ.size() < kMaxWitnesses)
          rep.nf_equal_fp_differ.emplace_back(syntax::to_string(fs[members[0]]),
                                              syntax::to_string(fs[members[i]]));
        break;
      }
  for (const auto& members : fp_members)
    for (size_t i = 1; i < members.size(); ++i)
      if (nf_of[members[i]] != nf_of[members[0]]) {
        if (rep.fp_equal_nf_differ.size() < kMaxWitnesses)
          rep.fp_equal_nf_differ.emplace_back(syntax::to_string(fs[members[0]]),
                                              syntax::to_string(fs[members[i]]));
        break;
      }
  rep.agree = rep.nf_equal_fp_differ.empty() && rep.fp_equal_nf_differ.empty();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string to_text(const ScanReport& r) {
  std::string s;
  s += "formulas: " + std::to_string(r.formulas) + "\n";
  s += "valuations: " + std::to_string(r.valuations) + "\n";
  s += "normal-form classes: " + std::to_string(r.nf_classes) + "\n";
  s += "fingerprint classes: " + std::to_string(r.fp_classes) + "\n";
  s += "partitions agree: " + std::string(r.agree ? "yes" : "no") + "\n";
  for (const auto& [a, b] : r.nf_equal_fp_differ)
    s += "normal forms equal, fingerprints differ: " + a + "  vs  " + b + "\n";
  for (const auto& [a, b] : r.fp_equal_nf_differ)
    s += "fingerprints equal, normal forms differ: " + a + "  vs  " + b + "\n";
  return s;
}

std::string to_json_string(const ScanReport& r) {
  nlohmann::json j{{"formulas", r.formulas},
                   {"valuations", r.valuations},
                   {"normal_form_classes", r.nf_classes},
                   {"fingerprint_classes", r.fp_classes},
                   {"agree", r.agree},
                   {"seconds", r.seconds}};
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [x, y] : v) a.push_back({{"first", x}, {"second", y}});
    return a;
  };
  j["nf_equal_fp_differ"] = pairs(r.nf_equal_fp_differ);
  j["fp_equal_nf_differ"] = pairs(r.fp_equal_nf_differ);
  return j.dump(2);
}

}  // namespace relcat::scan
