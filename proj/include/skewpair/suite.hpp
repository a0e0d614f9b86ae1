#pragma once

// Batch verification: runs the checks for one prime and seed and assembles a
// report whose canonical serialization depends only on (p, seed, selection,
// trials).

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "skewpair/checks.hpp"

namespace skewpair {

/// Calls f(std::integral_constant<int, p>{}) for a supported runtime p.
template <typename F>
decltype(auto) dispatch_prime(int p, F&& f) {
  switch (p) {
    case 3:
      return f(std::integral_constant<int, 3>{});
    case 5:
      return f(std::integral_constant<int, 5>{});
    case 7:
      return f(std::integral_constant<int, 7>{});
    case 11:
      return f(std::integral_constant<int, 11>{});
    case 13:
      return f(std::integral_constant<int, 13>{});
    default:
      require_supported_prime(p);
      throw InternalError("unreachable prime dispatch");
  }
}

struct CheckRecord {
  int number = 0;
  std::string name;
  std::string anchor;
  std::uint64_t seed = 0;
  CheckStatus status = CheckStatus::kPass;
  Json witness;
  double seconds = 0.0;
};

struct SuiteReport {
  int p = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::kFail) return false;
    }
    return true;
  }
};

struct SuiteOptions {
  int threads = 0;      // 0: one per hardware thread
  int trials = 0;       // 0: per-check defaults
  bool timings = false; // include wall time in serialized output
};

/// Resolves a selector ("all", or a comma list of check names, numbers, or
/// the groups pairs, filtration, lifting, symbol) to sorted check numbers.
/// Throws ParseError on unknown entries.
std::vector<int> resolve_selector(const std::string& selector);

/// Throws UnsupportedPrime for p outside {3, 5, 7, 11, 13}.
SuiteReport run_suite(int p, std::uint64_t seed, const std::string& selector,
                      const SuiteOptions& options = {});

Json report_to_json(const SuiteReport& report, bool timings = false);
std::string report_to_text(const SuiteReport& report, bool timings = false);

/// Reads a comma-separated prime list; throws ParseError / UnsupportedPrime.
std::vector<int> parse_prime_list(const std::string& text);

/// Default primes: $SKEWPAIR_P if set, else "3".
std::vector<int> default_primes();

}  // namespace skewpair
