#include "skewpair/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace skewpair {

namespace {

constexpr int kDeterminism = 12;

const std::vector<std::pair<std::string, std::vector<int>>>& groups() {
  static const std::vector<std::pair<std::string, std::vector<int>>> kGroups = {
      {"pairs", {1, 2, 3, 5, 6, 11}},
      {"filtration", {4}},
      {"lifting", {7, 8, 9}},
      {"symbol", {10}},
  };
  return kGroups;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

int resolved_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs checks 1..11 from `numbers`, filling records in the given order.
std::vector<CheckRecord> run_checks(int p, std::uint64_t seed, const std::vector<int>& numbers,
                                    int trials, int threads) {
  const auto& catalog = check_catalog();
  std::vector<CheckRecord> records(numbers.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < numbers.size(); k = next++) {
      const CheckInfo& info = catalog[numbers[k] - 1];
      CheckRecord& rec = records[k];
      rec.number = info.number;
      rec.name = info.name;
      rec.anchor = info.anchor;
      rec.seed = derive_seed(seed, info.name);
      auto t0 = std::chrono::steady_clock::now();
      CheckOutcome out = dispatch_prime(p, [&](auto prime) {
        return run_check<decltype(prime)::value>(info.number, rec.seed, trials);
      });
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rec.status = out.status;
      rec.witness = std::move(out.witness);
    }
  };
  const int n = std::min<int>(threads, static_cast<int>(numbers.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

Json records_to_json(const std::vector<CheckRecord>& records, bool timings) {
  Json arr = Json::array();
  for (const auto& r : records) {
    Json j = Json::object();
    j["number"] = r.number;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["seed"] = std::to_string(r.seed);
    j["status"] = status_name(r.status);
    j["witness"] = r.witness;
    if (timings) j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::vector<int> resolve_selector(const std::string& selector) {
  const auto& catalog = check_catalog();
  std::set<int> chosen;
  for (const std::string& item : split_commas(selector)) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& c : catalog) chosen.insert(c.number);
      continue;
    }
    bool found = false;
    for (const auto& [name, members] : groups()) {
      if (item == name) {
        chosen.insert(members.begin(), members.end());
        found = true;
      }
    }
    for (const auto& c : catalog) {
      if (item == c.name || item == std::to_string(c.number)) {
        chosen.insert(c.number);
        found = true;
      }
    }
    if (!found) throw ParseError("unknown suite entry \"" + item + "\"");
  }
  if (chosen.empty()) throw ParseError("empty suite selection");
  return {chosen.begin(), chosen.end()};
}

SuiteReport run_suite(int p, std::uint64_t seed, const std::string& selector,
                      const SuiteOptions& options) {
  require_supported_prime(p);
  const std::vector<int> numbers = resolve_selector(selector);
  std::vector<int> work;
  for (int n : numbers) {
    if (n != kDeterminism) work.push_back(n);
  }
  const int threads = resolved_threads(options.threads);

  SuiteReport report;
  report.p = p;
  report.seed = seed;
  report.checks = run_checks(p, seed, work, options.trials, threads);

  if (std::find(numbers.begin(), numbers.end(), kDeterminism) != numbers.end()) {
    const CheckInfo& info = check_catalog()[kDeterminism - 1];
    CheckRecord rec;
    rec.number = info.number;
    rec.name = info.name;
    rec.anchor = info.anchor;
    rec.seed = derive_seed(seed, info.name);
    auto t0 = std::chrono::steady_clock::now();
    // Re-run the same selection with a different thread count; with nothing
    // else selected, the cheap pairs group stands in.
    std::vector<int> replay = work.empty() ? std::vector<int>{1, 2, 11} : work;
    const int other_threads = threads == 1 ? 2 : 1;
    std::vector<CheckRecord> base =
        work.empty() ? run_checks(p, seed, replay, options.trials, threads) : report.checks;
    const std::string first = records_to_json(base, false).dump();
    const std::string second =
        records_to_json(run_checks(p, seed, replay, options.trials, other_threads), false).dump();
    rec.status = first == second ? CheckStatus::kPass : CheckStatus::kFail;
    rec.witness = Json::object();
    rec.witness["replayed_checks"] = replay.size();
    rec.witness["digest"] = hex64(fnv1a64(first));
    rec.witness["identical"] = first == second;
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(rec));
  }
  return report;
}

Json report_to_json(const SuiteReport& report, bool timings) {
  Json out = Json::object();
  out["p"] = report.p;
  out["seed"] = std::to_string(report.seed);
  out["status"] = report.passed() ? "pass" : "fail";
  out["checks"] = records_to_json(report.checks, timings);
  return out;
}

std::string report_to_text(const SuiteReport& report, bool timings) {
  std::ostringstream os;
  os << "p = " << report.p << ", seed = " << report.seed << "\n";
  for (const auto& c : report.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "  [%-7s] %2d %-32s", status_name(c.status), c.number,
                  c.name.c_str());
    os << line;
    if (timings) {
      char t[32];
      std::snprintf(t, sizeof t, " %8.3fs", c.seconds);
      os << t;
    }
    os << "\n";
    if (c.status == CheckStatus::kFail) os << "      " << c.witness.dump() << "\n";
  }
  os << "overall: " << (report.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::vector<int> parse_prime_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split_commas(text)) {
    if (item.empty()) continue;
    char* end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0') throw ParseError("not an integer: \"" + item + "\"");
    require_supported_prime(v);
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ParseError("empty prime list");
  return out;
}

std::vector<int> default_primes() {
  const char* env = std::getenv("SKEWPAIR_P");
  return parse_prime_list(env && *env ? env : "3");
}

}  // namespace skewpair
