// Acceptance run: one PASS/FAIL line per criterion, each with its prime set
// and wall-time budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "skewpair/suite.hpp"

namespace sp = skewpair;

namespace {

constexpr std::uint64_t kRootSeed = 42;

struct Part {
  int p;
  int check;
  std::optional<double> limit;  // per-part budget, if the criterion sets one
};

struct Criterion {
  int number;
  const char* summary;
  std::vector<Part> parts;
  double limit;  // seconds for the whole criterion
};

std::vector<Part> over(std::initializer_list<int> primes, int check) {
  std::vector<Part> out;
  for (int p : primes) out.push_back({p, check, std::nullopt});
  return out;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out = {
      {1, "R R' = p I", over({3, 5, 7, 11, 13}, 1), 1.0},
      {2, "torus bridge R T R^-1 = S", over({3, 5, 7}, 2), 10.0},
      {3, "Phi round trips and equivariance", over({3, 5, 7}, 3), 30.0},
      {4, "dimension certificates i(p-1)", {{3, 4, 5.0}, {5, 4, 120.0}}, 125.0},
      {5, "Lie closure spans p^2", over({3, 5, 7}, 5), 60.0},
      {6, "normalizer and invariant subspaces", over({3, 5, 7, 11, 13}, 6), 60.0},
      {7, "adjust map rank and trace-zero image", over({3, 5}, 7), 60.0},
      {8, "square-zero lifting", over({3, 5}, 8), 120.0},
      {9, "charpoly collapse and det R_1", over({3, 5, 7, 11, 13}, 9), 60.0},
      {10, "slot laws in the symbol algebra", over({3, 5}, 10), 60.0},
      {11, "Psi contracts and toral actions", over({3, 5, 7}, 11), 60.0},
  };
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string prime_set(const std::vector<Part>& parts) {
  std::string s = "{";
  int last = 0;
  for (const auto& part : parts) {
    if (part.p == last) continue;
    if (s.size() > 1) s += ",";
    s += std::to_string(part.p);
    last = part.p;
  }
  return s + "}";
}

void print_line(bool ok, int number, const std::string& summary, const std::string& primes, double secs,
                double limit, const std::string& note) {
  char budget[32] = "no time limit";
  if (limit > 0) std::snprintf(budget, sizeof budget, "limit %g s", limit);
  std::printf("%s  %2d  %-40s p=%-14s %8.2f s (%s)%s%s\n", ok ? "PASS" : "FAIL", number, summary.c_str(),
              primes.c_str(), secs, budget, note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
}

bool run_criterion(const Criterion& c) {
  sp::SuiteOptions opts;
  opts.threads = 1;
  std::string note;
  bool ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& part : c.parts) {
    const auto tp = std::chrono::steady_clock::now();
    sp::SuiteReport report = sp::run_suite(part.p, kRootSeed, std::to_string(part.check), opts);
    const double secs = seconds_since(tp);
    for (const auto& rec : report.checks) {
      if (rec.status != sp::CheckStatus::kPass) {
        ok = false;
        note += "p=" + std::to_string(part.p) + " " + sp::status_name(rec.status) + "; ";
      }
    }
    if (part.limit && secs > *part.limit) {
      ok = false;
      char buf[96];
      std::snprintf(buf, sizeof buf, "p=%d took %.2f s over %g s; ", part.p, secs, *part.limit);
      note += buf;
    }
  }
  const double total = seconds_since(t0);
  if (total > c.limit) {
    ok = false;
    note += "over time budget; ";
  }
  print_line(ok, c.number, c.summary, prime_set(c.parts), total, c.limit, note);
  return ok;
}

/// Full-suite reports must serialize identically across repeated runs and
/// across thread counts.
bool run_determinism() {
  bool ok = true;
  std::string note;
  const auto t0 = std::chrono::steady_clock::now();
  for (int p : {3, 5}) {
    sp::SuiteOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const std::string a = sp::report_to_json(sp::run_suite(p, kRootSeed, "all", one)).dump();
    const std::string b = sp::report_to_json(sp::run_suite(p, kRootSeed, "all", one)).dump();
    const sp::SuiteReport threaded = sp::run_suite(p, kRootSeed, "all", many);
    const std::string c = sp::report_to_json(threaded).dump();
    if (a != b) note += "p=" + std::to_string(p) + " repeat differs; ";
    if (a != c) note += "p=" + std::to_string(p) + " thread count changes output; ";
    if (!threaded.passed()) note += "p=" + std::to_string(p) + " suite failed; ";
    ok = ok && a == b && a == c && threaded.passed();
  }
  print_line(ok, 12, "determinism across runs and threads", "{3,5}", seconds_since(t0), 0, note);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  auto selected = [&](int n) {
    if (only.empty()) return true;
    for (int k : only) {
      if (k == n) return true;
    }
    return false;
  };

  std::printf("acceptance run, root seed %llu\n", static_cast<unsigned long long>(kRootSeed));
  int failures = 0;
  for (const auto& c : criteria()) {
    if (!selected(c.number)) continue;
    try {
      failures += run_criterion(c) ? 0 : 1;
    } catch (const std::exception& e) {
      print_line(false, c.number, c.summary, prime_set(c.parts), 0, c.limit, e.what());
      ++failures;
    }
  }
  if (selected(12)) failures += run_determinism() ? 0 : 1;
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
