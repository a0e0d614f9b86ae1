// skewpair: verification reports, dimension certificates and JSON fixture
// operations. Exit status: 0 pass, 1 check or domain failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "skewpair/io.hpp"
#include "skewpair/suite.hpp"

namespace sp = skewpair;
using sp::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> primes_from(const std::string& flag) {
  return flag.empty() ? sp::default_primes() : sp::parse_prime_list(flag);
}

// ---- report ---------------------------------------------------------------

struct ReportArgs {
  std::string primes;
  std::uint64_t seed = 42;
  std::string suite = "all";
  std::string format = "json";
  int trials = 0;
  int threads = 0;
  bool sequential = false;
  bool timings = false;
};

int cmd_report(const ReportArgs& a) {
  sp::SuiteOptions opt;
  opt.trials = a.trials;
  opt.threads = a.sequential ? 1 : a.threads;
  opt.timings = a.timings;
  bool ok = true;
  Json reports = Json::array();
  std::string text;
  for (int p : primes_from(a.primes)) {
    sp::SuiteReport r = sp::run_suite(p, a.seed, a.suite, opt);
    ok = ok && r.passed();
    if (a.format == "json") {
      reports.push_back(sp::report_to_json(r, a.timings));
    } else {
      text += sp::report_to_text(r, a.timings);
    }
  }
  if (a.format == "json") {
    Json out = Json::object();
    out["status"] = ok ? "pass" : "fail";
    out["reports"] = std::move(reports);
    print_json(out);
  } else {
    std::cout << text;
  }
  return ok ? kExitPass : kExitFail;
}

// ---- dims -----------------------------------------------------------------

struct DimsArgs {
  std::string primes;
  std::uint64_t seed = 42;
  int depth = 0;
  std::string base;
  std::string verify;
  std::string format = "json";
};

template <int P>
int dims_verify(const Json& cert) {
  auto [base, params] = sp::certificate_point_from_json<P>(cert);
  const sp::Index rank = sp::jacobian_rank_at<P>(base, params);
  const sp::Index expected = static_cast<sp::Index>(params.size()) * (P - 1);
  Json out = Json::object();
  out["p"] = P;
  out["depth"] = params.size();
  out["rank"] = rank;
  out["expected"] = expected;
  out["valid"] = rank == expected;
  print_json(out);
  return rank == expected ? kExitPass : kExitFail;
}

template <int P>
bool dims_for_prime(const DimsArgs& a, Json& certs, std::string& text) {
  if (P > 7) throw UsageError("dimension certificates are restricted to p <= 7");
  sp::Basis<P> base = a.base.empty() ? sp::Basis<P>::identity()
                                     : sp::basis_from_json<P>(sp::parse_json_text(read_input(a.base)));
  if (a.depth != 0 && (a.depth < 2 || a.depth > P + 1)) {
    throw UsageError("--depth must lie in [2, p+1]");
  }
  const int lo = a.depth ? a.depth : 2;
  const int hi = a.depth ? a.depth : P + 1;
  bool ok = true;
  for (int d = lo; d <= hi; ++d) {
    const std::uint64_t seed = sp::derive_seed(a.seed, "dims/p" + std::to_string(P) + "/depth" +
                                                           std::to_string(d));
    sp::DimCertificate<P> c = sp::orbit_jacobian_rank(sp::OrbitSpec<P>(base, d), seed);
    ok = ok && c.valid();
    certs.push_back(sp::certificate_to_json(c));
    std::ostringstream os;
    os << "p = " << P << "  depth " << d << "  rank " << c.rank << " / " << c.expected
       << (c.valid() ? "  valid" : "  UNDERSHOOT") << "  (attempts " << c.attempts << ")\n";
    text += os.str();
  }
  return ok;
}

int cmd_dims(const DimsArgs& a) {
  if (!a.verify.empty()) {
    Json cert = sp::parse_json_text(read_input(a.verify));
    return sp::dispatch_prime(sp::fixture_prime(cert),
                              [&](auto p) { return dims_verify<decltype(p)::value>(cert); });
  }
  Json certs = Json::array();
  std::string text;
  bool ok = true;
  for (int p : primes_from(a.primes)) {
    ok = sp::dispatch_prime(p, [&](auto prime) {
      return dims_for_prime<decltype(prime)::value>(a, certs, text);
    }) && ok;
  }
  if (a.format == "json") {
    print_json(certs);
  } else {
    std::cout << text;
  }
  return ok ? kExitPass : kExitFail;
}

// ---- lift -----------------------------------------------------------------

struct LiftArgs {
  std::string input = "-";
  bool unit = false;
  bool random = false;
  std::string primes;
  std::uint64_t seed = 42;
};

template <int P>
int lift_random(const LiftArgs& a) {
  sp::Rng rng(sp::derive_seed(a.seed, "lift/fixture"));
  sp::UnitSkewPair<P> q = sp::random_unit_pair<P>(rng, 2);
  print_json(sp::lift_to_json<P>(sp::DualMatP<P>(q.alpha, sp::random_matrix<P>(rng, P, P, 2, false)),
                                 sp::DualMatP<P>(q.beta, sp::random_matrix<P>(rng, P, P, 2, false))));
  return kExitPass;
}

template <int P>
int lift_fixture(const Json& j, bool unit) {
  sp::LiftProblem<P> prob = sp::lift_problem_from_json<P>(j);
  sp::LiftResult<P> res = unit ? sp::lift_unit_pair(prob) : sp::lift_skew_pair(prob);
  sp::DualMatP<P> d = res.alpha * res.beta - sp::Cyc<P>::rho() * (res.beta * res.alpha);
  Json out = sp::lift_to_json<P>(res.alpha, res.beta);
  out["x"] = sp::to_json<P>(res.x);
  out["y"] = sp::to_json<P>(res.y);
  out["residual_zero"] = sp::is_zero_matrix(d.body) && sp::is_zero_matrix(d.slope);
  print_json(out);
  return out["residual_zero"].get<bool>() ? kExitPass : kExitFail;
}

int cmd_lift(const LiftArgs& a) {
  if (a.random) {
    std::vector<int> ps = primes_from(a.primes);
    return sp::dispatch_prime(ps.front(), [&](auto p) { return lift_random<decltype(p)::value>(a); });
  }
  Json j = sp::parse_json_text(read_input(a.input));
  return sp::dispatch_prime(sp::fixture_prime(j),
                            [&](auto p) { return lift_fixture<decltype(p)::value>(j, a.unit); });
}

// ---- slot -----------------------------------------------------------------

struct SlotArgs {
  std::string input = "-";
  std::string move = "T";
};

// Fixture: {"p", "x", "y", "f": CycPoly, optional "alpha", "beta": grids}.
// Missing alpha/beta default to gamma and delta.
template <int P>
int slot_fixture(const Json& j, const std::string& move) {
  for (const char* key : {"x", "y", "f"}) {
    if (!j.contains(key)) throw sp::ParseError(std::string("slot fixture needs \"") + key + "\"");
  }
  sp::SymParams<P> params(sp::cyc_from_json<P>(j["x"], "x"), sp::cyc_from_json<P>(j["y"], "y"));
  auto elem = [&](const char* key, const sp::SymElem<P>& fallback) {
    return j.contains(key) ? sp::SymElem<P>(params, sp::mat_from_json<P>(j[key], key)) : fallback;
  };
  sp::SymPair<P> q{elem("alpha", sp::SymElem<P>::gamma(params)),
                   elem("beta", sp::SymElem<P>::delta(params))};
  const sp::CycPoly<P> f = sp::poly_from_json<P>(j["f"], "f");
  const bool t_move = move == "T";
  sp::SymPair<P> out = t_move ? sp::slot_move_T(q, f) : sp::slot_move_S(q, f);
  const sp::SymElem<P>& moved = t_move ? out.beta : out.alpha;
  const sp::SymElem<P>& before = t_move ? q.beta : q.alpha;
  Json o = Json::object();
  o["p"] = P;
  o["x"] = sp::to_json(params.x);
  o["y"] = sp::to_json(params.y);
  o["alpha"] = sp::to_json<P>(out.alpha.coeffs());
  o["beta"] = sp::to_json<P>(out.beta.coeffs());
  o["skew"] = sp::skew_commute(out.alpha, out.beta);
  sp::SymElem<P> before_pow = before.pow(P);
  sp::SymElem<P> after_pow = moved.pow(P);
  if (before_pow.is_scalar() && after_pow.is_scalar()) {
    const sp::Cyc<P> n = sp::slot_power_scalar(t_move ? q.alpha : q.beta, f);
    o["norm"] = sp::to_json(n);
    o["power_before"] = sp::to_json(before_pow(0, 0));
    o["power_after"] = sp::to_json(after_pow(0, 0));
    o["slot_law"] = after_pow(0, 0) == n * before_pow(0, 0);
  }
  print_json(o);
  bool ok = o["skew"].get<bool>() && (!o.contains("slot_law") || o["slot_law"].get<bool>());
  return ok ? kExitPass : kExitFail;
}

int cmd_slot(const SlotArgs& a) {
  if (a.move != "T" && a.move != "S") throw UsageError("--move must be T or S");
  Json j = sp::parse_json_text(read_input(a.input));
  return sp::dispatch_prime(sp::fixture_prime(j),
                            [&](auto p) { return slot_fixture<decltype(p)::value>(j, a.move); });
}

// ---- pairs-verify ---------------------------------------------------------

struct PairsArgs {
  std::string input = "-";
  std::string op = "verify";
};

template <int P>
int pairs_op(const Json& j, const std::string& op) {
  auto poly = [&]() {
    if (!j.contains("g")) throw sp::ParseError("operation " + op + " needs a polynomial field \"g\"");
    return sp::poly_from_json<P>(j["g"], "g");
  };
  if (op == "phi") {
    print_json(sp::pair_to_json<P>(sp::phi(sp::basis_from_json<P>(j))));
    return kExitPass;
  }
  if (op == "torus-t" || op == "torus-s") {
    sp::Basis<P> b = sp::basis_from_json<P>(j);
    print_json(sp::basis_to_json(op == "torus-t" ? sp::torus_T(b, poly()) : sp::torus_S(b, poly())));
    return kExitPass;
  }
  sp::SkewPair<P> q = sp::pair_from_json<P>(j);
  if (op == "verify") {
    Json out = Json::object();
    out["p"] = P;
    out["skew"] = q.is_valid();
    out["unit"] = out["skew"].get<bool>() && q.is_unit();
    print_json(out);
    return out["skew"].get<bool>() ? kExitPass : kExitFail;
  }
  if (!q.is_valid()) throw sp::InvalidPair("input is not an invertible skew pair");
  if (op == "phi-inverse") {
    print_json(sp::basis_to_json(sp::phi_inverse(q)));
  } else if (op == "act-t") {
    print_json(sp::pair_to_json<P>(sp::act_T_on_pair(q, poly())));
  } else if (op == "act-s") {
    print_json(sp::pair_to_json<P>(sp::act_S_on_pair(q, poly())));
  } else {
    throw UsageError("unknown operation " + op);
  }
  return kExitPass;
}

int cmd_pairs(const PairsArgs& a) {
  Json j = sp::parse_json_text(read_input(a.input));
  return sp::dispatch_prime(sp::fixture_prime(j),
                            [&](auto p) { return pairs_op<decltype(p)::value>(j, a.op); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of skew-commuting pairs over Q(rho_p)"};
  app.require_subcommand(1);

  ReportArgs report;
  auto* r = app.add_subcommand("report", "Run the verification suite and print a report");
  r->add_option("--p", report.primes, "Comma-separated primes (default: $SKEWPAIR_P or 3)");
  r->add_option("--seed", report.seed, "Root seed")->capture_default_str();
  r->add_option("--suite", report.suite, "all, check names or numbers, or groups")->capture_default_str();
  r->add_option("--format", report.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  r->add_option("--trials", report.trials, "Samples per randomized check (0: defaults)")
      ->check(CLI::NonNegativeNumber);
  r->add_option("--threads", report.threads, "Worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
  r->add_flag("--sequential", report.sequential, "Run checks one at a time");
  r->add_flag("--timings", report.timings, "Include wall times (output is then not reproducible)");

  DimsArgs dims;
  auto* d = app.add_subcommand("dims", "Jacobian-rank dimension certificates");
  d->add_option("--p", dims.primes, "Comma-separated primes, each <= 7");
  d->add_option("--seed", dims.seed)->capture_default_str();
  d->add_option("--depth", dims.depth, "Single depth in [2, p+1] (default: all)");
  d->add_option("--base", dims.base, "Basis fixture used as base point (default: identity)");
  d->add_option("--verify", dims.verify, "Recompute the rank of a certificate file");
  d->add_option("--format", dims.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  LiftArgs lift;
  auto* l = app.add_subcommand("lift", "Square-zero lifting of a lift fixture");
  l->add_option("input", lift.input, "Fixture file, - for stdin")->capture_default_str();
  l->add_flag("--unit", lift.unit, "Also normalize p-th powers to the identity");
  l->add_flag("--random", lift.random, "Print a random perturbed fixture instead");
  l->add_option("--p", lift.primes, "Prime for --random");
  l->add_option("--seed", lift.seed, "Seed for --random")->capture_default_str();

  SlotArgs slot;
  auto* s = app.add_subcommand("slot", "Common-slot move in the symbol algebra");
  s->add_option("input", slot.input, "Fixture file, - for stdin")->capture_default_str();
  s->add_option("--move", slot.move, "T: (a, f(a) b), S: (f(b) a, b)")->capture_default_str();

  PairsArgs pairs;
  auto* pv = app.add_subcommand("pairs-verify", "Pair and basis fixture operations");
  pv->add_option("input", pairs.input, "Fixture file, - for stdin")->capture_default_str();
  pv->add_option("--op", pairs.op)
      ->check(CLI::IsMember({"verify", "phi", "phi-inverse", "torus-t", "torus-s", "act-t", "act-s"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*r) return cmd_report(report);
    if (*d) return cmd_dims(dims);
    if (*l) return cmd_lift(lift);
    if (*s) return cmd_slot(slot);
    if (*pv) return cmd_pairs(pairs);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sp::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const sp::UnsupportedPrime& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
