#pragma once

// JSON fixtures. Rationals are always strings "n/d" (plain "n" and JSON
// integers are accepted on input). Shapes:
//   CycNum   ["n/d", ...]                  p-1 coordinates on 1, rho, ..., rho^{p-2}
//   CycPoly  [CycNum, ...]                 p coefficients of 1, x, ..., x^{p-1}
//   Mat      [[CycNum, ...], ...]          row-major
//   DualMat  {"body": Mat, "slope": Mat}
//   basis    {"p", "matrix"}
//   pair     {"p", "alpha", "beta"}
//   symbol   {"p", "x", "y", "coeffs"}
//   lift     {"p", "alpha": DualMat, "beta": DualMat}

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewpair/filtration.hpp"
#include "skewpair/lifting.hpp"
#include "skewpair/symbol.hpp"

namespace skewpair {

using Json = nlohmann::ordered_json;

/// Parses text, reporting failures as ParseError with line and column.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     (pos == std::string::npos ? what : what.substr(pos)));
  }
}

/// The "p" field of a fixture; throws ParseError or UnsupportedPrime.
inline int fixture_prime(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer()) {
    throw ParseError("fixture needs an integer field \"p\"");
  }
  long p = j["p"].get<long>();
  require_supported_prime(p);
  return static_cast<int>(p);
}

inline std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": expected a rational string");
  const std::string s = j.get<std::string>();
  mpq_class q;
  auto digits_ok = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError(where + ": malformed rational \"" + s + "\"");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError(where + ": zero denominator");
  q = mpq_class(n, d);
  q.canonicalize();
  return q;
}

template <int P>
Json to_json(const Cyc<P>& c) {
  Json out = Json::array();
  for (int i = 0; i < P - 1; ++i) out.push_back(rational_to_string(c.coord(i)));
  return out;
}

template <int P>
Cyc<P> cyc_from_json(const Json& j, const std::string& where = "value") {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(P - 1)) {
    throw ParseError(where + ": expected an array of " + std::to_string(P - 1) + " rationals");
  }
  std::array<mpq_class, P - 1> coords;
  for (int i = 0; i < P - 1; ++i) {
    coords[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  }
  return Cyc<P>::from_coords(coords);
}

template <int P>
Json to_json(const CycPoly<P>& f) {
  Json out = Json::array();
  for (int i = 0; i < P; ++i) out.push_back(to_json(f[i]));
  return out;
}

template <int P>
CycPoly<P> poly_from_json(const Json& j, const std::string& where = "poly") {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(P)) {
    throw ParseError(where + ": expected an array of " + std::to_string(P) + " coefficients");
  }
  CycPoly<P> f;
  for (int i = 0; i < P; ++i) f[i] = cyc_from_json<P>(j[i], where + "[" + std::to_string(i) + "]");
  return f;
}

template <int P>
Json to_json(const Mat<P>& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

/// Parses a rectangular matrix; `n` > 0 additionally forces an n x n shape.
template <int P>
Mat<P> mat_from_json(const Json& j, const std::string& where = "matrix", Index n = P) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError(where + ": expected an array of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  if (n > 0 && (rows != n || cols != n)) {
    throw ParseError(where + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
                     " matrix");
  }
  Mat<P> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Index>(j[i].size()) != cols) {
      throw ParseError(where + "[" + std::to_string(i) + "]: ragged row");
    }
    for (Index k = 0; k < cols; ++k) {
      m(i, k) = cyc_from_json<P>(j[i][k], where + "[" + std::to_string(i) + "][" +
                                              std::to_string(k) + "]");
    }
  }
  return m;
}

template <int P>
Json to_json(const DualMatP<P>& m) {
  Json out = Json::object();
  out["body"] = to_json<P>(m.body);
  out["slope"] = to_json<P>(m.slope);
  return out;
}

template <int P>
DualMatP<P> dual_from_json(const Json& j, const std::string& where = "dual") {
  if (!j.is_object() || !j.contains("body") || !j.contains("slope")) {
    throw ParseError(where + ": expected {\"body\", \"slope\"}");
  }
  return DualMatP<P>(mat_from_json<P>(j["body"], where + ".body"),
                     mat_from_json<P>(j["slope"], where + ".slope"));
}

template <int P>
Json basis_to_json(const Basis<P>& b) {
  Json out = Json::object();
  out["p"] = P;
  out["matrix"] = to_json<P>(b.matrix());
  return out;
}

template <int P>
Basis<P> basis_from_json(const Json& j) {
  if (fixture_prime(j) != P) throw ParseError("fixture prime mismatch");
  if (!j.contains("matrix")) throw ParseError("basis fixture needs \"matrix\"");
  return Basis<P>(mat_from_json<P>(j["matrix"], "matrix"));
}

template <int P>
Json pair_to_json(const SkewPair<P>& q) {
  Json out = Json::object();
  out["p"] = P;
  out["alpha"] = to_json<P>(q.alpha);
  out["beta"] = to_json<P>(q.beta);
  return out;
}

/// Raw matrices of a pair fixture; validation is left to the caller.
template <int P>
SkewPair<P> pair_from_json(const Json& j) {
  if (fixture_prime(j) != P) throw ParseError("fixture prime mismatch");
  if (!j.contains("alpha") || !j.contains("beta")) {
    throw ParseError("pair fixture needs \"alpha\" and \"beta\"");
  }
  return SkewPair<P>{mat_from_json<P>(j["alpha"], "alpha"), mat_from_json<P>(j["beta"], "beta")};
}

template <int P>
Json symbol_to_json(const SymElem<P>& a) {
  Json out = Json::object();
  out["p"] = P;
  out["x"] = to_json(a.params().x);
  out["y"] = to_json(a.params().y);
  out["coeffs"] = to_json<P>(a.coeffs());
  return out;
}

template <int P>
SymElem<P> symbol_from_json(const Json& j) {
  if (fixture_prime(j) != P) throw ParseError("fixture prime mismatch");
  for (const char* key : {"x", "y", "coeffs"}) {
    if (!j.contains(key)) throw ParseError(std::string("symbol fixture needs \"") + key + "\"");
  }
  SymParams<P> params(cyc_from_json<P>(j["x"], "x"), cyc_from_json<P>(j["y"], "y"));
  return SymElem<P>(params, mat_from_json<P>(j["coeffs"], "coeffs"));
}

template <int P>
Json lift_to_json(const DualMatP<P>& alpha, const DualMatP<P>& beta) {
  Json out = Json::object();
  out["p"] = P;
  out["alpha"] = to_json<P>(alpha);
  out["beta"] = to_json<P>(beta);
  return out;
}

template <int P>
LiftProblem<P> lift_problem_from_json(const Json& j) {
  if (fixture_prime(j) != P) throw ParseError("fixture prime mismatch");
  if (!j.contains("alpha") || !j.contains("beta")) {
    throw ParseError("lift fixture needs \"alpha\" and \"beta\"");
  }
  return LiftProblem<P>(dual_from_json<P>(j["alpha"], "alpha"), dual_from_json<P>(j["beta"], "beta"));
}

template <int P>
Json certificate_to_json(const DimCertificate<P>& c) {
  Json out = Json::object();
  out["p"] = P;
  out["depth"] = c.depth;
  out["rank"] = c.rank;
  out["expected"] = c.expected;
  out["valid"] = c.valid();
  out["seed"] = std::to_string(c.seed);
  out["attempts"] = c.attempts;
  Json params = Json::array();
  for (const auto& g : c.params) params.push_back(to_json(g));
  out["params"] = std::move(params);
  out["base"] = to_json<P>(c.base);
  return out;
}

/// Parameters and base point of a certificate, enough to recompute its rank.
template <int P>
std::pair<Mat<P>, std::vector<CycPoly<P>>> certificate_point_from_json(const Json& j) {
  if (fixture_prime(j) != P) throw ParseError("fixture prime mismatch");
  if (!j.contains("params") || !j["params"].is_array() || !j.contains("base")) {
    throw ParseError("certificate needs \"params\" and \"base\"");
  }
  std::vector<CycPoly<P>> params;
  for (std::size_t k = 0; k < j["params"].size(); ++k) {
    params.push_back(poly_from_json<P>(j["params"][k], "params[" + std::to_string(k) + "]"));
  }
  return {mat_from_json<P>(j["base"], "base"), params};
}

}  // namespace skewpair
