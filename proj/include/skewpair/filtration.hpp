#pragma once

// The tower B_2 c B_3 c ... c B_{p+1} of the basis variety. B_2 = (A T) S and
// each further step multiplies by the other torus, so a depth-i point is
//   A * F_1 * F_2 * ... * F_i,   F_odd = T_{Theta(g)},  F_even = S_g.
// The generic dimension of B_i is certified by the rank of the orbit map's
// Jacobian at a random rational point.

#include <cstdint>
#include <string>
#include <vector>

#include "skewpair/pairs.hpp"
#include "skewpair/random.hpp"

namespace skewpair {

enum class TorusKind { kT, kS };

/// Factor m (0-based) of the alternating product.
inline TorusKind factor_kind(int m) { return m % 2 == 0 ? TorusKind::kT : TorusKind::kS; }

template <int P>
Mat<P> torus_factor(TorusKind kind, const CycPoly<P>& g) {
  return kind == TorusKind::kT ? torus_t_matrix(g) : circulant(g);
}

template <int P>
struct OrbitSpec {
  Basis<P> base;
  int depth;

  OrbitSpec(Basis<P> b, int d) : base(std::move(b)), depth(d) {
    if (depth < 2 || depth > P + 1) {
      throw InternalError("orbit depth must lie in [2, p+1], got " + std::to_string(depth));
    }
  }
};

template <int P>
struct DimCertificate {
  int p = P;
  int depth = 0;
  Index rank = 0;
  Index expected = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::vector<CycPoly<P>> params;
  Mat<P> base;

  bool valid() const { return rank == expected; }
};

/// Raw orbit map: base * F_1 * ... * F_n for n = params.size().
template <int P>
Mat<P> orbit_matrix(const Mat<P>& base, const std::vector<CycPoly<P>>& params) {
  Mat<P> m = base;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (!is_invertible(params[k])) throw NotInvertible("orbit parameter " + std::to_string(k));
    m = mat_mul(m, torus_factor(factor_kind(static_cast<int>(k)), params[k]));
  }
  return m;
}

template <int P>
Basis<P> orbit_point(const OrbitSpec<P>& spec, const std::vector<CycPoly<P>>& params) {
  if (static_cast<int>(params.size()) != spec.depth) {
    throw InternalError("orbit_point needs one parameter per torus factor");
  }
  return Basis<P>(orbit_matrix(spec.base.matrix(), params));
}

/// Rank of { M^{-1} dM/dc } together with the identity, minus one, at the
/// given parameters. Each factor is linear in its p coefficients, so the
/// partial in coefficient k of factor m replaces F_m with F_m(x^k).
template <int P>
Index jacobian_rank_at(const Mat<P>& base, const std::vector<CycPoly<P>>& params) {
  const std::size_t n = params.size();
  std::vector<Mat<P>> factors;
  for (std::size_t m = 0; m < n; ++m) {
    factors.push_back(torus_factor(factor_kind(static_cast<int>(m)), params[m]));
  }
  // suffix[m] = F_m ... F_{n-1}
  std::vector<Mat<P>> suffix(n + 1, Mat<P>::Identity(P, P));
  for (std::size_t m = n; m-- > 0;) suffix[m] = mat_mul(factors[m], suffix[m + 1]);
  const Mat<P> point = mat_mul(base, suffix[0]);
  const Mat<P> point_inv = inverse(point);

  IncrementalSpan<Cyc<P>> span(P * P);
  span.insert(flatten<Cyc<P>>(Mat<P>::Identity(P, P)));
  Mat<P> prefix = base;
  for (std::size_t m = 0; m < n; ++m) {
    const TorusKind kind = factor_kind(static_cast<int>(m));
    for (int k = 0; k < P; ++k) {
      Mat<P> partial = mat_mul(mat_mul(prefix, torus_factor(kind, CycPoly<P>::monomial(k))),
                               suffix[m + 1]);
      span.insert(flatten<Cyc<P>>(mat_mul(point_inv, partial)));
    }
    prefix = mat_mul(prefix, factors[m]);
  }
  return span.size() - 1;
}

/// Draws parameters with integer coefficients in [-9, 9] (rejecting
/// non-invertible ones) and computes the Jacobian rank; retries up to five
/// times with fresh draws if the rank undershoots.
template <int P>
DimCertificate<P> orbit_jacobian_rank(const OrbitSpec<P>& spec, std::uint64_t seed) {
  constexpr int kMaxAttempts = 6;
  Rng rng(seed);
  DimCertificate<P> cert;
  cert.depth = spec.depth;
  cert.expected = static_cast<Index>(spec.depth) * (P - 1);
  cert.seed = seed;
  cert.base = spec.base.matrix();
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::vector<CycPoly<P>> params;
    for (int k = 0; k < spec.depth; ++k) params.push_back(random_invertible_poly<P>(rng, 9, false));
    Index r = jacobian_rank_at(spec.base.matrix(), params);
    if (attempt == 1 || r > cert.rank) {
      cert.rank = r;
      cert.params = params;
    }
    cert.attempts = attempt;
    if (cert.valid()) break;
  }
  return cert;
}

/// Exact matrix identities relating sigma, r and the two tori.
struct StabilizerReport {
  std::vector<std::pair<std::string, bool>> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.second) return false;
    }
    return true;
  }
};

template <int P>
StabilizerReport stabilizer_identity_checks(std::uint64_t seed, int trials = 20) {
  StabilizerReport report;
  Rng rng(seed);
  const Mat<P> id = Mat<P>::Identity(P, P);
  const Mat<P> r = r_diag<P>();
  const Mat<P> r_inv = inverse(r);
  const Mat<P> sigma = sigma_matrix<P>();
  const Mat<P> sigma_inv = inverse(sigma);

  // r is T at g = x, since Theta(x) = (1, rho, ..., rho^{p-1}).
  std::array<Cyc<P>, P> r_entries;
  for (int i = 0; i < P; ++i) r_entries[i] = Cyc<P>::rho_pow(i);
  CycPoly<P> g_r = theta_inv<P>(r_entries);
  report.checks.emplace_back("r_in_T", g_r == CycPoly<P>::monomial(1) && torus_t_matrix(g_r) == r);
  report.checks.emplace_back("sigma_in_S", circulant(CycPoly<P>::monomial(P - 1)) == sigma);
  report.checks.emplace_back("r_order_p", mat_pow(r, P) == id);
  report.checks.emplace_back("sigma_order_p", mat_pow(sigma, P) == id);

  bool r_normalizes_s = true, sigma_normalizes_t = true, diag_shift = true, fiber = true;
  for (int t = 0; t < trials; ++t) {
    CycPoly<P> g = random_invertible_poly<P>(rng, 5);
    // r^{-1} S_g r = S_{tau g}; in the w-basis this cyclically shifts Theta(g).
    r_normalizes_s = r_normalizes_s &&
                     mat_mul(mat_mul(r_inv, circulant(g)), r) == circulant(tau(g)) &&
                     theta_vector(tau(g)) == shift_vector<P>(theta_vector(g));
    // sigma^{-1} T_z sigma = T_{sigma(z)}.
    Vec<P> d = theta_vector(g);
    Mat<P> conj = mat_mul(mat_mul(sigma_inv, diagonal<Cyc<P>>(d)), sigma);
    diag_shift = diag_shift && conj == diagonal<Cyc<P>>(shift_vector<P>(d));
    sigma_normalizes_t = sigma_normalizes_t && conj == torus_t_matrix(tau(g));

    // T_g and T_{g'} agree projectively iff Theta(g)/Theta(g') is constant.
    Cyc<P> c = random_nonzero_cyc<P>(rng, 5);
    CycPoly<P> h = random_invertible_poly<P>(rng, 5);
    bool scaled_equal = projectively_equal(torus_t_matrix(g), torus_t_matrix(c * g));
    bool twisted_differs = h.is_constant() ||
                           !projectively_equal(torus_t_matrix(g), torus_t_matrix(g * h));
    // Multiplying by x^i moves along the <r>-fiber: T_{x^i g} = T_g r^i.
    long i = rng.uniform(1, P - 1);
    bool r_fiber = torus_t_matrix(CycPoly<P>::monomial(i) * g) ==
                       mat_mul(torus_t_matrix(g), mat_pow(r, i)) &&
                   !projectively_equal(torus_t_matrix(g), torus_t_matrix(CycPoly<P>::monomial(i) * g));
    fiber = fiber && scaled_equal && twisted_differs && r_fiber;
  }
  report.checks.emplace_back("r_normalizes_S", r_normalizes_s);
  report.checks.emplace_back("sigma_conjugation_shifts_diagonal", diag_shift);
  report.checks.emplace_back("sigma_normalizes_T", sigma_normalizes_t);
  report.checks.emplace_back("r_fiber_identity", fiber);
  return report;
}

}  // namespace skewpair
