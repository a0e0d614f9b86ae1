#pragma once

// First-order deformations of skew pairs over K[eps]/(eps^2).
//
// Given alpha = A + eps A1 and beta = B + eps B1 with AB = rho BA, write the
// defect alpha beta - rho beta alpha = eps Z1. Adjusting by
// alpha' = alpha (1 + eps x), beta' = beta (1 + eps y) changes the defect by
// AB L(x, y) with
//   L(x, y) = B^{-1} x B - x + y - A^{-1} y A,
// so a lift exists iff -(AB)^{-1} Z1 lies in the image of L, which is the
// trace-zero matrices.

#include <string>
#include <vector>

#include "skewpair/pairs.hpp"

namespace skewpair {

template <int P>
using DualMatP = DualMat<Cyc<P>>;

/// The linear map (x, y) -> L(x, y) as a p^2 x 2p^2 matrix on row-major
/// flattenings; x occupies the first p^2 columns.
template <int P>
Mat<P> phi_adjust_map(const Mat<P>& alpha, const Mat<P>& beta) {
  const int n = P * P;
  const Mat<P> ai = inverse(alpha);
  const Mat<P> bi = inverse(beta);
  Mat<P> out(n, 2 * n);
  for (int a = 0; a < P; ++a) {
    for (int b = 0; b < P; ++b) {
      Mat<P> e = Mat<P>::Zero(P, P);
      e(a, b) = Cyc<P>(1);
      Mat<P> lx = mat_mul(mat_mul(bi, e), beta) - e;
      Mat<P> ly = e - mat_mul(mat_mul(ai, e), alpha);
      out.col(a * P + b) = flatten<Cyc<P>>(lx);
      out.col(n + a * P + b) = flatten<Cyc<P>>(ly);
    }
  }
  return out;
}

template <int P>
struct LiftProblem {
  DualMatP<P> alpha;
  DualMatP<P> beta;

  /// Validating constructor: the bodies must form a skew pair. Throws InvalidPair.
  LiftProblem(DualMatP<P> a, DualMatP<P> b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.rows() != P || alpha.cols() != P || beta.rows() != P || beta.cols() != P) {
      throw InvalidPair("lift problem matrices must be p x p");
    }
    if (!SkewPair<P>{alpha.body, beta.body}.is_valid()) {
      throw InvalidPair("bodies do not form an invertible skew pair");
    }
  }

  /// alpha beta - rho beta alpha; its body vanishes.
  DualMatP<P> defect() const { return alpha * beta - Cyc<P>::rho() * (beta * alpha); }

  /// (AB)^{-1} Z1, the defect moved into the target of L.
  Mat<P> normalized_defect() const {
    return mat_mul(inverse(mat_mul(alpha.body, beta.body)), defect().slope);
  }
};

template <int P>
struct LiftResult {
  DualMatP<P> alpha;
  DualMatP<P> beta;
  Mat<P> x;
  Mat<P> y;
};

/// Solves L(x, y) = -(AB)^{-1} Z1 and returns the adjusted pair, which
/// skew-commutes exactly over K[eps]. Throws NoSolution.
template <int P>
LiftResult<P> lift_skew_pair(const LiftProblem<P>& prob) {
  const int n = P * P;
  const Mat<P>& a = prob.alpha.body;
  const Mat<P>& b = prob.beta.body;
  Mat<P> w = prob.normalized_defect();
  if (is_zero_matrix(w)) {
    return LiftResult<P>{prob.alpha, prob.beta, Mat<P>::Zero(P, P), Mat<P>::Zero(P, P)};
  }
  if (!trace(w).is_zero()) {
    throw NoSolution("normalized defect has nonzero trace " + trace(w).to_string());
  }
  auto sol = solve(phi_adjust_map(a, b), Vec<P>(-flatten<Cyc<P>>(w)));
  if (!sol) throw NoSolution("adjustment equation has no solution");
  Mat<P> x = unflatten<Cyc<P>>(sol->head(n), P, P);
  Mat<P> y = unflatten<Cyc<P>>(sol->tail(n), P, P);
  LiftResult<P> out{DualMatP<P>(a, Mat<P>(prob.alpha.slope + mat_mul(a, x))),
                    DualMatP<P>(b, Mat<P>(prob.beta.slope + mat_mul(b, y))), x, y};
  DualMatP<P> check = out.alpha * out.beta - Cyc<P>::rho() * (out.beta * out.alpha);
  if (!is_zero_matrix(check.slope) || !is_zero_matrix(check.body)) {
    throw InternalError("lifted pair does not skew-commute");
  }
  return out;
}

/// Lift of a unit pair: after the skew lift, alpha'^p = I + eps c I with c
/// central, and alpha'' = alpha' (1 - eps c / p) has p-th power exactly I.
/// Same for beta. Throws InvalidPair if the bodies are not a unit pair.
template <int P>
LiftResult<P> lift_unit_pair(const LiftProblem<P>& prob) {
  if (!SkewPair<P>{prob.alpha.body, prob.beta.body}.is_unit()) {
    throw InvalidPair("bodies do not satisfy alpha^p = beta^p = I");
  }
  LiftResult<P> out = lift_skew_pair(prob);
  const Cyc<P> inv_p(mpq_class(1, P));
  auto normalize = [&](DualMatP<P>& m) {
    DualMatP<P> pw = m.pow(P);
    if (!is_zero_matrix(Mat<P>(pw.body - Mat<P>::Identity(P, P)))) {
      throw InternalError("body p-th power is not the identity");
    }
    const Cyc<P> c = pw.slope(0, 0);
    if (pw.slope != c * Mat<P>::Identity(P, P)) throw NotScalar("p-th power slope is not scalar");
    m = DualMatP<P>(m.body, Mat<P>(m.slope - (c * inv_p) * m.body));
  };
  normalize(out.alpha);
  normalize(out.beta);
  const DualMatP<P> id = DualMatP<P>::identity(P);
  if (out.alpha.pow(P) != id || out.beta.pow(P) != id) {
    throw InternalError("unit lift failed to normalize p-th powers");
  }
  return out;
}

/// Characteristic polynomials of both members of a pair, and whether each
/// has collapsed to t^p - c with c the scalar p-th power.
template <int P>
struct CharpolyCollapse {
  std::vector<Cyc<P>> alpha_charpoly;
  std::vector<Cyc<P>> beta_charpoly;
  bool alpha_collapsed = false;
  bool beta_collapsed = false;

  bool passed() const { return alpha_collapsed && beta_collapsed; }
};

namespace detail {

template <int P>
bool is_collapsed(const Mat<P>& m, const std::vector<Cyc<P>>& cp) {
  Mat<P> pw = mat_pow(m, P);
  const Cyc<P> c = pw(0, 0);
  if (pw != c * Mat<P>::Identity(P, P)) return false;
  if (static_cast<int>(cp.size()) != P + 1 || !cp[P].is_one() || cp[0] != -c) return false;
  for (int k = 1; k < P; ++k) {
    if (!cp[k].is_zero()) return false;
  }
  return true;
}

}  // namespace detail

template <int P>
CharpolyCollapse<P> charpoly_collapse_check(const SkewPair<P>& q) {
  CharpolyCollapse<P> out;
  out.alpha_charpoly = charpoly(q.alpha);
  out.beta_charpoly = charpoly(q.beta);
  out.alpha_collapsed = detail::is_collapsed(q.alpha, out.alpha_charpoly);
  out.beta_collapsed = detail::is_collapsed(q.beta, out.beta_charpoly);
  return out;
}

/// R_1 = (rho^{ij} - 1) for 1 <= i, j <= p-1.
template <int P>
Mat<P> r1_matrix() {
  Mat<P> m(P - 1, P - 1);
  for (int i = 1; i < P; ++i) {
    for (int j = 1; j < P; ++j) {
      m(i - 1, j - 1) = Cyc<P>::rho_pow(static_cast<long>(i) * j) - Cyc<P>(1);
    }
  }
  return m;
}

}  // namespace skewpair
