#pragma once

// The symbol algebra (x, y)_p over K, generated by gamma, delta with
// gamma^p = x, delta^p = y and gamma delta = rho delta gamma. Elements are
// p x p coefficient grids on the basis gamma^i delta^j. Multiplication uses
//   delta^j gamma^k = rho^{-jk} gamma^k delta^j
// and wraps exponents i + k >= p by a factor x (resp. y).

#include <utility>

#include "skewpair/cycpoly.hpp"
#include "skewpair/linalg.hpp"

namespace skewpair {

template <int P>
struct SymParams {
  Cyc<P> x;
  Cyc<P> y;

  SymParams(Cyc<P> x_, Cyc<P> y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x.is_zero() || y.is_zero()) throw ParamMismatch("symbol parameters must be nonzero");
  }

  friend bool operator==(const SymParams& a, const SymParams& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const SymParams& a, const SymParams& b) { return !(a == b); }
};

template <int P>
class SymElem {
 public:
  SymElem(SymParams<P> params, Mat<P> coeffs)
      : params_(std::move(params)), c_(std::move(coeffs)) {
    if (c_.rows() != P || c_.cols() != P) throw ParamMismatch("coefficient grid must be p x p");
  }

  static SymElem zero(const SymParams<P>& params) { return SymElem(params, Mat<P>::Zero(P, P)); }

  static SymElem scalar(const SymParams<P>& params, const Cyc<P>& c) {
    SymElem e = zero(params);
    e.c_(0, 0) = c;
    return e;
  }

  static SymElem one(const SymParams<P>& params) { return scalar(params, Cyc<P>(1)); }

  /// c * gamma^i delta^j, exponents in [0, p).
  static SymElem monomial(const SymParams<P>& params, int i, int j,
                          const Cyc<P>& c = Cyc<P>(1)) {
    SymElem e = zero(params);
    e.c_(i, j) = c;
    return e;
  }

  static SymElem gamma(const SymParams<P>& params) { return monomial(params, 1, 0); }
  static SymElem delta(const SymParams<P>& params) { return monomial(params, 0, 1); }

  const SymParams<P>& params() const { return params_; }
  const Mat<P>& coeffs() const { return c_; }
  const Cyc<P>& operator()(int i, int j) const { return c_(i, j); }

  /// Supported at (0, 0) only.
  bool is_scalar() const {
    for (int i = 0; i < P; ++i) {
      for (int j = 0; j < P; ++j) {
        if ((i || j) && !c_(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  friend bool operator==(const SymElem& a, const SymElem& b) {
    return a.params_ == b.params_ && a.c_ == b.c_;
  }
  friend bool operator!=(const SymElem& a, const SymElem& b) { return !(a == b); }

  friend SymElem operator+(const SymElem& a, const SymElem& b) {
    check_params(a, b);
    return SymElem(a.params_, a.c_ + b.c_);
  }
  friend SymElem operator-(const SymElem& a, const SymElem& b) {
    check_params(a, b);
    return SymElem(a.params_, a.c_ - b.c_);
  }
  friend SymElem operator*(const Cyc<P>& s, const SymElem& a) {
    return SymElem(a.params_, s * a.c_);
  }

  /// (gamma^a delta^b)(gamma^c delta^d) = rho^{-bc} gamma^{a+c} delta^{b+d}.
  friend SymElem operator*(const SymElem& u, const SymElem& v) {
    check_params(u, v);
    Mat<P> out = Mat<P>::Zero(P, P);
    const Cyc<P>& x = u.params_.x;
    const Cyc<P>& y = u.params_.y;
    for (int a = 0; a < P; ++a) {
      for (int b = 0; b < P; ++b) {
        if (u.c_(a, b).is_zero()) continue;
        for (int c = 0; c < P; ++c) {
          for (int d = 0; d < P; ++d) {
            if (v.c_(c, d).is_zero()) continue;
            Cyc<P> term = u.c_(a, b) * v.c_(c, d);
            if (b * c % P != 0) term = term * Cyc<P>::rho_pow(-static_cast<long>(b) * c);
            int i = a + c, j = b + d;
            if (i >= P) {
              i -= P;
              term = term * x;
            }
            if (j >= P) {
              j -= P;
              term = term * y;
            }
            out(i, j) += term;
          }
        }
      }
    }
    return SymElem(u.params_, std::move(out));
  }

  SymElem pow(long e) const {
    SymElem result = one(params_);
    SymElem base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

 private:
  static void check_params(const SymElem& a, const SymElem& b) {
    if (a.params_ != b.params_) throw ParamMismatch("elements of different symbol algebras");
  }

  SymParams<P> params_;
  Mat<P> c_;
};

/// Reduced trace: p * c_00.
template <int P>
Cyc<P> sym_trace(const SymElem<P>& a) {
  return Cyc<P>(static_cast<long>(P)) * a(0, 0);
}

/// Matrix of left multiplication on the coefficient space, basis element
/// gamma^i delta^j at index i * p + j.
template <int P>
Mat<P> regular_rep(const SymElem<P>& a) {
  const int n = P * P;
  Mat<P> m(n, n);
  for (int c = 0; c < P; ++c) {
    for (int d = 0; d < P; ++d) {
      SymElem<P> col = a * SymElem<P>::monomial(a.params(), c, d);
      for (int i = 0; i < P; ++i) {
        for (int j = 0; j < P; ++j) m(i * P + j, c * P + d) = col(i, j);
      }
    }
  }
  return m;
}

template <int P>
bool is_invertible(const SymElem<P>& a) {
  return !determinant(regular_rep(a)).is_zero();
}

/// Two-sided inverse; throws Singular if a is not a unit.
template <int P>
SymElem<P> inverse(const SymElem<P>& a) {
  Vec<P> e = Vec<P>::Zero(P * P);
  e(0) = Cyc<P>(1);
  auto sol = solve(regular_rep(a), e);
  if (!sol) throw Singular("symbol algebra element is not invertible");
  Mat<P> grid(P, P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) grid(i, j) = (*sol)(i * P + j);
  }
  SymElem<P> out(a.params(), grid);
  if (a * out != SymElem<P>::one(a.params())) throw Singular("symbol algebra element is not invertible");
  return out;
}

/// f(a) = sum_k f_k a^k with f read as a polynomial of degree < p.
template <int P>
SymElem<P> eval_at(const CycPoly<P>& f, const SymElem<P>& a) {
  SymElem<P> acc = SymElem<P>::zero(a.params());
  for (int k = P - 1; k >= 0; --k) {
    acc = acc * a + SymElem<P>::scalar(a.params(), f[k]);
  }
  return acc;
}

template <int P>
bool skew_commute(const SymElem<P>& a, const SymElem<P>& b) {
  return a * b == Cyc<P>::rho() * (b * a);
}

template <int P>
struct SymPair {
  SymElem<P> alpha;
  SymElem<P> beta;
};

/// (alpha, beta) -> (alpha, f(alpha) beta). Throws SlotSingular.
template <int P>
SymPair<P> slot_move_T(const SymPair<P>& q, const CycPoly<P>& f) {
  if (!skew_commute(q.alpha, q.beta)) throw InvalidPair("pair does not skew-commute");
  SymElem<P> fa = eval_at(f, q.alpha);
  if (!is_invertible(fa)) throw SlotSingular("f(alpha) is not invertible");
  return SymPair<P>{q.alpha, fa * q.beta};
}

/// (alpha, beta) -> (f(beta) alpha, beta). Throws SlotSingular.
template <int P>
SymPair<P> slot_move_S(const SymPair<P>& q, const CycPoly<P>& f) {
  if (!skew_commute(q.alpha, q.beta)) throw InvalidPair("pair does not skew-commute");
  SymElem<P> fb = eval_at(f, q.beta);
  if (!is_invertible(fb)) throw SlotSingular("f(beta) is not invertible");
  return SymPair<P>{fb * q.alpha, q.beta};
}

/// N = prod_{i=0}^{p-1} f(rho^i alpha), the norm of f(alpha) down to the
/// center. Throws NotScalar unless alpha^p and the product are scalars.
template <int P>
Cyc<P> slot_power_scalar(const SymElem<P>& alpha, const CycPoly<P>& f) {
  if (!alpha.pow(P).is_scalar()) throw NotScalar("alpha^p is not central");
  if (!is_invertible(eval_at(f, alpha))) throw SlotSingular("f(alpha) is not invertible");
  SymElem<P> prod = SymElem<P>::one(alpha.params());
  for (int i = 0; i < P; ++i) {
    prod = prod * eval_at(f, Cyc<P>::rho_pow(i) * alpha);
  }
  if (!prod.is_scalar()) throw NotScalar("norm product is not a scalar");
  return prod(0, 0);
}

}  // namespace skewpair
