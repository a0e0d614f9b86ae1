#pragma once

// The ring K[x]/(x^p - 1) carrying both toral actions.
//
// tau(x) = rho^{-1} x and tau'(x) = rho x are the two automorphisms; the ring
// norm n(f) = prod_i tau^i(f) is tau-invariant, hence constant. Theta is the
// evaluation isomorphism onto K^p at the p-th roots of unity, and division is
// done through Theta (componentwise).

#include <array>
#include <string>

#include "skewpair/cyclotomic.hpp"
#include "skewpair/linalg.hpp"

namespace skewpair {

template <int P>
class CycPoly {
 public:
  using Scalar = Cyc<P>;
  using Coeffs = std::array<Scalar, P>;

  CycPoly() = default;
  explicit CycPoly(Coeffs coeffs) : c_(std::move(coeffs)) {}

  static CycPoly constant(const Scalar& c) {
    CycPoly f;
    f.c_[0] = c;
    return f;
  }
  static CycPoly one() { return constant(Scalar(1)); }

  /// The monomial c * x^k, exponent taken mod p.
  static CycPoly monomial(long k, const Scalar& c = Scalar(1)) {
    CycPoly f;
    f.c_[mod_floor(k, P)] = c;
    return f;
  }

  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  bool is_constant() const {
    for (int i = 1; i < P; ++i) {
      if (!c_[i].is_zero()) return false;
    }
    return true;
  }

  /// Number of nonzero coefficients.
  int support_size() const {
    int n = 0;
    for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
    return n;
  }

  friend bool operator==(const CycPoly& a, const CycPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycPoly& a, const CycPoly& b) { return !(a == b); }

  friend CycPoly operator+(const CycPoly& a, const CycPoly& b) {
    CycPoly out;
    for (int i = 0; i < P; ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend CycPoly operator-(const CycPoly& a, const CycPoly& b) {
    CycPoly out;
    for (int i = 0; i < P; ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend CycPoly operator*(const Scalar& s, const CycPoly& a) {
    CycPoly out;
    for (int i = 0; i < P; ++i) out.c_[i] = s * a.c_[i];
    return out;
  }

  /// Product with cyclic reduction x^p = 1.
  friend CycPoly operator*(const CycPoly& a, const CycPoly& b) {
    CycPoly out;
    for (int i = 0; i < P; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < P; ++j) {
        if (b.c_[j].is_zero()) continue;
        out.c_[(i + j) % P] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  /// f(x) -> f(rho^k x); tau is k = -1, tau' is k = 1.
  CycPoly twist(long k) const {
    CycPoly out;
    for (int i = 0; i < P; ++i) {
      if (!c_[i].is_zero()) out.c_[i] = c_[i] * Scalar::rho_pow(k * i);
    }
    return out;
  }

  /// f evaluated at a field element.
  Scalar eval(const Scalar& t) const {
    Scalar acc(0);
    for (int i = P - 1; i >= 0; --i) acc = acc * t + c_[i];
    return acc;
  }

  /// f evaluated at a square matrix; meaningful in the quotient ring only when
  /// m^p = I (otherwise this is the degree < p polynomial evaluated at m).
  Mat<P> eval(const Mat<P>& m) const {
    std::vector<Scalar> coeffs(c_.begin(), c_.end());
    return eval_poly_at(coeffs, m);
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < P; ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].to_string() + ")";
      if (i > 0) out += i == 1 ? "*x" : "*x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Coeffs c_{};
};

template <int P>
CycPoly<P> tau(const CycPoly<P>& f) {
  return f.twist(-1);
}

template <int P>
CycPoly<P> tau_prime(const CycPoly<P>& f) {
  return f.twist(1);
}

/// Theta(f) = (f(1), f(rho), ..., f(rho^{p-1})).
template <int P>
std::array<Cyc<P>, P> theta(const CycPoly<P>& f) {
  std::array<Cyc<P>, P> out;
  for (int k = 0; k < P; ++k) {
    Cyc<P> acc(0);
    for (int i = 0; i < P; ++i) {
      if (!f[i].is_zero()) acc += f[i] * Cyc<P>::rho_pow(static_cast<long>(i) * k);
    }
    out[k] = acc;
  }
  return out;
}

/// Inverse of theta: f_i = (1/p) sum_k rho^{-ik} v_k.
template <int P>
CycPoly<P> theta_inv(const std::array<Cyc<P>, P>& v) {
  CycPoly<P> f;
  const Cyc<P> inv_p(mpq_class(1, P));
  for (int i = 0; i < P; ++i) {
    Cyc<P> acc(0);
    for (int k = 0; k < P; ++k) {
      if (!v[k].is_zero()) acc += v[k] * Cyc<P>::rho_pow(-static_cast<long>(i) * k);
    }
    f[i] = acc * inv_p;
  }
  return f;
}

template <int P>
Vec<P> theta_vector(const CycPoly<P>& f) {
  auto t = theta(f);
  Vec<P> v(P);
  for (int k = 0; k < P; ++k) v(k) = t[k];
  return v;
}

template <int P>
bool is_invertible(const CycPoly<P>& f) {
  for (const auto& c : theta(f)) {
    if (c.is_zero()) return false;
  }
  return true;
}

/// Multiplicative inverse, computed componentwise through Theta.
template <int P>
CycPoly<P> inverse(const CycPoly<P>& f) {
  auto t = theta(f);
  for (auto& c : t) {
    if (c.is_zero()) throw NotInvertible("polynomial vanishes at a p-th root of unity");
    c = c.inverse();
  }
  return theta_inv<P>(t);
}

/// n(f) = prod_{i=0}^{p-1} tau^i(f), computed by direct ring multiplication.
/// Throws InternalError if the product is not constant.
template <int P>
Cyc<P> ring_norm(const CycPoly<P>& f) {
  CycPoly<P> prod = f;
  CycPoly<P> cur = f;
  for (int i = 1; i < P; ++i) {
    cur = tau(cur);
    prod = prod * cur;
  }
  if (!prod.is_constant()) throw InternalError("ring norm is not a constant polynomial");
  return prod[0];
}

/// Psi(g) = g / tau(g).
template <int P>
CycPoly<P> psi(const CycPoly<P>& g) {
  if (!is_invertible(g)) throw NotInvertible("psi needs an invertible argument");
  return g * inverse(tau(g));
}

/// Psi'(g) = g / tau'(g).
template <int P>
CycPoly<P> psi_prime(const CycPoly<P>& g) {
  if (!is_invertible(g)) throw NotInvertible("psi' needs an invertible argument");
  return g * inverse(tau_prime(g));
}

}  // namespace skewpair
