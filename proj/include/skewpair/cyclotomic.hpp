#pragma once

// Exact arithmetic in K = Q(rho) for rho a primitive p-th root of unity.
//
// K is modelled as Q[t]/Phi_p(t) with Phi_p = 1 + t + ... + t^{p-1}. An element
// is stored as integer numerators on the power basis 1, rho, ..., rho^{p-2}
// over one shared positive denominator; gcd(den, num_0, ..., num_{p-2}) = 1.
// That form is canonical, so equality is plain coordinate comparison.

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

#include "skewpair/errors.hpp"

namespace skewpair {

/// True for the primes the library is instantiated for.
constexpr bool is_supported_prime(int p) {
  return p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

/// Throws UnsupportedPrime unless p is an odd prime <= 13.
inline void require_supported_prime(long p) {
  if (!is_supported_prime(static_cast<int>(p)) || p != static_cast<int>(p)) {
    throw UnsupportedPrime("p = " + std::to_string(p) +
                           " (supported: 3, 5, 7, 11, 13)");
  }
}

/// Reduces k into [0, m).
constexpr long mod_floor(long k, long m) {
  long r = k % m;
  return r < 0 ? r + m : r;
}

template <int P>
class Cyc {
  static_assert(is_supported_prime(P), "p must be an odd prime <= 13");

 public:
  static constexpr int kPrime = P;
  static constexpr int kDim = P - 1;

  Cyc() : den_(1) {}
  Cyc(int v) : den_(1) { num_[0] = v; }  // NOLINT(google-explicit-constructor)
  Cyc(long v) : den_(1) { num_[0] = v; }  // NOLINT(google-explicit-constructor)
  explicit Cyc(const mpz_class& v) : den_(1) { num_[0] = v; }
  explicit Cyc(const mpq_class& q) : den_(q.get_den()) {
    num_[0] = q.get_num();
    normalize();
  }

  /// Element with the given rational coordinates on 1, rho, ..., rho^{p-2}.
  static Cyc from_coords(const std::array<mpq_class, kDim>& coords) {
    Cyc out;
    mpz_class den = 1;
    for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    out.den_ = den;
    for (int i = 0; i < kDim; ++i) {
      out.num_[i] = coords[i].get_num() * (den / coords[i].get_den());
    }
    out.normalize();
    return out;
  }

  /// rho^k for any integer k.
  static Cyc rho_pow(long k) {
    long e = mod_floor(k, P);
    Cyc out;
    if (e == P - 1) {
      for (auto& c : out.num_) c = -1;
    } else {
      out.num_[e] = 1;
    }
    return out;
  }

  static Cyc rho() { return rho_pow(1); }

  int prime() const { return P; }

  /// Coordinate i on the power basis, in lowest terms.
  mpq_class coord(int i) const {
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
  }

  std::array<mpq_class, kDim> coords() const {
    std::array<mpq_class, kDim> out;
    for (int i = 0; i < kDim; ++i) out[i] = coord(i);
    return out;
  }

  const mpz_class& numerator(int i) const { return num_[i]; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const {
    for (const auto& c : num_) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }

  bool is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

  bool is_rational() const {
    for (int i = 1; i < kDim; ++i) {
      if (sgn(num_[i]) != 0) return false;
    }
    return true;
  }

  /// The rational value; only meaningful when is_rational().
  mpq_class rational_part() const { return coord(0); }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc operator-() const {
    Cyc out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
  }

  Cyc& operator+=(const Cyc& b) { return add_scaled(b, 1); }
  Cyc& operator-=(const Cyc& b) { return add_scaled(b, -1); }

  Cyc& operator*=(const Cyc& b) {
    *this = *this * b;
    return *this;
  }
  Cyc& operator/=(const Cyc& b) {
    *this = *this * b.inverse();
    return *this;
  }

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_zero() || b.is_zero()) return Cyc();
    // Cyclic convolution modulo t^p - 1, then fold the rho^{p-1} slot.
    std::array<mpz_class, P> acc;
    if (b.is_rational()) {
      for (int i = 0; i < kDim; ++i) acc[i] = a.num_[i] * b.num_[0];
    } else if (a.is_rational()) {
      for (int i = 0; i < kDim; ++i) acc[i] = b.num_[i] * a.num_[0];
    } else {
      for (int i = 0; i < kDim; ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        for (int j = 0; j < kDim; ++j) {
          if (sgn(b.num_[j]) == 0) continue;
          int k = i + j;
          if (k >= P) k -= P;
          mpz_addmul(acc[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
      }
    }
    Cyc out;
    out.den_ = a.den_ * b.den_;
    for (int i = 0; i < kDim; ++i) out.num_[i] = acc[i] - acc[P - 1];
    out.normalize();
    return out;
  }

  /// Galois conjugate rho -> rho^k.
  Cyc conj(long k) const {
    long e = mod_floor(k, P);
    if (e == 0) throw BadExponent("conjugation exponent must be prime to p");
    std::array<mpz_class, P> acc;
    for (int i = 0; i < kDim; ++i) acc[(i * e) % P] = num_[i];
    Cyc out;
    out.den_ = den_;
    for (int i = 0; i < kDim; ++i) out.num_[i] = acc[i] - acc[P - 1];
    out.normalize();
    return out;
  }

  /// Field norm N_{K/Q}: the product of all p-1 conjugates.
  mpq_class norm() const {
    if (is_zero()) return 0;
    Cyc prod = *this;
    for (int k = 2; k < P; ++k) prod = prod * conj(k);
    if (!prod.is_rational()) throw InternalError("norm is not rational");
    return prod.rational_part();
  }

  /// a^{-1} = (prod_{k>=2} conj(a, k)) / N(a).
  Cyc inverse() const {
    if (is_zero()) throw ZeroInversion("inverse of 0 in Q(rho)");
    if (is_rational()) {
      mpq_class q = rational_part();
      return Cyc(mpq_class(1) / q);
    }
    Cyc cofactor(1);
    for (int k = 2; k < P; ++k) cofactor = cofactor * conj(k);
    Cyc n = *this * cofactor;
    if (!n.is_rational()) throw InternalError("norm is not rational");
    return cofactor * Cyc(mpq_class(1) / n.rational_part());
  }

  Cyc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc result(1), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Human-readable form, e.g. "1/2 - 3*r + r^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < kDim; ++i) {
      mpq_class c = coord(i);
      if (sgn(c) == 0) continue;
      bool neg = sgn(c) < 0;
      mpq_class a = abs(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += i == 1 ? "r" : "r^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyc& a) {
    return os << a.to_string();
  }

 private:
  Cyc& add_scaled(const Cyc& b, int sign) {
    if (den_ == b.den_) {
      for (int i = 0; i < kDim; ++i) {
        if (sign > 0) num_[i] += b.num_[i];
        else num_[i] -= b.num_[i];
      }
    } else {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), b.den_.get_mpz_t());
      mpz_class fa = l / den_, fb = l / b.den_;
      for (int i = 0; i < kDim; ++i) {
        num_[i] *= fa;
        if (sign > 0) mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), fb.get_mpz_t());
        else mpz_submul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), fb.get_mpz_t());
      }
      den_ = l;
    }
    normalize();
    return *this;
  }

  void normalize() {
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (sgn(den_) < 0) g = -abs(g);
    if (g != 1) {
      den_ /= g;
      for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::array<mpz_class, kDim> num_;
  mpz_class den_;
};

template <int P>
bool is_zero(const Cyc<P>& a) {
  return a.is_zero();
}
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

}  // namespace skewpair

namespace Eigen {

template <int P>
struct NumTraits<skewpair::Cyc<P>> : GenericNumTraits<skewpair::Cyc<P>> {
  using Real = skewpair::Cyc<P>;
  using NonInteger = skewpair::Cyc<P>;
  using Literal = skewpair::Cyc<P>;
  using Nested = skewpair::Cyc<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 60,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
