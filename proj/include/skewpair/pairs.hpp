#pragma once

// The split model. A point of the basis variety is an invertible p x p matrix
// A = (v_0, ..., v_{p-1}) up to scalars; Phi sends it to the unit skew pair
//   alpha = A diag(1, rho, ..., rho^{p-1}) A^{-1},   beta = A N A^{-1},
// where N e_i = e_{i+1} (indices mod p). The shift sigma and scale r act by
// right multiplication, and the two tori are
//   T_g = diag(Theta(g))                (diagonal in the v-basis)
//   S_g = circulant with S(i+j, j) = g_i (diagonal in the w-basis, w = A R).

#include <utility>

#include "skewpair/cycpoly.hpp"
#include "skewpair/linalg.hpp"

namespace skewpair {

/// r = diag(1, rho, ..., rho^{p-1}); also the standard alpha.
template <int P>
Mat<P> r_diag() {
  Mat<P> m = Mat<P>::Zero(P, P);
  for (int i = 0; i < P; ++i) m(i, i) = Cyc<P>::rho_pow(i);
  return m;
}

/// The shift: 1 in positions (i, i+1) and (p-1, 0), so A sigma moves the
/// columns of A to (v_{p-1}, v_0, ..., v_{p-2}).
template <int P>
Mat<P> sigma_matrix() {
  Mat<P> m = Mat<P>::Zero(P, P);
  for (int i = 0; i < P; ++i) m(i, (i + 1) % P) = Cyc<P>(1);
  return m;
}

/// N e_i = e_{i+1}; the standard beta. Equals sigma^{-1}.
template <int P>
Mat<P> cyclic_shift() {
  Mat<P> m = Mat<P>::Zero(P, P);
  for (int i = 0; i < P; ++i) m((i + 1) % P, i) = Cyc<P>(1);
  return m;
}

/// R = (rho^{-ij}).
template <int P>
Mat<P> r_matrix() {
  Mat<P> m(P, P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) m(i, j) = Cyc<P>::rho_pow(-static_cast<long>(i) * j);
  }
  return m;
}

/// R' = (rho^{ij}); R R' = p I.
template <int P>
Mat<P> r_prime_matrix() {
  Mat<P> m(P, P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) m(i, j) = Cyc<P>::rho_pow(static_cast<long>(i) * j);
  }
  return m;
}

/// R^{-1} = R' / p.
template <int P>
Mat<P> r_matrix_inverse() {
  return Cyc<P>(mpq_class(1, P)) * r_prime_matrix<P>();
}

/// T_g = diag(g(1), g(rho), ..., g(rho^{p-1})).
template <int P>
Mat<P> torus_t_matrix(const CycPoly<P>& g) {
  return diagonal<Cyc<P>>(theta_vector(g));
}

/// S_g: column j is the coefficient vector of g cyclically shifted down by j,
/// i.e. the matrix of g(beta) in the v-basis.
template <int P>
Mat<P> circulant(const CycPoly<P>& g) {
  Mat<P> m(P, P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) m((i + j) % P, j) = g[i];
  }
  return m;
}

/// Cyclic shift of a coordinate vector: (z_{p-1}, z_0, ..., z_{p-2}).
template <int P>
Vec<P> shift_vector(const Vec<P>& z) {
  Vec<P> out(P);
  for (int i = 0; i < P; ++i) out((i + 1) % P) = z(i);
  return out;
}

/// An ordered basis up to scalars, stored with the first nonzero entry of
/// column 0 scaled to 1.
template <int P>
class Basis {
 public:
  /// Throws Singular if m is not invertible.
  explicit Basis(const Mat<P>& m) : m_(canonical(m)) {
    if (m.rows() != P || m.cols() != P) throw Singular("basis must be p x p");
    if (determinant(m_).is_zero()) throw Singular("basis matrix is not invertible");
  }

  static Basis identity() { return Basis(Mat<P>::Identity(P, P)); }

  const Mat<P>& matrix() const { return m_; }
  Vec<P> column(int i) const { return m_.col(i); }

  friend bool operator==(const Basis& a, const Basis& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

  static Mat<P> canonical(const Mat<P>& m) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, 0).is_zero()) continue;
      if (m(i, 0).is_one()) return m;
      Cyc<P> inv = m(i, 0).inverse();
      Mat<P> out = m;
      for (Index a = 0; a < out.rows(); ++a) {
        for (Index b = 0; b < out.cols(); ++b) {
          if (!out(a, b).is_zero()) out(a, b) = out(a, b) * inv;
        }
      }
      return out;
    }
    return m;
  }

 private:
  Mat<P> m_;
};

template <int P>
bool is_skew(const Mat<P>& alpha, const Mat<P>& beta) {
  return mat_mul(alpha, beta) == Cyc<P>::rho() * mat_mul(beta, alpha);
}

/// Invertible alpha, beta with alpha beta = rho beta alpha.
template <int P>
struct SkewPair {
  Mat<P> alpha;
  Mat<P> beta;

  /// Validating constructor; throws InvalidPair.
  static SkewPair make(Mat<P> alpha, Mat<P> beta) {
    SkewPair q{std::move(alpha), std::move(beta)};
    if (!q.is_valid()) throw InvalidPair("matrices do not form an invertible skew pair");
    return q;
  }

  bool is_valid() const {
    return alpha.rows() == P && beta.rows() == P && !determinant(alpha).is_zero() &&
           !determinant(beta).is_zero() && is_skew(alpha, beta);
  }

  bool is_unit() const {
    const Mat<P> id = Mat<P>::Identity(P, P);
    return mat_pow(alpha, P) == id && mat_pow(beta, P) == id;
  }

  friend bool operator==(const SkewPair& a, const SkewPair& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend bool operator!=(const SkewPair& a, const SkewPair& b) { return !(a == b); }
};

/// A skew pair with alpha^p = beta^p = I: a point of the unit pair variety.
template <int P>
struct UnitSkewPair : SkewPair<P> {
  UnitSkewPair() = default;

  /// Validating constructor; throws InvalidPair.
  static UnitSkewPair make(Mat<P> alpha, Mat<P> beta) {
    UnitSkewPair q;
    q.alpha = std::move(alpha);
    q.beta = std::move(beta);
    if (!q.is_valid() || !q.is_unit()) {
      throw InvalidPair("matrices do not form a unit skew pair");
    }
    return q;
  }

  /// For results that hold by construction.
  static UnitSkewPair unchecked(Mat<P> alpha, Mat<P> beta) {
    UnitSkewPair q;
    q.alpha = std::move(alpha);
    q.beta = std::move(beta);
    return q;
  }
};

template <int P>
UnitSkewPair<P> standard_pair() {
  return UnitSkewPair<P>::unchecked(r_diag<P>(), cyclic_shift<P>());
}

/// Phi on a raw (unnormalized) matrix; invariant under scaling of a.
template <int P>
UnitSkewPair<P> phi_of_matrix(const Mat<P>& a) {
  Mat<P> ai = inverse(a);
  return UnitSkewPair<P>::unchecked(mat_mul(mat_mul(a, r_diag<P>()), ai),
                                    mat_mul(mat_mul(a, cyclic_shift<P>()), ai));
}

template <int P>
UnitSkewPair<P> phi(const Basis<P>& b) {
  return phi_of_matrix(b.matrix());
}

/// v_0 spans the 1-eigenspace of alpha, v_i = beta^i v_0. Throws
/// DegeneratePair if that eigenspace is not a line.
template <int P>
Basis<P> phi_inverse(const SkewPair<P>& q) {
  Mat<P> eig = eigenspace(q.alpha, Cyc<P>(1));
  if (eig.cols() != 1) {
    throw DegeneratePair("1-eigenspace of alpha has dimension " + std::to_string(eig.cols()));
  }
  Mat<P> a(P, P);
  Vec<P> v = eig.col(0);
  for (int i = 0; i < P; ++i) {
    a.col(i) = v;
    if (i + 1 < P) v = mat_mul<Cyc<P>>(q.beta, v);
  }
  return Basis<P>(a);
}

/// The shift: A -> A sigma.
template <int P>
Basis<P> act_sigma(const Basis<P>& b) {
  return Basis<P>(mat_mul(b.matrix(), sigma_matrix<P>()));
}

/// The scale: A -> A r.
template <int P>
Basis<P> act_r(const Basis<P>& b) {
  return Basis<P>(mat_mul(b.matrix(), r_diag<P>()));
}

/// sigma on pairs: (alpha, beta) -> (rho alpha, beta).
template <int P>
UnitSkewPair<P> sigma_pair(const SkewPair<P>& q) {
  return UnitSkewPair<P>::unchecked(Cyc<P>::rho() * q.alpha, q.beta);
}

/// r on pairs: (alpha, beta) -> (alpha, rho beta).
template <int P>
UnitSkewPair<P> r_pair(const SkewPair<P>& q) {
  return UnitSkewPair<P>::unchecked(q.alpha, Cyc<P>::rho() * q.beta);
}

template <int P>
Basis<P> torus_T(const Basis<P>& b, const CycPoly<P>& g) {
  if (!is_invertible(g)) throw NotInvertible("torus_T parameter");
  return Basis<P>(mat_mul(b.matrix(), torus_t_matrix(g)));
}

template <int P>
Basis<P> torus_S(const Basis<P>& b, const CycPoly<P>& g) {
  if (!is_invertible(g)) throw NotInvertible("torus_S parameter");
  return Basis<P>(mat_mul(b.matrix(), circulant(g)));
}

/// (alpha, beta) -> (alpha, Psi(g)(alpha) beta), i.e. (1/tau)(g) applied to
/// alpha, times beta.
template <int P>
UnitSkewPair<P> act_T_on_pair(const SkewPair<P>& q, const CycPoly<P>& g) {
  if (!is_invertible(g)) throw NotInvertible("act_T_on_pair parameter");
  return UnitSkewPair<P>::unchecked(q.alpha, mat_mul(psi(g).eval(q.alpha), q.beta));
}

/// (alpha, beta) -> (Psi'(g)(beta) alpha, beta).
template <int P>
UnitSkewPair<P> act_S_on_pair(const SkewPair<P>& q, const CycPoly<P>& g) {
  if (!is_invertible(g)) throw NotInvertible("act_S_on_pair parameter");
  return UnitSkewPair<P>::unchecked(mat_mul(psi_prime(g).eval(q.beta), q.alpha), q.beta);
}

/// Same move in conjugation form: beta -> g(alpha) beta g(alpha)^{-1}.
template <int P>
UnitSkewPair<P> act_T_on_pair_by_conjugation(const SkewPair<P>& q, const CycPoly<P>& g) {
  Mat<P> ga = g.eval(q.alpha);
  return UnitSkewPair<P>::unchecked(q.alpha, mat_mul(mat_mul(ga, q.beta), inverse(ga)));
}

/// alpha -> g(beta) alpha g(beta)^{-1}.
template <int P>
UnitSkewPair<P> act_S_on_pair_by_conjugation(const SkewPair<P>& q, const CycPoly<P>& g) {
  Mat<P> gb = g.eval(q.beta);
  return UnitSkewPair<P>::unchecked(mat_mul(mat_mul(gb, q.alpha), inverse(gb)), q.beta);
}

/// Slot moves on matrix pairs: (alpha, f(alpha) beta) and (f(beta) alpha, beta).
template <int P>
SkewPair<P> move_T(const SkewPair<P>& q, const CycPoly<P>& f) {
  return SkewPair<P>{q.alpha, mat_mul(f.eval(q.alpha), q.beta)};
}

template <int P>
SkewPair<P> move_S(const SkewPair<P>& q, const CycPoly<P>& f) {
  return SkewPair<P>{mat_mul(f.eval(q.beta), q.alpha), q.beta};
}

/// Equality of pairs after scaling alpha and beta separately.
template <int P>
bool pairs_projectively_equal(const SkewPair<P>& a, const SkewPair<P>& b) {
  return projectively_equal(a.alpha, b.alpha) && projectively_equal(a.beta, b.beta);
}

/// A R = (w_0, ..., w_{p-1}) with w_j = sum_i rho^{-ij} v_i.
template <int P>
Basis<P> w_basis(const Basis<P>& b) {
  return Basis<P>(mat_mul(b.matrix(), r_matrix<P>()));
}

}  // namespace skewpair
