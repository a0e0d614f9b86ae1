#pragma once

// Exact dense linear algebra over any field scalar that supplies the ring
// operators, division and a free is_zero(). Instantiated for Cyc<P> and, in
// tests, for mpq_class. Rows and columns are indexed from 0.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "skewpair/cyclotomic.hpp"
#include "skewpair/errors.hpp"

namespace skewpair {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <int P>
using Mat = MatX<Cyc<P>>;
template <int P>
using Vec = VecX<Cyc<P>>;

using Index = Eigen::Index;

template <typename Scalar>
MatX<Scalar> identity(Index n) {
  return MatX<Scalar>::Identity(n, n);
}

template <typename Scalar>
MatX<Scalar> diagonal(const VecX<Scalar>& d) {
  MatX<Scalar> out = MatX<Scalar>::Zero(d.size(), d.size());
  for (Index i = 0; i < d.size(); ++i) out(i, i) = d(i);
  return out;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_diagonal_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && !is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename Scalar>
Scalar trace(const MatX<Scalar>& m) {
  Scalar t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Matrix product. Entries of exact scalars are expensive, so zero entries of
/// the left factor are skipped.
template <typename Scalar>
MatX<Scalar> mat_mul(const MatX<Scalar>& a, const MatX<Scalar>& b) {
  if (a.cols() != b.rows()) throw InternalError("mat_mul: shape mismatch");
  MatX<Scalar> out = MatX<Scalar>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <typename Scalar>
MatX<Scalar> mat_pow(const MatX<Scalar>& m, long e) {
  MatX<Scalar> result = identity<Scalar>(m.rows());
  MatX<Scalar> base = m;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

template <typename Scalar>
MatX<Scalar> commutator(const MatX<Scalar>& a, const MatX<Scalar>& b) {
  return mat_mul(a, b) - mat_mul(b, a);
}

/// Row-major flattening: entry (i, j) goes to slot i * cols + j.
template <typename Scalar>
VecX<Scalar> flatten(const MatX<Scalar>& m) {
  VecX<Scalar> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

template <typename Scalar>
MatX<Scalar> unflatten(const VecX<Scalar>& v, Index rows, Index cols) {
  MatX<Scalar> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  }
  return m;
}

template <typename Scalar>
struct EchelonForm {
  MatX<Scalar> rref;
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing
};

namespace detail {

template <typename Scalar>
Index row_weight(const MatX<Scalar>& m, Index r, Index from_col) {
  Index w = 0;
  for (Index j = from_col; j < m.cols(); ++j) {
    if (!is_zero(m(r, j))) ++w;
  }
  return w;
}

// Among rows r >= start with a nonzero in column c, the one with the fewest
// nonzeros (ties broken by lowest index). Returns -1 if the column is clear.
template <typename Scalar>
Index choose_pivot(const MatX<Scalar>& m, Index start, Index c) {
  Index best = -1, best_weight = 0;
  for (Index r = start; r < m.rows(); ++r) {
    if (is_zero(m(r, c))) continue;
    Index w = row_weight(m, r, c);
    if (best < 0 || w < best_weight) {
      best = r;
      best_weight = w;
    }
  }
  return best;
}

}  // namespace detail

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <typename Scalar>
EchelonForm<Scalar> row_reduce(MatX<Scalar> m) {
  EchelonForm<Scalar> out;
  Index row = 0;
  for (Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Index piv = detail::choose_pivot(m, row, c);
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, c);
    for (Index j = c; j < m.cols(); ++j) {
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      Scalar f = m(r, c);
      for (Index j = c; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(r, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(const MatX<Scalar>& m) {
  // Forward elimination only; cheaper than a full RREF.
  MatX<Scalar> w = m;
  Index row = 0;
  for (Index c = 0; c < w.cols() && row < w.rows(); ++c) {
    Index piv = detail::choose_pivot(w, row, c);
    if (piv < 0) continue;
    if (piv != row) w.row(piv).swap(w.row(row));
    Scalar inv = Scalar(1) / w(row, c);
    for (Index r = row + 1; r < w.rows(); ++r) {
      if (is_zero(w(r, c))) continue;
      Scalar f = w(r, c) * inv;
      w(r, c) = Scalar(0);
      for (Index j = c + 1; j < w.cols(); ++j) {
        if (!is_zero(w(row, j))) w(r, j) -= f * w(row, j);
      }
    }
    ++row;
  }
  return row;
}

/// Basis of the right null space, one vector per column. Each basis vector
/// has a 1 in one free column and zeros in the other free columns.
template <typename Scalar>
MatX<Scalar> kernel(const MatX<Scalar>& m) {
  EchelonForm<Scalar> ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : ef.pivots) is_pivot[c] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  MatX<Scalar> basis = MatX<Scalar>::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    Index f = free_cols[k];
    basis(f, static_cast<Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
      basis(ef.pivots[r], static_cast<Index>(k)) = -ef.rref(static_cast<Index>(r), f);
    }
  }
  return basis;
}

template <typename Scalar>
Scalar determinant(const MatX<Scalar>& m) {
  if (m.rows() != m.cols()) throw InternalError("determinant of a non-square matrix");
  MatX<Scalar> w = m;
  Scalar det(1);
  const Index n = w.rows();
  for (Index c = 0; c < n; ++c) {
    Index piv = detail::choose_pivot(w, c, c);
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      w.row(piv).swap(w.row(c));
      det = -det;
    }
    det *= w(c, c);
    Scalar inv = Scalar(1) / w(c, c);
    for (Index r = c + 1; r < n; ++r) {
      if (is_zero(w(r, c))) continue;
      Scalar f = w(r, c) * inv;
      for (Index j = c + 1; j < n; ++j) {
        if (!is_zero(w(c, j))) w(r, j) -= f * w(c, j);
      }
    }
  }
  return det;
}

/// Inverse by Gauss-Jordan on [m | I]. Throws Singular.
template <typename Scalar>
MatX<Scalar> inverse(const MatX<Scalar>& m) {
  if (m.rows() != m.cols()) throw Singular("inverse of a non-square matrix");
  const Index n = m.rows();
  MatX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity<Scalar>(n);
  EchelonForm<Scalar> ef = row_reduce(std::move(aug));
  if (static_cast<Index>(ef.pivots.size()) < n || ef.pivots[n - 1] != n - 1) {
    throw Singular("matrix is not invertible");
  }
  return ef.rref.rightCols(n);
}

/// Some solution of a x = b, or nullopt if the system is inconsistent.
template <typename Scalar>
std::optional<VecX<Scalar>> solve(const MatX<Scalar>& a, const VecX<Scalar>& b) {
  MatX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  EchelonForm<Scalar> ef = row_reduce(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == a.cols()) return std::nullopt;
  VecX<Scalar> x = VecX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
    x(ef.pivots[r]) = ef.rref(static_cast<Index>(r), a.cols());
  }
  return x;
}

/// Characteristic polynomial det(tI - m), coefficients from t^0 up to the
/// leading 1, by the Faddeev-LeVerrier recurrence
///   M_k = m M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(m M_k) / k.
template <typename Scalar>
std::vector<Scalar> charpoly(const MatX<Scalar>& m) {
  if (m.rows() != m.cols()) throw InternalError("charpoly of a non-square matrix");
  const Index n = m.rows();
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  MatX<Scalar> mk = MatX<Scalar>::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    for (Index i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Scalar t = trace<Scalar>(mat_mul(m, mk));
    c[n - k] = -t / Scalar(static_cast<long>(k));
  }
  return c;
}

/// Evaluates a polynomial (coefficients low to high) at a square matrix.
template <typename Scalar>
MatX<Scalar> eval_poly_at(const std::vector<Scalar>& coeffs, const MatX<Scalar>& m) {
  MatX<Scalar> acc = MatX<Scalar>::Zero(m.rows(), m.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = mat_mul(acc, m);
    for (Index i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

/// Basis (as columns) of ker(m - lambda I); empty when lambda is not an
/// eigenvalue.
template <typename Scalar>
MatX<Scalar> eigenspace(const MatX<Scalar>& m, const Scalar& lambda) {
  MatX<Scalar> shifted = m;
  for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

/// Scales m so that its first nonzero entry in row-major order is 1. Two
/// matrices are equal up to a nonzero scalar iff their normal forms agree.
template <typename Scalar>
MatX<Scalar> projective_normal_form(const MatX<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) {
        Scalar inv = Scalar(1) / m(i, j);
        MatX<Scalar> out = m;
        for (Index a = 0; a < out.rows(); ++a) {
          for (Index b = 0; b < out.cols(); ++b) {
            if (!is_zero(out(a, b))) out(a, b) = out(a, b) * inv;
          }
        }
        return out;
      }
    }
  }
  return m;
}

template <typename Scalar>
bool projectively_equal(const MatX<Scalar>& a, const MatX<Scalar>& b) {
  return projective_normal_form(a) == projective_normal_form(b);
}

/// Incrementally maintained span of vectors. Stored rows have pairwise
/// distinct pivots and each row is zero at the pivots of earlier rows.
template <typename Scalar>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(rows_.size()); }

  /// Reduces v against the stored rows.
  VecX<Scalar> reduce(VecX<Scalar> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Index piv = pivots_[k];
      if (is_zero(v(piv))) continue;
      Scalar f = v(piv);
      for (Index j = 0; j < dim_; ++j) {
        if (!is_zero(rows_[k](j))) v(j) -= f * rows_[k](j);
      }
    }
    return v;
  }

  bool contains(const VecX<Scalar>& v) const { return is_zero_matrix(reduce(v)); }

  /// Adds v; returns false if it was already in the span.
  bool insert(const VecX<Scalar>& v) {
    VecX<Scalar> r = reduce(v);
    for (Index j = 0; j < dim_; ++j) {
      if (is_zero(r(j))) continue;
      Scalar inv = Scalar(1) / r(j);
      for (Index k = j; k < dim_; ++k) {
        if (!is_zero(r(k))) r(k) = r(k) * inv;
      }
      rows_.push_back(std::move(r));
      pivots_.push_back(j);
      return true;
    }
    return false;
  }

 private:
  Index dim_;
  std::vector<VecX<Scalar>> rows_;
  std::vector<Index> pivots_;
};

/// body + eps * slope over the dual numbers K[eps]/(eps^2).
template <typename Scalar>
struct DualMat {
  MatX<Scalar> body;
  MatX<Scalar> slope;

  DualMat() = default;
  DualMat(MatX<Scalar> b, MatX<Scalar> s) : body(std::move(b)), slope(std::move(s)) {
    if (body.rows() != slope.rows() || body.cols() != slope.cols()) {
      throw InternalError("DualMat components differ in shape");
    }
  }
  explicit DualMat(MatX<Scalar> b)
      : body(std::move(b)), slope(MatX<Scalar>::Zero(body.rows(), body.cols())) {}

  static DualMat identity(Index n) {
    return DualMat(skewpair::identity<Scalar>(n));
  }

  Index rows() const { return body.rows(); }
  Index cols() const { return body.cols(); }

  friend DualMat operator*(const DualMat& a, const DualMat& b) {
    return DualMat(mat_mul(a.body, b.body),
                   MatX<Scalar>(mat_mul(a.body, b.slope) + mat_mul(a.slope, b.body)));
  }
  friend DualMat operator+(const DualMat& a, const DualMat& b) {
    return DualMat(a.body + b.body, a.slope + b.slope);
  }
  friend DualMat operator-(const DualMat& a, const DualMat& b) {
    return DualMat(a.body - b.body, a.slope - b.slope);
  }
  friend DualMat operator*(const Scalar& c, const DualMat& a) {
    return DualMat(c * a.body, c * a.slope);
  }
  friend bool operator==(const DualMat& a, const DualMat& b) {
    return a.body == b.body && a.slope == b.slope;
  }
  friend bool operator!=(const DualMat& a, const DualMat& b) { return !(a == b); }

  DualMat pow(long e) const {
    DualMat result = identity(rows());
    for (long k = 0; k < e; ++k) result = result * *this;
    return result;
  }
};

/// (A + eps B)^{-1} = A^{-1} - eps A^{-1} B A^{-1}. Throws Singular.
template <typename Scalar>
DualMat<Scalar> dual_inv(const DualMat<Scalar>& m) {
  MatX<Scalar> ai = inverse(m.body);
  return DualMat<Scalar>(ai, MatX<Scalar>(-mat_mul(mat_mul(ai, m.slope), ai)));
}

template <typename Scalar>
DualMat<Scalar> dual_mul(const DualMat<Scalar>& a, const DualMat<Scalar>& b) {
  return a * b;
}

}  // namespace skewpair
