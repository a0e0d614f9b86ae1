#pragma once

// Structure of the pair of maximal tori: the diagonal torus and its conjugate
// by R. Normalizer tests, common invariant subspaces, and the Lie algebra the
// two tori generate.

#include <cstdint>
#include <vector>

#include "skewpair/pairs.hpp"

namespace skewpair {

/// Exactly one nonzero entry in every row and every column.
template <int P>
bool is_monomial(const Mat<P>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    int row_nz = 0, col_nz = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      row_nz += m(i, j).is_zero() ? 0 : 1;
      col_nz += m(j, i).is_zero() ? 0 : 1;
    }
    if (row_nz != 1 || col_nz != 1) return false;
  }
  return true;
}

/// Whether s diag(d) s^{-1} is diagonal. For d with distinct entries this
/// holds iff s normalizes the diagonal torus.
template <int P>
bool conjugates_diagonal_to_diagonal(const Mat<P>& s, const Vec<P>& d) {
  return is_diagonal_matrix(mat_mul(mat_mul(s, diagonal<Cyc<P>>(d)), inverse(s)));
}

/// Coordinate subspace spanned by e_i for the set bits i of mask.
inline bool in_mask(std::uint32_t mask, int i) { return (mask >> i) & 1U; }

/// Whether the vector lies in the coordinate subspace given by mask.
template <int P>
bool in_coordinate_subspace(const Vec<P>& v, std::uint32_t mask) {
  for (int i = 0; i < P; ++i) {
    if (!in_mask(mask, i) && !v(i).is_zero()) return false;
  }
  return true;
}

/// Number of w_j = R e_j lying in the coordinate subspace of mask.
template <int P>
int count_w_vectors_in(std::uint32_t mask) {
  const Mat<P> r = r_matrix<P>();
  int count = 0;
  for (int j = 0; j < P; ++j) {
    if (in_coordinate_subspace<P>(r.col(j), mask)) ++count;
  }
  return count;
}

/// Whether m maps the coordinate subspace of mask onto a coordinate
/// subspace. For invertible m the image is coordinate iff the union of the
/// supports of the columns m e_j, j in mask, has exactly |mask| elements.
template <int P>
bool maps_to_coordinate_subspace(const Mat<P>& m, std::uint32_t mask) {
  std::uint32_t support = 0;
  int size = 0;
  for (int j = 0; j < P; ++j) {
    if (!in_mask(mask, j)) continue;
    ++size;
    for (int i = 0; i < P; ++i) {
      if (!m(i, j).is_zero()) support |= 1U << i;
    }
  }
  return __builtin_popcount(support) == size;
}

/// Dimension of the Lie algebra generated by the given matrices: every
/// left-normed bracket of generators is inserted until the span stops
/// growing or reaches `stop_at`.
template <int P>
Index lie_closure_dimension(const std::vector<Mat<P>>& generators, Index stop_at) {
  const Index n = generators.empty() ? 0 : generators.front().rows();
  IncrementalSpan<Cyc<P>> span(n * n);
  std::vector<Mat<P>> frontier;
  for (const auto& g : generators) {
    if (span.insert(flatten(g))) frontier.push_back(g);
  }
  while (!frontier.empty() && span.size() < stop_at) {
    std::vector<Mat<P>> next;
    for (const auto& h : frontier) {
      for (const auto& g : generators) {
        Mat<P> b = commutator(g, h);
        if (span.insert(flatten(b))) {
          next.push_back(std::move(b));
          if (span.size() >= stop_at) return span.size();
        }
      }
    }
    frontier = std::move(next);
  }
  return span.size();
}

/// Generators of the Lie algebras of the two tori: the diagonal matrix units
/// E_ii and their conjugates R E_ii R^{-1}.
template <int P>
std::vector<Mat<P>> toral_lie_generators() {
  const Mat<P> r = r_matrix<P>();
  const Mat<P> ri = r_matrix_inverse<P>();
  std::vector<Mat<P>> gens;
  for (int i = 0; i < P; ++i) {
    Mat<P> e = Mat<P>::Zero(P, P);
    e(i, i) = Cyc<P>(1);
    gens.push_back(e);
  }
  for (int i = 0; i < P; ++i) {
    Mat<P> e = Mat<P>::Zero(P, P);
    e(i, i) = Cyc<P>(1);
    gens.push_back(mat_mul(mat_mul(r, e), ri));
  }
  return gens;
}

}  // namespace skewpair
