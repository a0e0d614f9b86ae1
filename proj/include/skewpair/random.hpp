#pragma once

// Deterministic sampling. A root seed expands to per-check seeds by
//   derive_seed(root, name) = splitmix64(root ^ fnv1a64(name)),
// and every draw maps a raw 64-bit mt19937_64 output by modulo, so samples
// are identical across platforms and standard libraries.

#include <cstdint>
#include <random>
#include <string_view>

#include "skewpair/cycpoly.hpp"
#include "skewpair/pairs.hpp"

namespace skewpair {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::string_view name) {
  return splitmix64(root ^ fnv1a64(name));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound) {
    long v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
  }

 private:
  std::mt19937_64 engine_;
};

/// Rational integer in [-bound, bound], or (when cyclotomic) an element with
/// integer coordinates in that range.
template <int P>
Cyc<P> random_cyc(Rng& rng, long bound, bool cyclotomic = true) {
  if (!cyclotomic) return Cyc<P>(rng.uniform(-bound, bound));
  std::array<mpq_class, P - 1> c;
  for (auto& v : c) v = rng.uniform(-bound, bound);
  return Cyc<P>::from_coords(c);
}

template <int P>
Cyc<P> random_nonzero_cyc(Rng& rng, long bound, bool cyclotomic = true) {
  for (;;) {
    Cyc<P> c = random_cyc<P>(rng, bound, cyclotomic);
    if (!c.is_zero()) return c;
  }
}

template <int P>
CycPoly<P> random_poly(Rng& rng, long bound, bool cyclotomic = true) {
  CycPoly<P> f;
  for (int i = 0; i < P; ++i) f[i] = random_cyc<P>(rng, bound, cyclotomic);
  return f;
}

/// Rejection-samples until Theta(f) has no zero component.
template <int P>
CycPoly<P> random_invertible_poly(Rng& rng, long bound, bool cyclotomic = true) {
  for (;;) {
    CycPoly<P> f = random_poly<P>(rng, bound, cyclotomic);
    if (is_invertible(f)) return f;
  }
}

/// Random polynomial with at least two nonzero coefficients and a random
/// support (so sparse circulants are sampled too).
template <int P>
CycPoly<P> random_non_monomial_poly(Rng& rng, long bound) {
  for (;;) {
    CycPoly<P> f;
    for (int i = 0; i < P; ++i) {
      if (rng.uniform(0, 2) != 0) f[i] = random_nonzero_cyc<P>(rng, bound);
    }
    if (f.support_size() >= 2 && is_invertible(f)) return f;
  }
}

template <int P>
Mat<P> random_matrix(Rng& rng, Index rows, Index cols, long bound, bool cyclotomic = true) {
  Mat<P> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = random_cyc<P>(rng, bound, cyclotomic);
  }
  return m;
}

template <int P>
Mat<P> random_invertible_matrix(Rng& rng, long bound, bool cyclotomic = false) {
  for (;;) {
    Mat<P> m = random_matrix<P>(rng, P, P, bound, cyclotomic);
    if (!determinant(m).is_zero()) return m;
  }
}

template <int P>
Basis<P> random_basis(Rng& rng, long bound = 3, bool cyclotomic = false) {
  return Basis<P>(random_invertible_matrix<P>(rng, bound, cyclotomic));
}

/// A random point of the unit pair variety: Phi of a random basis.
template <int P>
UnitSkewPair<P> random_unit_pair(Rng& rng, long bound = 3) {
  return phi(random_basis<P>(rng, bound));
}

/// A random skew pair that is generally not a unit pair: a unit pair moved by
/// both slot moves and rescaled.
template <int P>
SkewPair<P> random_skew_pair(Rng& rng, long bound = 3) {
  SkewPair<P> q = random_unit_pair<P>(rng, bound);
  q = move_T(q, random_invertible_poly<P>(rng, 2, false));
  q = move_S(q, random_invertible_poly<P>(rng, 2, false));
  q.alpha = Cyc<P>(rng.nonzero(4)) * q.alpha;
  q.beta = Cyc<P>(rng.nonzero(4)) * q.beta;
  return q;
}

}  // namespace skewpair
