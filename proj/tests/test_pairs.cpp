#include "skewpair/pairs.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skewpair/random.hpp"
#include "skewpair/tori.hpp"

using namespace skewpair;

using C3 = Cyc<3>;
using M3 = Mat<3>;
using P3 = CycPoly<3>;

TEST(Pairs, PhiOfIdentityIsStandardPair) {
  UnitSkewPair<3> q = phi(Basis<3>::identity());
  EXPECT_EQ(q.alpha, r_diag<3>());
  EXPECT_EQ(q.beta, cyclic_shift<3>());
  EXPECT_TRUE(q.is_valid());
  EXPECT_TRUE(q.is_unit());
  EXPECT_EQ(phi_inverse<3>(q), Basis<3>::identity());
}

TEST(Pairs, ShiftMovesColumns) {
  Rng rng(3);
  Basis<3> b = random_basis<3>(rng, 3);
  M3 shifted = act_sigma(b).matrix();
  // (v0, v1, v2) -> (v2, v0, v1), up to the overall scale of Basis.
  M3 expected(3, 3);
  expected.col(0) = b.column(2);
  expected.col(1) = b.column(0);
  expected.col(2) = b.column(1);
  EXPECT_EQ(shifted, Basis<3>::canonical(expected));
}

TEST(Pairs, SigmaIsInverseShiftAndConjugatesR) {
  M3 s = sigma_matrix<3>();
  EXPECT_EQ(mat_mul(s, cyclic_shift<3>()), M3(M3::Identity(3, 3)));
  EXPECT_EQ(circulant(P3::monomial(2)), s);
  M3 conj = mat_mul(mat_mul(inverse(s), r_diag<3>()), s);
  EXPECT_EQ(conj, C3::rho_pow(-1) * r_diag<3>());
  EXPECT_NE(conj, C3::rho() * r_diag<3>());
}

TEST(Pairs, SkewPairValidation) {
  EXPECT_NO_THROW(SkewPair<3>::make(r_diag<3>(), cyclic_shift<3>()));
  EXPECT_THROW(SkewPair<3>::make(cyclic_shift<3>(), r_diag<3>()), InvalidPair);
  EXPECT_THROW(SkewPair<3>::make(M3(M3::Identity(3, 3)), M3(M3::Identity(3, 3))), InvalidPair);
  // Scaled beta is still skew but no longer unit.
  EXPECT_NO_THROW(SkewPair<3>::make(r_diag<3>(), C3(2) * cyclic_shift<3>()));
  EXPECT_THROW(UnitSkewPair<3>::make(r_diag<3>(), C3(2) * cyclic_shift<3>()), InvalidPair);
}

TEST(Pairs, PhiInverseRejectsDegenerateAlpha) {
  SkewPair<3> q{M3(M3::Identity(3, 3)), M3(M3::Identity(3, 3))};
  EXPECT_THROW(phi_inverse<3>(q), DegeneratePair);
  EXPECT_THROW(Basis<3>(M3(M3::Zero(3, 3))), Singular);
}

TEST(Pairs, TorusParametersMustBeInvertible) {
  P3 bad(P3::Coeffs{C3(1), C3(1), C3(1)});
  EXPECT_THROW(torus_T(Basis<3>::identity(), bad), NotInvertible);
  EXPECT_THROW(torus_S(Basis<3>::identity(), bad), NotInvertible);
  EXPECT_THROW(act_T_on_pair<3>(standard_pair<3>(), bad), NotInvertible);
}

TEST(Pairs, LiteralScaleAndShiftPairingFails) {
  // r with T and sigma with S is the wrong pairing: it fails for a generic g.
  Rng rng(17);
  UnitSkewPair<3> q = phi(random_basis<3>(rng, 3));
  P3 g = random_non_monomial_poly<3>(rng, 3);
  while (!is_invertible(g)) g = random_non_monomial_poly<3>(rng, 3);
  EXPECT_NE(r_pair(act_T_on_pair(q, g)), act_T_on_pair(r_pair(q), tau(g)));
  EXPECT_NE(sigma_pair(act_S_on_pair(q, g)), act_S_on_pair(sigma_pair(q), tau(g)));
  // The correct pairing holds on the same sample.
  EXPECT_EQ(sigma_pair(act_T_on_pair(q, g)), act_T_on_pair(sigma_pair(q), tau(g)));
  EXPECT_EQ(r_pair(act_S_on_pair(q, g)), act_S_on_pair(r_pair(q), tau(g)));
}

TEST(Pairs, AlphaShiftsWBasisDownNotUp) {
  Rng rng(23);
  Basis<3> b = random_basis<3>(rng, 3);
  UnitSkewPair<3> q = phi(b);
  M3 w = mat_mul(b.matrix(), r_matrix<3>());
  for (int j = 0; j < 3; ++j) {
    Vec<3> image = mat_mul<C3>(q.alpha, Vec<3>(w.col(j)));
    EXPECT_EQ(image, Vec<3>(w.col((j + 2) % 3)));
    EXPECT_NE(image, Vec<3>(w.col((j + 1) % 3)));
  }
}

TEST(Tori, MonomialAndCoordinateHelpers) {
  EXPECT_TRUE(is_monomial<3>(sigma_matrix<3>()));
  EXPECT_TRUE(is_monomial<3>(r_diag<3>()));
  EXPECT_FALSE(is_monomial<3>(r_matrix<3>()));
  Vec<3> v = Vec<3>::Zero(3);
  v(1) = C3(4);
  EXPECT_TRUE(in_coordinate_subspace<3>(v, 0b010));
  EXPECT_FALSE(in_coordinate_subspace<3>(v, 0b101));
  EXPECT_EQ(count_w_vectors_in<3>(0b111), 3);
  EXPECT_EQ(count_w_vectors_in<3>(0b011), 0);
  EXPECT_TRUE(maps_to_coordinate_subspace<3>(sigma_matrix<3>(), 0b011));
  EXPECT_FALSE(maps_to_coordinate_subspace<3>(r_matrix<3>(), 0b001));
}

template <typename T>
class PairsProps : public ::testing::Test {};
TYPED_TEST_SUITE(PairsProps, SmallPrimes);

TYPED_TEST(PairsProps, RTimesRPrimeIsPIdentity) {
  constexpr int P = TypeParam::value;
  const Mat<P> pi = Cyc<P>(static_cast<long>(P)) * Mat<P>::Identity(P, P);
  EXPECT_EQ(mat_mul(r_matrix<P>(), r_prime_matrix<P>()), pi);
  EXPECT_EQ(inverse(r_matrix<P>()), r_matrix_inverse<P>());
}

TYPED_TEST(PairsProps, TorusBridge) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(1, "bridge") + P);
  const Mat<P> r = r_matrix<P>(), ri = r_matrix_inverse<P>();
  for (int t = 0; t < 10; ++t) {
    CycPoly<P> g = random_invertible_poly<P>(rng, 4);
    ASSERT_EQ(mat_mul(mat_mul(r, torus_t_matrix(g)), ri), circulant(g));
    // Circulant equals g evaluated at the shift.
    ASSERT_EQ(circulant(g), g.eval(cyclic_shift<P>()));
  }
}

TYPED_TEST(PairsProps, PhiRoundTripAndEquivariance) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(2, "phi") + P);
  for (int t = 0; t < 5; ++t) {
    Basis<P> b = random_basis<P>(rng, 3);
    UnitSkewPair<P> q = phi(b);
    ASSERT_TRUE(q.is_valid());
    ASSERT_TRUE(q.is_unit());
    ASSERT_EQ(phi_inverse<P>(q), b);
    ASSERT_EQ(phi_of_matrix<P>(Cyc<P>(mpq_class(-2, 3)) * b.matrix()), q);
    ASSERT_EQ(phi(act_sigma(b)), sigma_pair(q));
    ASSERT_EQ(phi(act_r(b)), r_pair(q));
  }
}

TYPED_TEST(PairsProps, ToriActThroughPsi) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(3, "psi-action") + P);
  for (int t = 0; t < 4; ++t) {
    Basis<P> b = random_basis<P>(rng, 3);
    CycPoly<P> g = random_invertible_poly<P>(rng, 3);
    UnitSkewPair<P> q = phi(b);
    ASSERT_EQ(phi(torus_T(b, g)), act_T_on_pair(q, g));
    ASSERT_EQ(phi(torus_S(b, g)), act_S_on_pair(q, g));
    ASSERT_EQ(act_T_on_pair(q, g), act_T_on_pair_by_conjugation(q, g));
    ASSERT_EQ(act_S_on_pair(q, g), act_S_on_pair_by_conjugation(q, g));
    ASSERT_EQ(act_sigma(torus_T(b, g)), torus_T(act_sigma(b), tau(g)));
    ASSERT_EQ(act_r(torus_S(b, g)), torus_S(act_r(b), tau(g)));
  }
}

TYPED_TEST(PairsProps, WBasisDiagonalizesBeta) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(4, "w-basis") + P);
  Basis<P> b = random_basis<P>(rng, 3);
  UnitSkewPair<P> q = phi(b);
  const Mat<P> w = mat_mul(b.matrix(), r_matrix<P>());
  EXPECT_EQ(w_basis(b).matrix(), Basis<P>::canonical(w));
  for (int j = 0; j < P; ++j) {
    Vec<P> wj = w.col(j);
    EXPECT_EQ(mat_mul<Cyc<P>>(q.beta, wj), Cyc<P>::rho_pow(j) * wj);
    EXPECT_EQ(mat_mul<Cyc<P>>(q.alpha, wj), Vec<P>(w.col((j + P - 1) % P)));
  }
}

TYPED_TEST(PairsProps, NormalizerMeetsCirculantsInMonomials) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(5, "normalizer") + P);
  Vec<P> d(P);
  for (int i = 0; i < P; ++i) d(i) = Cyc<P>(static_cast<long>(i + 1));
  for (int k = 0; k < P; ++k) {
    Mat<P> s = circulant(CycPoly<P>::monomial(k, random_nonzero_cyc<P>(rng, 3)));
    ASSERT_TRUE(is_monomial<P>(s));
    ASSERT_TRUE(conjugates_diagonal_to_diagonal<P>(s, d));
  }
  for (int t = 0; t < 5; ++t) {
    Mat<P> s = circulant(random_non_monomial_poly<P>(rng, 3));
    if (determinant(s).is_zero()) continue;
    ASSERT_FALSE(is_monomial<P>(s));
    ASSERT_FALSE(conjugates_diagonal_to_diagonal<P>(s, d));
  }
}

TYPED_TEST(PairsProps, NoCommonInvariantCoordinateSubspace) {
  constexpr int P = TypeParam::value;
  const std::uint32_t full = (1U << P) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) ASSERT_EQ(count_w_vectors_in<P>(mask), 0);
}

TYPED_TEST(PairsProps, LieClosure) {
  constexpr int P = TypeParam::value;
  std::vector<Mat<P>> gens = toral_lie_generators<P>();
  EXPECT_EQ(lie_closure_dimension<P>(gens, P * P), P * P);
  gens.resize(P);
  EXPECT_EQ(lie_closure_dimension<P>(gens, P * P), P);
}

TEST(PairsLarge, RTimesRPrimeAtElevenAndThirteen) {
  EXPECT_EQ(mat_mul(r_matrix<11>(), r_prime_matrix<11>()), Mat<11>(Cyc<11>(11) * Mat<11>::Identity(11, 11)));
  EXPECT_EQ(mat_mul(r_matrix<13>(), r_prime_matrix<13>()), Mat<13>(Cyc<13>(13) * Mat<13>::Identity(13, 13)));
  EXPECT_EQ(phi(Basis<13>::identity()), standard_pair<13>());
}
