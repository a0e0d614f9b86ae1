#include "skewpair/cyclotomic.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skewpair/random.hpp"

using namespace skewpair;

using C3 = Cyc<3>;
using C5 = Cyc<5>;

TEST(Cyclotomic, RhoSquaredReducesModPhi3) {
  EXPECT_EQ(C3::rho() * C3::rho(), C3(-1) - C3::rho());
}

TEST(Cyclotomic, OneMinusRhoTimesOneMinusRhoSquaredIsThree) {
  C3 a = C3(1) - C3::rho();
  C3 b = C3(1) - C3::rho_pow(2);
  EXPECT_EQ(a * b, C3(3));
  // Hand expansion: 1 - r - r^2 + r^3 = 1 - r - (-1 - r) + 1 = 3.
  EXPECT_EQ(oracle::mul(a, b), C3(3));
}

TEST(Cyclotomic, Inverses) {
  EXPECT_EQ(C3::rho().inverse(), C3(-1) - C3::rho());
  EXPECT_EQ(C3(2).inverse(), C3(mpq_class(1, 2)));
  // (1 - r)^{-1} = (1 - r^2) / 3 = (2 + r) / 3.
  C3 expected = C3::from_coords({mpq_class(2, 3), mpq_class(1, 3)});
  EXPECT_EQ((C3(1) - C3::rho()).inverse(), expected);
  EXPECT_EQ((C3(1) - C3::rho_pow(2)) / C3(3), expected);
  EXPECT_THROW(C3(0).inverse(), ZeroInversion);
}

TEST(Cyclotomic, GaloisConjugation) {
  EXPECT_EQ(C3::rho().conj(2), C3::rho_pow(2));
  EXPECT_EQ(C5(7).conj(3), C5(7));
  EXPECT_THROW(C5::rho().conj(0), BadExponent);
  EXPECT_THROW(C5::rho().conj(5), BadExponent);
  Rng rng(11);
  C5 a = random_cyc<5>(rng, 6);
  EXPECT_EQ(a.conj(2).conj(3), a);
  EXPECT_EQ(a.conj(1), a);
}

TEST(Cyclotomic, Norms) {
  EXPECT_EQ(C3(1).norm(), 1);
  EXPECT_EQ((C3(1) - C3::rho()).norm(), 3);
  EXPECT_EQ(C5(mpq_class(2, 3)).norm(), mpq_class(16, 81));
  EXPECT_EQ(C5(0).norm(), 0);
}

TEST(Cyclotomic, CanonicalFormAndPrinting) {
  C3 a = C3::from_coords({mpq_class(2, 4), mpq_class(-6, 4)});
  EXPECT_EQ(a.coord(0), mpq_class(1, 2));
  EXPECT_EQ(a.coord(1), mpq_class(-3, 2));
  EXPECT_EQ(a.coord(0).get_den(), 2);
  EXPECT_EQ(a.to_string(), "1/2 - 3/2*r");
  EXPECT_EQ(C3(0).to_string(), "0");
  EXPECT_EQ(C3(mpq_class(4, 6)), C3(mpq_class(2, 3)));
  EXPECT_TRUE(C3(mpq_class(-5, 3)).is_rational());
  EXPECT_FALSE(C3::rho().is_rational());
}

TEST(Cyclotomic, UnsupportedPrimesRejected) {
  for (long p : {2L, 1L, 9L, 15L, 17L, -3L}) EXPECT_THROW(require_supported_prime(p), UnsupportedPrime);
  for (long p : {3L, 5L, 7L, 11L, 13L}) EXPECT_NO_THROW(require_supported_prime(p));
}

template <typename T>
class CyclotomicProps : public ::testing::Test {};
TYPED_TEST_SUITE(CyclotomicProps, AllPrimes);

TYPED_TEST(CyclotomicProps, SumOfPowersOfRhoVanishes) {
  constexpr int P = TypeParam::value;
  Cyc<P> s(0);
  for (int i = 0; i < P; ++i) s += Cyc<P>::rho_pow(i);
  EXPECT_TRUE(s.is_zero());
  EXPECT_TRUE(Cyc<P>::rho().pow(P).is_one());
  EXPECT_EQ(Cyc<P>::rho_pow(-1), Cyc<P>::rho_pow(P - 1));
}

TYPED_TEST(CyclotomicProps, ProductMatchesLongDivisionOracle) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(1, "cyc-mul") + P);
  for (int t = 0; t < 25; ++t) {
    Cyc<P> a = random_cyc<P>(rng, 9);
    Cyc<P> b = random_cyc<P>(rng, 9);
    if (t % 5 == 0) b = b / Cyc<P>(static_cast<long>(rng.uniform(2, 7)));
    ASSERT_EQ(a * b, oracle::mul(a, b));
  }
}

TYPED_TEST(CyclotomicProps, FieldAxioms) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(2, "cyc-axioms") + P);
  for (int t = 0; t < 20; ++t) {
    Cyc<P> a = random_cyc<P>(rng, 5), b = random_cyc<P>(rng, 5), c = random_cyc<P>(rng, 5);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + (-a), Cyc<P>(0));
    ASSERT_EQ(a * Cyc<P>(1), a);
    if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
  }
}

TYPED_TEST(CyclotomicProps, NormIsMultiplicativeAndMatchesDeterminant) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(3, "cyc-norm") + P);
  for (int t = 0; t < 10; ++t) {
    Cyc<P> a = random_cyc<P>(rng, 4), b = random_cyc<P>(rng, 4);
    ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
    ASSERT_EQ(a.norm(), oracle::norm(a));
    Cyc<P> prod(1);
    for (int k = 1; k < P; ++k) prod *= a.conj(k);
    ASSERT_TRUE(prod.is_rational());
    ASSERT_EQ(prod.rational_part(), a.norm());
  }
  mpq_class q(-3, 2);
  mpq_class expected = 1;
  for (int k = 1; k < P; ++k) expected *= q;
  EXPECT_EQ(Cyc<P>(q).norm(), expected);
}

TYPED_TEST(CyclotomicProps, ConjugationIsARingHomomorphism) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(4, "cyc-conj") + P);
  for (int t = 0; t < 10; ++t) {
    Cyc<P> a = random_cyc<P>(rng, 4), b = random_cyc<P>(rng, 4);
    long k = rng.uniform(1, P - 1);
    ASSERT_EQ((a * b).conj(k), a.conj(k) * b.conj(k));
    ASSERT_EQ((a + b).conj(k), a.conj(k) + b.conj(k));
    ASSERT_EQ(Cyc<P>::rho().conj(k), Cyc<P>::rho_pow(k));
  }
}
