#include "skewpair/filtration.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "skewpair/random.hpp"

using namespace skewpair;

namespace {

/// Jacobian rank by dual-number differentiation of the whole product,
/// one coordinate direction at a time.
template <int P>
Index dual_jacobian_rank(const Mat<P>& base, const std::vector<CycPoly<P>>& params) {
  const Mat<P> point = orbit_matrix(base, params);
  const Mat<P> point_inv = inverse(point);
  IncrementalSpan<Cyc<P>> span(P * P);
  span.insert(flatten<Cyc<P>>(Mat<P>::Identity(P, P)));
  for (std::size_t m = 0; m < params.size(); ++m) {
    for (int k = 0; k < P; ++k) {
      DualMat<Cyc<P>> acc(base);
      for (std::size_t f = 0; f < params.size(); ++f) {
        const TorusKind kind = factor_kind(static_cast<int>(f));
        Mat<P> body = torus_factor(kind, params[f]);
        Mat<P> slope = f == m ? torus_factor(kind, CycPoly<P>::monomial(k)) : Mat<P>(Mat<P>::Zero(P, P));
        acc = acc * DualMat<Cyc<P>>(body, slope);
      }
      span.insert(flatten<Cyc<P>>(mat_mul(point_inv, acc.slope)));
    }
  }
  return span.size() - 1;
}

}  // namespace

TEST(Filtration, FactorsAlternateStartingWithT) {
  EXPECT_EQ(factor_kind(0), TorusKind::kT);
  EXPECT_EQ(factor_kind(1), TorusKind::kS);
  EXPECT_EQ(factor_kind(2), TorusKind::kT);
}

TEST(Filtration, DepthIsValidated) {
  EXPECT_THROW(OrbitSpec<3>(Basis<3>::identity(), 1), InternalError);
  EXPECT_THROW(OrbitSpec<3>(Basis<3>::identity(), 5), InternalError);
  EXPECT_NO_THROW(OrbitSpec<3>(Basis<3>::identity(), 4));
  OrbitSpec<3> spec(Basis<3>::identity(), 2);
  EXPECT_THROW(orbit_point<3>(spec, {CycPoly<3>::one()}), InternalError);
}

TEST(Filtration, OrbitPointMatchesSequentialTorusMoves) {
  Rng rng(41);
  Basis<3> base = random_basis<3>(rng);
  std::vector<CycPoly<3>> params;
  for (int k = 0; k < 4; ++k) params.push_back(random_invertible_poly<3>(rng, 4, false));
  Basis<3> seq = base;
  seq = torus_T(seq, params[0]);
  seq = torus_S(seq, params[1]);
  seq = torus_T(seq, params[2]);
  seq = torus_S(seq, params[3]);
  EXPECT_EQ(orbit_point(OrbitSpec<3>(base, 4), params), seq);
}

TEST(Filtration, RanksAtPThree) {
  OrbitSpec<3> two(Basis<3>::identity(), 2), four(Basis<3>::identity(), 4);
  DimCertificate<3> c2 = orbit_jacobian_rank(two, 1);
  DimCertificate<3> c4 = orbit_jacobian_rank(four, 2);
  EXPECT_EQ(c2.rank, 4);
  EXPECT_EQ(c4.rank, 8);
  EXPECT_TRUE(c2.valid());
  EXPECT_TRUE(c4.valid());
  EXPECT_EQ(dual_jacobian_rank<3>(c4.base, c4.params), 8);
}

TEST(Filtration, ExtraTorusAddsNothing) {
  DimCertificate<3> top = orbit_jacobian_rank(OrbitSpec<3>(Basis<3>::identity(), 4), 7);
  ASSERT_TRUE(top.valid());
  Rng rng(8);
  std::vector<CycPoly<3>> extended = top.params;
  extended.push_back(random_invertible_poly<3>(rng, 9, false));
  EXPECT_EQ(jacobian_rank_at(top.base, extended), 8);
}

TEST(Filtration, CertificateIsDeterministicInSeed) {
  OrbitSpec<3> spec(Basis<3>::identity(), 3);
  DimCertificate<3> a = orbit_jacobian_rank(spec, 99);
  DimCertificate<3> b = orbit_jacobian_rank(spec, 99);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.seed, 99u);
}

TEST(Filtration, RanksAtPFive) {
  Rng rng(5);
  Basis<5> base = random_basis<5>(rng);
  for (int d = 2; d <= 6; ++d) {
    DimCertificate<5> cert = orbit_jacobian_rank(OrbitSpec<5>(base, d), rng.next());
    EXPECT_EQ(cert.rank, 4 * d) << "depth " << d;
  }
}

template <typename T>
class FiltrationProps : public ::testing::Test {};
using FiltrationPrimes = ::testing::Types<Prime<3>, Prime<5>>;
TYPED_TEST_SUITE(FiltrationProps, FiltrationPrimes);

TYPED_TEST(FiltrationProps, PrefixSuffixRankMatchesDualNumbers) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(1, "jacobian") + P);
  for (int t = 0; t < 3; ++t) {
    Basis<P> base = random_basis<P>(rng);
    const int depth = static_cast<int>(rng.uniform(2, P + 1));
    std::vector<CycPoly<P>> params;
    for (int k = 0; k < depth; ++k) params.push_back(random_invertible_poly<P>(rng, 5, false));
    ASSERT_EQ(jacobian_rank_at(base.matrix(), params), dual_jacobian_rank<P>(base.matrix(), params));
  }
}

TYPED_TEST(FiltrationProps, RankIsMonotoneInDepth) {
  constexpr int P = TypeParam::value;
  Rng rng(derive_seed(2, "monotone") + P);
  Basis<P> base = random_basis<P>(rng);
  std::vector<CycPoly<P>> params;
  Index prev = 0;
  for (int d = 1; d <= P + 1; ++d) {
    params.push_back(random_invertible_poly<P>(rng, 9, false));
    Index r = jacobian_rank_at(base.matrix(), params);
    ASSERT_GE(r, prev);
    ASSERT_LE(r, static_cast<Index>(d) * (P - 1));
    prev = r;
  }
}

TYPED_TEST(FiltrationProps, StabilizerIdentities) {
  constexpr int P = TypeParam::value;
  StabilizerReport report = stabilizer_identity_checks<P>(derive_seed(3, "stabilizer") + P, 5);
  for (const auto& [name, ok] : report.checks) EXPECT_TRUE(ok) << name;
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.checks.size(), 8u);
}
