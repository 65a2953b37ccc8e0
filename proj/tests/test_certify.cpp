#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "cyclogab/certify.hpp"
#include "oracles.hpp"

namespace cyclogab {
namespace {

SupportSpec pattern(std::size_t n, std::vector<std::vector<std::size_t>> one_based) {
  std::vector<ColumnSet> zeros;
  for (auto& row : one_based) {
    ColumnSet z;
    for (auto c : row) z.push_back(c - 1);
    zeros.push_back(std::move(z));
  }
  const std::size_t k = zeros.size();
  return SupportSpec(n, k, std::move(zeros));
}

ExactMatrix rational_matrix(const ContextPtr& ctx, std::size_t r, std::size_t c, std::vector<long> values) {
  std::vector<CycloElement> e;
  for (auto v : values) e.push_back(CycloElement::from_rational(ctx, Rational(v)));
  return ExactMatrix(ctx, r, c, std::move(e));
}

TEST(Support, ConstructedAndPerturbed) {
  auto ctx = make_context(11);
  const auto spec = pattern(6, {{1, 2}, {3, 4}, {5, 6}});
  const auto r = construct(spec, ctx, 1200, 1);
  EXPECT_TRUE(verify_support(r.g, spec));
  auto g = r.g;
  g(1, 2) = CycloElement::one(ctx);
  EXPECT_FALSE(verify_support(g, spec));
  EXPECT_TRUE(verify_support(r.g, SupportSpec(6, 3)));
  EXPECT_THROW(verify_support(r.g, SupportSpec(5, 3)), DomainError);
}

TEST(Hamming, SmallExamples) {
  auto ctx = make_context(7);
  EXPECT_EQ(hamming_distance(ExactMatrix::identity(ctx, 2)), 1u);
  EXPECT_EQ(hamming_distance(rational_matrix(ctx, 1, 5, {1, 1, 1, 1, 1})), 5u);
  // Row space of [[1,1,0],[0,0,1]] contains (0,0,1) of weight 1.
  EXPECT_EQ(hamming_distance(rational_matrix(ctx, 2, 3, {1, 1, 0, 0, 0, 1})), 1u);
  // a(1,1,1,0) + b(0,1,2,1) = (a, a+b, a+2b, b) never has two zeros.
  EXPECT_EQ(hamming_distance(rational_matrix(ctx, 2, 4, {1, 1, 1, 0, 0, 1, 2, 1})), 3u);
  EXPECT_THROW(hamming_distance(rational_matrix(ctx, 2, 2, {1, 1, 1, 1})), DomainError);
}

TEST(Hamming, AgreesWithRationalWeightEnumeration) {
  // For a rational generator the zero sets achievable over E and over Q
  // coincide (column ranks do not change under field extension), and with
  // entries in {-1,0,1} and k = 2 the annihilating combinations are small.
  auto ctx = make_context(5);
  Rng rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2;
    const std::size_t n = 3 + uniform_below(rng, 3);
    std::vector<long> vals(k * n);
    for (auto& v : vals) v = static_cast<long>(uniform_below(rng, 3)) - 1;
    const auto g = rational_matrix(ctx, k, n, vals);
    if (rank(g) != k) continue;
    std::size_t best = n;
    for (long a = -4; a <= 4; ++a) {
      for (long b = -4; b <= 4; ++b) {
        if (a == 0 && b == 0) continue;
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += (a * vals[j] + b * vals[n + j]) != 0;
        best = std::min(best, w);
      }
    }
    EXPECT_EQ(hamming_distance(g), best);
  }
}

TEST(Hamming, Budget) {
  auto ctx = make_context(5);
  EXPECT_THROW(hamming_sweep(ExactMatrix::identity(ctx, 2), 0), GuardExceeded);
}

TEST(Certify, SuccessfulConstructionIsMds) {
  auto ctx = make_context(11);
  const auto spec = pattern(6, {{1, 2}, {3, 4}, {5, 6}});
  const auto r = construct(spec, ctx, 1200, 2);
  const auto cert = certify_mrd(r, spec, true);
  EXPECT_TRUE(cert.support_ok);
  EXPECT_TRUE(cert.t_invertible);
  EXPECT_TRUE(cert.points_independent);
  EXPECT_TRUE(cert.generator_consistent);
  ASSERT_TRUE(cert.claimed_rank_distance.has_value());
  EXPECT_EQ(*cert.claimed_rank_distance, 4u);
  EXPECT_EQ(cert.rank_distance_basis, kBasisGabidulin);
  ASSERT_TRUE(cert.hamming_distance.has_value());
  EXPECT_EQ(*cert.hamming_distance, 4u);
  EXPECT_EQ(cert.checked_minors, 20u);
  EXPECT_LE(*cert.claimed_rank_distance, *cert.hamming_distance);
  EXPECT_TRUE(cert.passed());
  // Every maximal minor nonzero, cross-checked with Leibniz.
  const auto one = CycloElement::one(ctx);
  std::vector<std::size_t> cols{0, 1, 2};
  do {
    EXPECT_FALSE(oracle::det_leibniz(r.g.select_columns(cols).entries(), 3, one).is_zero());
  } while (detail::next_combination(cols, 6));
}

TEST(Certify, DependentPointsGiveNoClaim) {
  auto ctx = make_context(7);
  const auto spec = pattern(3, {{1}, {2}});
  auto r = construct(spec, ctx, 100, 4);
  r.points.x[2] = r.points.x[0] + r.points.x[1];
  const auto cert = certify_mrd(r, spec, true);
  EXPECT_FALSE(cert.points_independent);
  EXPECT_FALSE(cert.claimed_rank_distance.has_value());
  EXPECT_FALSE(cert.passed());
}

TEST(Certify, TamperedGeneratorFailsConsistency) {
  auto ctx = make_context(7);
  const auto spec = pattern(4, {{1}, {2}});
  auto r = construct(spec, ctx, 100, 5);
  r.g(0, 3) = r.g(0, 3) + CycloElement::one(ctx);
  const auto cert = certify_mrd(r, spec, true);
  EXPECT_FALSE(cert.generator_consistent);
  EXPECT_FALSE(cert.passed());
}

TEST(Certify, SkippedSweepLeavesDistanceNull) {
  auto ctx = make_context(11);
  const auto spec = pattern(5, {{1}, {2}});
  const auto cert = certify_mrd(construct(spec, ctx, 500, 6), spec, false);
  EXPECT_FALSE(cert.hamming_distance.has_value());
  EXPECT_EQ(cert.checked_minors, 0u);
  EXPECT_TRUE(cert.passed());
}

TEST(Subcode, TwoRowsSharingTwoZeros) {
  auto ctx = make_context(5);
  const auto spec = pattern(4, {{1, 2}, {1, 2}});
  const auto sub = build_subcode(spec, ctx, 1000, 1);
  ASSERT_TRUE(sub.certificate.ell.has_value());
  EXPECT_EQ(*sub.certificate.ell, 4u);
  EXPECT_EQ(sub.g_sub.rows(), 2u);
  EXPECT_EQ(sub.padded.g.rows(), 4u);
  EXPECT_TRUE(check_condition(SupportSpec(4, 4, {{0, 1}, {0, 1}, {}, {}})).holds);
  ASSERT_TRUE(sub.certificate.hamming_distance.has_value());
  EXPECT_EQ(*sub.certificate.hamming_distance, 1u);
  EXPECT_EQ(*sub.certificate.claimed_rank_distance, 1u);
  EXPECT_EQ(sub.certificate.rank_distance_basis, kBasisSubcode);
  EXPECT_TRUE(sub.certificate.passed());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(sub.g_sub(i, j), sub.padded.g(i, j));
  }
  EXPECT_EQ(certify_subcode(sub.padded, spec), sub.certificate);
}

TEST(Subcode, SingleRowWithThreeZeros) {
  auto ctx = make_context(7);
  const auto spec = pattern(5, {{1, 2, 3}});
  const auto sub = build_subcode(spec, ctx, 1000, 2);
  EXPECT_EQ(*sub.certificate.ell, 4u);
  EXPECT_EQ(*sub.certificate.hamming_distance, 2u);
  EXPECT_TRUE(sub.certificate.passed());
}

TEST(Subcode, EllBeyondLengthIsRejected) {
  auto ctx = make_context(5);
  EXPECT_THROW(build_subcode(pattern(4, {{1, 2, 3}, {1, 2, 3}}), ctx, 100, 1), DomainError);
}

TEST(Subcode, SatisfiedConditionDegeneratesToMrd) {
  auto ctx = make_context(11);
  const auto spec = pattern(6, {{1, 2}, {3, 4}, {5, 6}});
  const auto sub = build_subcode(spec, ctx, 1200, 3);
  EXPECT_EQ(*sub.certificate.ell, 3u);
  EXPECT_EQ(sub.certificate.rank_distance_basis, kBasisGabidulin);
  EXPECT_EQ(*sub.certificate.hamming_distance, 4u);
  EXPECT_EQ(certify_subcode(sub.padded, spec), sub.certificate);
}

TEST(Certify, ViolatingPatternsNeverReachFullDistance) {
  // Necessity, checked empirically: the best subcode falls short of n-k+1.
  auto ctx = make_context(7);
  for (const auto& spec : {pattern(5, {{1, 2}, {1, 2}}), pattern(6, {{1, 2, 3}, {1, 2}, {4}}),
                           pattern(5, {{1}, {1}, {1}})}) {
    ASSERT_FALSE(check_condition(spec).holds);
    const auto sub = build_subcode(spec, ctx, 2000, 8);
    EXPECT_TRUE(sub.certificate.passed());
    EXPECT_LT(*sub.certificate.hamming_distance, spec.n() - spec.k() + 1);
  }
}

}  // namespace
}  // namespace cyclogab
