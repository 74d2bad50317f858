#include <random>

#include <gtest/gtest.h>

#include "ulrichlab/ulrichlab.hpp"

using namespace ulrichlab;

namespace {

AmbientSpace with_f(int n, int d, std::uint32_t p, const char* text) {
  return AmbientSpace::hypersurface(n, d, p, parse_polynomial(text, PrimeField(p), static_cast<std::size_t>(n + 1)));
}

const char* kSplitQuartic = "x0^4+x1^4+x2^4+x3^4+x0*x1*x2*x3";
const char* kSplitQuinticThreefold = "x0^5+x1^5+x2^5+x3^5+x4^5+x0*x1*x2*x3*x4";

void expect_chain(const Verdict& v) {
  if (v.ulrich) {
    EXPECT_TRUE(v.almost_ulrich);
  }
  if (v.almost_ulrich) {
    EXPECT_TRUE(v.weakly_ulrich);
    EXPECT_TRUE(v.acm);
  }
}

}  // namespace

TEST(Classify, FrobeniusPushforwardOnQuarticCharTwo) {
  const auto v = classify(AmbientSpace::hypersurface(3, 4, 2), FrobPush{1, 1});
  EXPECT_TRUE(v.almost_ulrich);
  EXPECT_FALSE(v.ulrich);
  EXPECT_EQ(v.h_q_E_minus_q, 4);
  const auto* top = v.find("ulrich_top", 2);
  ASSERT_NE(top, nullptr);
  ASSERT_FALSE(top->holds());
  EXPECT_EQ(top->result.counterexample->m, 2);
  EXPECT_EQ(top->result.counterexample->dim, 4);
}

TEST(Classify, B1OnSplitQuartic) {
  const auto v = classify(with_f(3, 4, 3, kSplitQuartic), B1Sheaf{1});
  EXPECT_TRUE(v.almost_ulrich);
  EXPECT_FALSE(v.ulrich);
  EXPECT_EQ(v.h_0_E_minus_1, 0);
  EXPECT_EQ(v.h_q_E_minus_q, 16);
}

TEST(Classify, QuinticCharThree) {
  EXPECT_TRUE(classify(AmbientSpace::hypersurface(3, 5, 3), FrobPush{2, 1}).almost_ulrich);
}

TEST(Classify, B1OnNonSplitPropagatesNotSplit) {
  EXPECT_THROW(classify(with_f(3, 4, 3, "x0^4+x1^4+x2^4+x3^4"), B1Sheaf{1}), NotSplit);
}

TEST(Classify, RejectsZeroDimensionalSpace) {
  EXPECT_THROW(classify(AmbientSpace::hypersurface(1, 3, 2), FrobPush{0, 0}), UnsupportedSpace);
}

TEST(Classify, PushforwardsAreAlwaysACMOnHypersurfaces) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int n = 2; n <= 4; ++n)
      for (int d = 1; d <= 7; ++d)
        for (int k = -3; k <= 6; k += 3) {
          const auto v = classify(AmbientSpace::hypersurface(n, d, p), FrobPush{k, 1});
          EXPECT_TRUE(v.acm) << "p=" << p << " n=" << n << " d=" << d << " k=" << k;
        }
}

TEST(Classify, ImplicationChainAndWitnessesReproduce) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> twist(-4, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 3 : 5;
    const bool pn = trial % 5 == 0;
    const auto space = pn ? AmbientSpace::projective_space(2 + trial % 3, p)
                          : AmbientSpace::hypersurface(2 + trial % 3, 1 + trial % 7, p);
    const BundleSpec spec = (pn && trial % 2) ? BundleSpec(B1Sheaf{twist(rng)}) : FrobPush{twist(rng), twist(rng)};
    const auto v = classify(space, spec);
    expect_chain(v);
    for (const auto& c : v.conditions) {
      if (c.holds()) continue;
      const auto& w = *c.result.counterexample;
      EXPECT_TRUE(c.ray.contains(w.m));
      EXPECT_EQ(bundle_cohom_dim(space, spec, c.j, -w.m), w.dim);
      EXPECT_NE(w.dim, 0);
    }
  }
}

TEST(Classify, B1HasNoCohomologyOnSplitSpaces) {
  for (const auto& space : {with_f(3, 4, 3, kSplitQuartic), with_f(4, 5, 2, kSplitQuinticThreefold),
                            with_f(3, 3, 2, "x0^3+x1^3+x2^3+x3^3+x0*x1*x2"), AmbientSpace::projective_space(3, 5)}) {
    const auto split = with_known_splitting(space);
    for (int c = -2; c <= 3; ++c)
      for (int i = 0; i <= split.q(); ++i) EXPECT_EQ(bundle_cohom_dim(split, B1Sheaf{c}, i, -c), 0);
  }
}

TEST(Audit, MainTheoremAgreesInsideHypothesis) {
  const auto r = audit_theorem(TheoremId::Main, AmbientSpace::hypersurface(3, 5, 3));
  EXPECT_TRUE(r.hypotheses_met());
  EXPECT_TRUE(r.agree());
  EXPECT_EQ(r.disagreements(), 0u);
  EXPECT_EQ(r.bundle, BundleSpec(FrobPush{2, 1}));
  ASSERT_TRUE(r.verdict);
  EXPECT_TRUE(r.verdict->almost_ulrich);
}

TEST(Audit, MainTheoremOutsideHypothesisStillClassifies) {
  // d - 3 = 3 >= p = 2.
  const auto r = audit_theorem(TheoremId::Main, AmbientSpace::hypersurface(3, 6, 2));
  EXPECT_FALSE(r.hypotheses_met());
  ASSERT_TRUE(r.verdict);
  // h^0(E(-2)) = h^0(O_X(3 - 2)) = 4 breaks the h^0 range.
  EXPECT_FALSE(r.agree());
  const auto it = std::find_if(r.claims.begin(), r.claims.end(), [](const ClaimCheck& c) { return c.id == "h0_ray"; });
  ASSERT_NE(it, r.claims.end());
  ASSERT_TRUE(it->witness);
  EXPECT_EQ(it->witness->m, 2);
  EXPECT_EQ(it->witness->dim, 4);
}

TEST(Audit, CalabiYauSplitQuinticThreefold) {
  const auto r = audit_theorem(TheoremId::CalabiYau, with_f(4, 5, 2, kSplitQuinticThreefold));
  EXPECT_TRUE(r.hypotheses_met());
  EXPECT_EQ(r.bundle, BundleSpec(B1Sheaf{2}));
  EXPECT_TRUE(r.agree());
  EXPECT_TRUE(r.verdict->almost_ulrich);
  // The accompanying remark's h^0(E(-1)) = 0 fails in dimension three.
  ASSERT_EQ(r.remarks.size(), 1u);
  ASSERT_TRUE(r.remarks[0].witness);
  EXPECT_EQ(r.remarks[0].witness->dim, 10);
}

TEST(Audit, CalabiYauSplitQuarticSurfaceRemarkHolds) {
  const auto r = audit_theorem(TheoremId::CalabiYau, with_f(3, 4, 3, kSplitQuartic));
  EXPECT_TRUE(r.agree());
  ASSERT_EQ(r.remarks.size(), 1u);
  EXPECT_TRUE(r.remarks[0].agree());
}

TEST(Audit, CalabiYauNotSplitReportsError) {
  const auto r = audit_theorem(TheoremId::CalabiYau, with_f(3, 4, 3, "x0^4+x1^4+x2^4+x3^4"));
  EXPECT_EQ(r.error, std::optional<std::string>("NotSplit"));
  EXPECT_FALSE(r.hypotheses_met());
  EXPECT_FALSE(r.agree());
}

TEST(Audit, CalabiYauCriterionOnP4) {
  // q = 4: B^1(3) is not almost Ulrich because h^0(B^1(1)) != 0, matching the criterion.
  const auto r = audit_theorem(TheoremId::CalabiYau, AmbientSpace::projective_space(4, 2));
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_TRUE(r.claims[0].agree());
  EXPECT_FALSE(r.verdict->almost_ulrich);
  EXPECT_FALSE(r.hypotheses_met());
}

TEST(Audit, GeneralTypeQuinticBoundary) {
  const auto r = audit_theorem(TheoremId::GenType, AmbientSpace::hypersurface(3, 5, 3));
  EXPECT_TRUE(r.hypotheses_met());
  EXPECT_EQ(r.bundle, BundleSpec(FrobPush{1, 1}));
  EXPECT_EQ(r.disagreements(), 1u);
  for (const auto& c : r.claims) {
    if (c.id == "top_boundary") {
      EXPECT_EQ(c.j, 2);
      ASSERT_TRUE(c.witness);
      EXPECT_EQ(c.witness->m, 1);
      EXPECT_EQ(c.witness->dim, 1);
    } else {
      EXPECT_TRUE(c.agree()) << c.id;
    }
  }
}

TEST(Audit, GeneralTypeRejectsSmallDegree) {
  EXPECT_THROW(audit_theorem(TheoremId::GenType, AmbientSpace::hypersurface(3, 4, 3)), UnsupportedSpace);
  EXPECT_THROW(audit_theorem(TheoremId::GenType, AmbientSpace::projective_space(3, 3)), UnsupportedSpace);
}

TEST(Audit, TheoremIdsParse) {
  for (auto id : {TheoremId::Main, TheoremId::GenType, TheoremId::CalabiYau}) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_THROW(parse_theorem_id("mehta"), ParseError);
}
