#include <gtest/gtest.h>

#include <cstdint>

#include "oracles.hpp"
#include "zp/zp.hpp"

namespace {

using zp::Errc;
using zp::PrimeModulus;
using zp::ResidueSet;
using zp::TransformContext;

ResidueSet S(std::uint32_t p, std::initializer_list<zp::Residue> m) { return ResidueSet::from_members(PrimeModulus(p), m); }

Errc build_error(const ResidueSet& a, const ResidueSet& b) {
  try {
    TransformContext::build(a, b);
  } catch (const zp::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected build to fail";
  return Errc::parse_error;
}

TEST(TransformContext, Examples) {
  auto c7 = TransformContext::build(S(7, {0}), S(7, {0, 1}));
  EXPECT_EQ(c7.sum(), S(7, {0, 1}));
  EXPECT_EQ(c7.companion(), S(7, {1, 2, 3, 4, 5}));
  EXPECT_EQ(c7.sum_plus_b(), S(7, {0, 1, 2}));
  EXPECT_EQ(c7.excess(), S(7, {2}));

  auto c5 = TransformContext::build(S(5, {0, 1}), S(5, {0, 1}));
  EXPECT_EQ(c5.sum(), S(5, {0, 1, 2}));
  EXPECT_EQ(c5.excess(), S(5, {3}));

  auto c3 = TransformContext::build(S(3, {0}), S(3, {0, 1}));
  EXPECT_EQ(c3.sum(), S(3, {0, 1}));
  EXPECT_EQ(c3.excess(), S(3, {2}));
}

TEST(TransformContext, EachHypothesisHasItsOwnError) {
  EXPECT_EQ(build_error(S(7, {0}), S(5, {0, 1})), Errc::modulus_mismatch);
  EXPECT_EQ(build_error(S(7, {}), S(7, {0, 1})), Errc::empty_set);
  EXPECT_EQ(build_error(S(7, {0}), S(7, {1, 2})), Errc::zero_not_in_b);
  EXPECT_EQ(build_error(S(7, {0}), S(7, {0})), Errc::b_too_small);
  EXPECT_EQ(build_error(S(5, {0, 1, 2}), S(5, {0, 1, 2})), Errc::sumset_full);
}

TEST(TransformContext, NormalizerTranslatesExplicitly) {
  ResidueSet b = S(7, {3, 5});
  EXPECT_EQ(zp::normalize_zero_in_b(b), S(7, {0, 2}));
  EXPECT_EQ(zp::normalize_zero_in_b(b, 5), S(7, {0, 5}));
  EXPECT_THROW(zp::normalize_zero_in_b(b, 4), zp::Error);
}

TEST(Split, Examples) {
  auto c7 = TransformContext::build(S(7, {0}), S(7, {0, 1}));
  auto s7 = zp::split(c7, 2);
  EXPECT_EQ(s7.lower, S(7, {0}));
  EXPECT_EQ(s7.upper, S(7, {1}));

  // Oracle: C = {1,2}, e + C = {4,0}; B cap {4,0} = {0}.
  auto c5 = TransformContext::build(S(5, {0, 1}), S(5, {0, 1}));
  EXPECT_EQ(c5.companion(), S(5, {1, 2}));
  auto s5 = zp::split(c5, 3);
  EXPECT_EQ(s5.lower, S(5, {0}));
  EXPECT_EQ(s5.upper, S(5, {1}));
  EXPECT_EQ(s5.lower | s5.upper, S(5, {0, 1}));

  try {
    zp::split(c7, 3);
    ADD_FAILURE();
  } catch (const zp::Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_excess_set);
  }
}

TEST(Checks, ExamplesHold) {
  for (auto [a, b, e] : {std::tuple{S(7, {0}), S(7, {0, 1}), 2u}, std::tuple{S(5, {0, 1}), S(5, {0, 1}), 3u}}) {
    auto ctx = TransformContext::build(a, b);
    auto s = zp::split(ctx, e);
    EXPECT_EQ(zp::check_partition(ctx, s).conclusion, true);
    EXPECT_EQ(zp::check_containment(ctx, s).conclusion, true);
    EXPECT_EQ(zp::check_descent(ctx, s).conclusion, true);
    EXPECT_EQ(zp::check_excess(ctx).conclusion, true);
  }
}

TEST(Lemma1, Example) {
  auto ctx = TransformContext::build(S(7, {0}), S(7, {0, 1}));
  auto v = zp::lemma1_check(ctx);
  ASSERT_TRUE(v.hypotheses_met());
  EXPECT_TRUE(*v.conclusion);
  EXPECT_EQ(v.witness.deficiency, 0);
}

TEST(Lemma1, GateWhenSomeSplitIsLarge) {
  // A = {0}, B = {0,1,2}: E = {3,4}, C = {1..8}; e = 4 gives B_e = {0,1}.
  auto ctx = TransformContext::build(S(11, {0}), S(11, {0, 1, 2}));
  bool some_large = false;
  for (auto& s : zp::all_splits(ctx)) some_large |= s.lower.size() >= 2;
  ASSERT_TRUE(some_large);
  EXPECT_FALSE(zp::lemma1_check(ctx).hypotheses_met());
}

TEST(TransformSuite, ExhaustiveSmallPrimes) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeModulus m(p);
    for (std::uint64_t am = 1; am < (std::uint64_t{1} << p); ++am)
      for (std::uint64_t rest = 1; rest < (std::uint64_t{1} << (p - 1)); ++rest) {
        ResidueSet a = ResidueSet::from_mask(m, am);
        ResidueSet b = ResidueSet::from_mask(m, 1 | (rest << 1));
        if (zp::sumset(a, b).is_full()) continue;
        auto ctx = TransformContext::build(a, b);
        ASSERT_FALSE(ctx.excess().is_empty());
        std::size_t total = 0;
        for (auto& s : zp::all_splits(ctx)) {
          total += s.lower.size() + s.upper.size();
          ASSERT_TRUE(s.lower.contains(0));
        }
        ASSERT_EQ(total, ctx.excess().size() * b.size());
        auto v = zp::transform_suite(ctx);
        ASSERT_TRUE(v.holds()) << v.to_string();
        ASSERT_TRUE(zp::lemma1_check(ctx).holds());
      }
  }
}

TEST(TransformSuite, InvariantUnderNormalizingTranslation) {
  PrimeModulus m(7);
  for (std::uint64_t am = 1; am < 128; am += 3)
    for (std::uint64_t bm = 1; bm < 128; bm += 5) {
      ResidueSet a = ResidueSet::from_mask(m, am), b = ResidueSet::from_mask(m, bm);
      if (b.size() < 2 || zp::sumset(a, b).is_full()) continue;
      std::optional<std::size_t> excess_size;
      b.for_each([&](zp::Residue member) {
        auto ctx = TransformContext::build(a, zp::normalize_zero_in_b(b, member));
        EXPECT_EQ(ctx.deficiency(), zp::deficiency(a, b));
        EXPECT_TRUE(zp::transform_suite(ctx).holds());
        if (!excess_size) excess_size = ctx.excess().size();
        EXPECT_EQ(ctx.excess().size(), *excess_size);
      });
    }
}

}  // namespace
