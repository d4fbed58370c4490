#include <gtest/gtest.h>

#include "checks.hpp"

namespace rae {
namespace {

constexpr std::size_t kScenarios = 200;

void expect_pass(const checks::Outcome& o) {
  EXPECT_TRUE(o.passed) << o.detail;
  EXPECT_EQ(o.scenarios, kScenarios);
}

TEST(Guarantees, StableEqualsDPreferred) { expect_pass(checks::stable_equals_d_preferred(1, kScenarios)); }
TEST(Guarantees, CPreferredEqualsSPreferred) { expect_pass(checks::c_preferred_equals_s_preferred(2, kScenarios)); }
TEST(Guarantees, AafBijection) { expect_pass(checks::aaf_bijection(3, kScenarios)); }
TEST(Guarantees, SPreferredGuarantees) { expect_pass(checks::s_preferred_guarantees(4, kScenarios)); }
TEST(Guarantees, DPreferredGuarantees) { expect_pass(checks::d_preferred_guarantees(5, kScenarios)); }

TEST(Guarantees, BaselineGuarantees) {
  const auto o = checks::baseline_guarantees(6, kScenarios);
  expect_pass(o);
  EXPECT_GT(o.applicable, 0u);
}

TEST(Guarantees, MethodsCoincideWithoutInvalidity) {
  expect_pass(checks::methods_coincide_without_invalidity(7, kScenarios));
}

TEST(RankingGuarantees, DominantModelInEverySPreferred) {
  const auto o = checks::dominant_model_in_every_s_preferred(8, kScenarios);
  expect_pass(o);
  EXPECT_GT(o.applicable, 20u);
}

TEST(RankingGuarantees, TopModelInSomeExtension) { expect_pass(checks::top_model_in_some_extension(9, kScenarios)); }

TEST(RankingGuarantees, WeakestModelIsDefended) {
  const auto o = checks::weakest_model_is_defended(10, kScenarios);
  expect_pass(o);
  EXPECT_GT(o.applicable, 0u);
}

TEST(RankingGuarantees, CounterfactualsShareLabel) { expect_pass(checks::counterfactuals_share_label(11, kScenarios)); }

TEST(Oracle, FuzzedEquivalence) { expect_pass(checks::oracle_equivalence(12, kScenarios)); }

}  // namespace
}  // namespace rae
