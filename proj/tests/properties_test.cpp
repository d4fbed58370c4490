#include <gtest/gtest.h>

#include "json.hpp"
#include "rae/errors.hpp"
#include "rae/properties.hpp"
#include "rae/random.hpp"
#include "support.hpp"

namespace rae {
namespace {

using testing::fixture;

Solution pick(std::vector<std::size_t> models, std::vector<std::size_t> ces) {
  Solution sol;
  sol.models = std::move(models);
  sol.counterfactuals = std::move(ces);
  return sol;
}

TEST(Properties, NamesAreSnakeCase) {
  EXPECT_STREQ(to_string(PropertyId::kNonEmptiness), "non_emptiness");
  EXPECT_STREQ(to_string(PropertyId::kCounterfactualCoherence), "counterfactual_coherence");
}

TEST(Properties, Ex1Checks) {
  const Scenario s = fixture("fix_ex1");
  const Solution augmented = pick({0, 1, 2}, {0, 1, 2});
  EXPECT_TRUE(check_property(s, augmented, PropertyId::kNonEmptiness));
  EXPECT_TRUE(check_property(s, augmented, PropertyId::kNonTriviality));
  EXPECT_TRUE(check_property(s, augmented, PropertyId::kModelAgreement));
  EXPECT_TRUE(check_property(s, augmented, PropertyId::kMajorityVote));
  EXPECT_FALSE(check_property(s, augmented, PropertyId::kCounterfactualValidity));
  EXPECT_TRUE(check_property(s, augmented, PropertyId::kCounterfactualCoherence));

  const Solution minority = pick({3, 4}, {3, 4});
  EXPECT_TRUE(check_property(s, minority, PropertyId::kModelAgreement));
  EXPECT_FALSE(check_property(s, minority, PropertyId::kMajorityVote));
  EXPECT_TRUE(check_property(s, minority, PropertyId::kCounterfactualValidity));

  const Solution mixed = pick({0, 3}, {});
  EXPECT_FALSE(check_property(s, mixed, PropertyId::kModelAgreement));
  EXPECT_FALSE(check_property(s, mixed, PropertyId::kMajorityVote));
  EXPECT_FALSE(check_property(s, mixed, PropertyId::kNonEmptiness));
  EXPECT_FALSE(check_property(s, mixed, PropertyId::kCounterfactualCoherence));
}

TEST(Properties, EmptySolution) {
  const Scenario s = fixture("fix_loan");
  const Solution none = pick({}, {});
  EXPECT_FALSE(check_property(s, none, PropertyId::kNonEmptiness));
  EXPECT_FALSE(check_property(s, none, PropertyId::kNonTriviality));
  EXPECT_TRUE(check_property(s, none, PropertyId::kModelAgreement));
  EXPECT_FALSE(check_property(s, none, PropertyId::kMajorityVote));
  EXPECT_TRUE(check_property(s, none, PropertyId::kCounterfactualValidity));
  EXPECT_TRUE(check_property(s, none, PropertyId::kCounterfactualCoherence));
}

TEST(Properties, MajorityVoteAcceptsTiedLabels) {
  const Scenario s = fixture("fix_thm3_nonempty");
  EXPECT_TRUE(check_property(s, pick({0}, {0}), PropertyId::kMajorityVote));
  EXPECT_TRUE(check_property(s, pick({1}, {1}), PropertyId::kMajorityVote));
}

TEST(Methods, Parse) {
  EXPECT_EQ(parse_method("naive").kind, MethodKind::kNaive);
  EXPECT_EQ(parse_method("robust").kind, MethodKind::kRobust);
  const MethodConfig m = parse_method("arg:c-preferred");
  EXPECT_EQ(m.kind, MethodKind::kArgumentative);
  EXPECT_EQ(m.semantics, Semantics::kCPreferred);
  EXPECT_FALSE(m.priority.has_value());
  const MethodConfig p = parse_method("arg:s-preferred:accuracy+simplicity,speed");
  ASSERT_TRUE(p.priority.has_value());
  EXPECT_EQ(*p.priority, (std::vector<std::vector<std::string>>{{"accuracy", "simplicity"}, {"speed"}}));
  EXPECT_EQ(p.name(), "arg:s-preferred:accuracy+simplicity,speed");
  EXPECT_THROW(parse_method("majority"), ConfigError);
  EXPECT_THROW(parse_method("arg:grounded"), ConfigError);
  EXPECT_THROW(parse_priority("accuracy,,simplicity"), ConfigError);
}

TEST(Methods, RunUsesPriorityOverride) {
  Scenario s = fixture("fix_ex5");
  s.preference = UniformPreference{};
  MethodConfig m = parse_method("arg:s-preferred:accuracy,simplicity");
  const Solution sol = run_method(s, m, 0);
  EXPECT_EQ(sol.models, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(sol.method, "arg:s-preferred:accuracy,simplicity");
}

std::vector<Scenario> fixture_batch() { return load_batch_file(std::string(RAE_FIXTURE_DIR) + "/fixture_batch.jsonl"); }

TEST(BatchReport, FixtureBatch) {
  const auto batch = fixture_batch();
  std::vector<MethodConfig> methods;
  for (const char* m : {"naive", "augmented", "robust", "arg:s-preferred"}) methods.push_back(parse_method(m));
  const BatchReport r = evaluate_batch(batch, methods, 0);
  ASSERT_EQ(r.methods.size(), 4u);
  const MethodReport& arg = r.methods[3];
  for (PropertyId p : {PropertyId::kNonEmptiness, PropertyId::kModelAgreement,
                       PropertyId::kCounterfactualValidity, PropertyId::kCounterfactualCoherence})
    EXPECT_EQ(arg.rate(p), 1.0) << to_string(p);
  EXPECT_EQ(r.methods[1].rate(PropertyId::kCounterfactualCoherence), 1.0);
  EXPECT_EQ(r.methods[0].rate(PropertyId::kNonEmptiness), 0.0);
  EXPECT_FALSE(arg.accuracy.has_value());
  EXPECT_TRUE(arg.mean_solve_seconds.has_value());
}

TEST(BatchReport, CsvShapeAndAbsentValues) {
  BatchOptions opts;
  opts.timing = false;
  const BatchReport r = evaluate_batch(fixture_batch(), {parse_method("naive"), parse_method("arg:stable")}, 0, opts);
  const std::string csv = report_to_csv(r);
  const std::string header =
      "method,acc,simp,non_emptiness,non_triviality,model_agreement,majority_vote,"
      "counterfactual_validity,counterfactual_coherence,mean_time_ms\n";
  ASSERT_EQ(csv.substr(0, header.size()), header);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("\nnaive,NA,NA,"), std::string::npos);  // no truth, some models lack simplicity
  EXPECT_EQ(csv.substr(csv.size() - 4), ",NA\n");
}

TEST(BatchReport, AccuracyAndSimplicity) {
  GeneratorConfig cfg = testing::fuzz_config(5);
  cfg.truth = TruthModel{};
  const auto batch = generate_batch(cfg, 40, 3);
  const BatchReport r = evaluate_batch(batch, {parse_method("naive")}, 1);
  ASSERT_TRUE(r.methods[0].accuracy.has_value());
  ASSERT_TRUE(r.methods[0].mean_simplicity.has_value());
  EXPECT_GE(*r.methods[0].mean_simplicity, 0.0);
  EXPECT_LE(*r.methods[0].mean_simplicity, 1.0);
  std::size_t correct = 0;
  for (const auto& s : batch)
    correct += naive_ensemble(s, derive_seed(1, s.input_id)).aggregated_label == s.truth_label;
  EXPECT_DOUBLE_EQ(*r.methods[0].accuracy, static_cast<double>(correct) / 40.0);
}

TEST(BatchReport, DeterministicWithoutTiming) {
  const auto batch = generate_batch(testing::fuzz_config(6, 0.3, 1.0), 30, 5);
  BatchOptions opts;
  opts.timing = false;
  const std::vector<MethodConfig> methods = {parse_method("augmented"), parse_method("arg:d-preferred")};
  EXPECT_EQ(report_to_csv(evaluate_batch(batch, methods, 9, opts)),
            report_to_csv(evaluate_batch(batch, methods, 9, opts)));
  EXPECT_EQ(report_to_json(evaluate_batch(batch, methods, 9, opts)),
            report_to_json(evaluate_batch(batch, methods, 9, opts)));
}

TEST(BatchReport, JsonLayout) {
  const BatchReport r = evaluate_batch(fixture_batch(), {parse_method("robust")}, 0);
  const auto doc = nlohmann::json::parse(report_to_json(r));
  ASSERT_EQ(doc["methods"].size(), 1u);
  EXPECT_EQ(doc["methods"][0]["method"], "robust");
  EXPECT_EQ(doc["methods"][0]["scenarios"], 7);
  EXPECT_TRUE(doc["methods"][0]["accuracy"].is_null());
  EXPECT_EQ(doc["methods"][0]["satisfaction"].size(), 6u);
}

TEST(BatchReport, RejectsEmptyInput) {
  EXPECT_THROW(evaluate_batch({}, {parse_method("naive")}, 0), ConfigError);
  EXPECT_THROW(evaluate_batch(fixture_batch(), {}, 0), ConfigError);
}

}  // namespace
}  // namespace rae
