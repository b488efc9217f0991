#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmab/environment.hpp"
#include "rmab/goal_prompt.hpp"
#include "rmab/reward_dsl.hpp"
#include "rmab/whittle.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rmab::fairness {

struct BucketStat {
  int arm_count = 0;
  long actions = 0;
  double rate = 0.0;   // actions / arm-rounds of arms in this bucket
  double share = 0.0;  // actions / total actions
  bool empty = false;  // no arms fell in this bucket
};

struct FeatureAllocationRates {
  std::array<std::vector<BucketStat>, env::kFeatureCount> per_feature;
  long total_actions = 0;

  const std::vector<BucketStat>& buckets(env::Feature f) const {
    return per_feature[env::FeatureSchema::index(f)];
  }
};

// Allocation-rate estimator: an arm-round counts as allocated when the arm
// was acted on that round. Empty buckets get rate 0 and a flag.
FeatureAllocationRates allocation_rates(
    const whittle::SimulationResult& result,
    const std::vector<env::ArmProfile>& cohort,
    const env::FeatureSchema& schema);

// (1/k) * sum_i (rate_i - mean_rate)^2 over a feature's k buckets.
// Empty buckets participate at rate 0.
double dp_variance(const std::vector<BucketStat>& buckets);

// A final reward function is acceptable when it references exactly the
// intended feature groups: no omissions and nothing spurious.
bool is_acceptable(const dsl::RewardAst& ast, const GoalPrompt& goal,
                   const env::FeatureSchema& schema);

struct TaskSuccess {
  std::map<env::Feature, bool> per_feature;
  bool overall = false;
};

// An intended feature succeeds when its targeted buckets jointly receive a
// strictly larger allocation share than a uniform spread would give them.
TaskSuccess task_success(const FeatureAllocationRates& rates,
                         const GoalPrompt& goal,
                         const env::FeatureSchema& schema);

struct UnfairnessCounts {
  // For each threshold, how many unintended features have dp_variance above it.
  std::vector<std::pair<double, int>> absolute;
  // True when some unintended feature's dp_variance exceeds the smallest
  // dp_variance among intended features.
  bool relative = false;
};

UnfairnessCounts unfairness_counts(
    const std::array<double, env::kFeatureCount>& dp_by_feature,
    const GoalPrompt& goal, const std::vector<double>& thresholds);

struct FairnessReport {
  bool acceptable = false;
  std::string acceptable_reason;
  std::array<double, env::kFeatureCount> dp_by_feature{};
  std::array<bool, env::kFeatureCount> has_empty_bucket{};
  TaskSuccess success;
  UnfairnessCounts unfairness;
};

// Full report for a run's final candidate.
FairnessReport evaluate_fairness(const dsl::RewardAst& ast,
                                 const FeatureAllocationRates& rates,
                                 const GoalPrompt& goal,
                                 const std::vector<double>& thresholds);

nlohmann::json rates_to_json(const FeatureAllocationRates& rates);
FeatureAllocationRates rates_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const FairnessReport& report);
FairnessReport report_from_json(const nlohmann::json& j);

}  // namespace rmab::fairness
