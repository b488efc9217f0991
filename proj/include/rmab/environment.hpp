#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmab/rng.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rmab::env {

// The six feature groups, in feature-vector slot order.
enum class Feature : int {
  kAge = 0,
  kLanguage = 1,
  kEducation = 2,
  kPhone = 3,
  kTimes = 4,
  kIncome = 5,
};

inline constexpr int kFeatureCount = 6;
inline constexpr int kSlotCount = 34;

constexpr std::array<Feature, kFeatureCount> all_features() {
  return {Feature::kAge,   Feature::kLanguage, Feature::kEducation,
          Feature::kPhone, Feature::kTimes,    Feature::kIncome};
}

// Fixed bucket layout of the 34-slot one-hot feature vector:
//   Age:5 [0,5)  Language:5 [5,10)  Education:7 [10,17)
//   Phone:3 [17,20)  Times:6 [20,26)  Income:8 [26,34)
class FeatureSchema {
 public:
  static const FeatureSchema& standard();

  int bucket_count(Feature f) const { return bucket_counts_[index(f)]; }
  int group_start(Feature f) const { return group_starts_[index(f)]; }
  Feature group_of_slot(int slot) const;
  int slot(Feature f, int bucket) const { return group_start(f) + bucket; }

  static std::string_view name(Feature f);
  static Feature feature_from_name(std::string_view name);
  std::string bucket_label(Feature f, int bucket) const;

  static constexpr int index(Feature f) { return static_cast<int>(f); }

 private:
  FeatureSchema();
  std::array<int, kFeatureCount> bucket_counts_;
  std::array<int, kFeatureCount> group_starts_;
};

// Latent per-beneficiary scores, all in [0, 1].
struct ContinuousProfile {
  double age = 0.0;
  double education = 0.0;
  double language = 0.0;
  double income = 0.0;
  double phone_ownership = 0.0;
  double times_to_be_called = 0.0;
};

// Per-group logit weights that shape the active/passive transition gap.
struct WeightVector {
  double age = 0.8;
  double income = 1.5;
  double language = -0.3;
  double education = 1.5;
  double phone = -1.5;
  double times = 0.3;

  double weight(Feature f) const;
};

// Two-state, two-action transition model. p_good[s][a] is the probability of
// landing in state 1 from state s under action a.
struct TransitionModel {
  std::array<std::array<double, 2>, 2> p_good{{{0.0, 0.0}, {0.0, 0.0}}};
  double delta = 0.0;
};

struct ArmProfile {
  int arm_id = 0;
  ContinuousProfile continuous;
  std::array<int, kFeatureCount> buckets{};
  std::array<int, kSlotCount> feature_vector{};
  TransitionModel transitions;

  std::array<double, kSlotCount> feature_doubles() const;
};

struct TransitionConfig {
  double delta_max = 0.3;
  double epsilon = 0.05;
  // Passive good-state probability ranges, drawn per arm.
  std::array<double, 2> passive_bad{0.05, 0.35};   // from state 0
  std::array<double, 2> passive_good{0.45, 0.90};  // from state 1
};

struct CohortConfig {
  WeightVector weights;
  TransitionConfig transitions;
};

// Draws the six latent scores in topological order of the structural model.
// The three exogenous variables are uniform; income, phone ownership and call
// time mix their parents with fresh uniform noise at strength alpha.
ContinuousProfile sample_continuous_profile(Rng& rng, double alpha);

// Pure core of the structural equations; exposed so the arithmetic can be
// checked against fixed inputs.
ContinuousProfile apply_structural_equations(double age, double education,
                                             double language, double u_income,
                                             double u_phone, double u_times,
                                             double alpha);

// Equal-width bucketing of [0,1]: value u in a group with n buckets maps to
// min(floor(u*n), n-1).
std::array<int, kFeatureCount> bucketize(const ContinuousProfile& profile,
                                         const FeatureSchema& schema);

std::array<int, kSlotCount> encode_features(
    const std::array<int, kFeatureCount>& buckets, const FeatureSchema& schema);

// delta = delta_max * sigmoid(sum_f w_f * (v_f - 0.5)) with v_f the bucket
// position normalized to [0,1]. Negative weights favor lower buckets.
double compute_delta(const std::array<int, kFeatureCount>& buckets,
                     const WeightVector& weights, double delta_max);

TransitionModel build_transition_model(
    const std::array<int, kFeatureCount>& buckets, const WeightVector& weights,
    Rng& rng, const TransitionConfig& config);

std::vector<ArmProfile> generate_cohort(int n, double alpha,
                                        std::uint64_t seed,
                                        const CohortConfig& config);

nlohmann::json cohort_to_json(const std::vector<ArmProfile>& cohort);
std::vector<ArmProfile> cohort_from_json(const nlohmann::json& doc);

}  // namespace rmab::env
