#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmab/environment.hpp"
#include "rmab/reward_dsl.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rmab::whittle {

// One arm's two-state MDP: transition model plus the reward of each
// resultant state under the candidate expression, discounted at beta.
struct ArmMdp {
  env::TransitionModel transitions;
  double reward_bad = 0.0;   // reward when the next state is 0
  double reward_good = 0.0;  // reward when the next state is 1
  double beta = 0.9;
};

// p_good(s,a) * r(1) + (1 - p_good(s,a)) * r(0)
double expected_next_reward(const ArmMdp& mdp, int state, int action);

struct SubsidizedSolution {
  std::array<double, 2> value{};
  std::array<int, 2> greedy{};  // 0 passive, 1 active; ties go passive
  int iterations = 0;
};

// Value iteration on the subsidized MDP: the passive action earns lambda on
// top of its expected reward. Stops when the sup-norm change drops below
// tol * (1 - beta).
SubsidizedSolution subsidized_value(const ArmMdp& mdp, double lambda,
                                    double tol);

struct IndexResult {
  double index = 0.0;
  // Set when no active->passive flip was found inside the bracket; the
  // returned index is the clamped endpoint.
  bool bracket_warning = false;
};

// The subsidy at which the greedy action in `state` flips from active to
// passive, located by bisection over [-(1 + r1/(1-beta)), +(1 + r1/(1-beta))].
IndexResult whittle_index(const ArmMdp& mdp, int state, double tol);

struct SimConfig {
  int budget = 20;
  int horizon = 12;    // rounds per episode
  int episodes = 10;
  double beta = 0.9;
  double vi_tol = 1e-6;
  double bisect_tol = 1e-4;
  double p_init_good = 0.5;  // initial-state Bernoulli parameter
};

struct SimulationResult {
  int rounds = 0;  // per episode
  int episodes = 0;
  int budget = 0;
  // Indexed by global round e * rounds + t.
  std::vector<std::vector<int>> action_log;       // acted arm ids, ascending
  std::vector<std::vector<std::uint8_t>> state_log;  // state at decision time
  std::vector<std::vector<std::uint8_t>> final_states;  // per episode
  std::vector<long> allocation_count;  // per arm, all episodes
  std::vector<int> final_good_count;   // episodes ending engaged, per arm
  long total_actions = 0;
  long total_engagement = 0;  // resultant states equal to 1, summed
  bool any_bracket_warning = false;

  long arm_rounds() const {
    return static_cast<long>(rounds) * episodes;
  }
};

// Whittle-index policy: each round acts on the min(B, n) arms with the
// highest index for their current state, ties broken by ascending arm id.
// Indices are computed once per (arm, state); rewards come from evaluating
// the expression on each arm's features. An evaluation failure aborts with
// CandidateInvalidError.
SimulationResult simulate_policy(const std::vector<env::ArmProfile>& cohort,
                                 const dsl::RewardAst& reward,
                                 const SimConfig& config, std::uint64_t seed);

// Same dynamics, but each round acts on a uniformly random B-subset.
SimulationResult simulate_uniform(const std::vector<env::ArmProfile>& cohort,
                                  const SimConfig& config, std::uint64_t seed);

// Lower-level entry point with precomputed per-arm resultant-state rewards.
struct ArmRewards {
  double bad = 0.0;
  double good = 0.0;
};

SimulationResult simulate_with_rewards(
    const std::vector<env::ArmProfile>& cohort,
    std::span<const ArmRewards> rewards, const SimConfig& config,
    std::uint64_t seed);

nlohmann::json simulation_to_json(const SimulationResult& result);

// arm_id, bucket per feature, allocation_count, final-state counts.
std::string simulation_to_csv(const SimulationResult& result,
                              const std::vector<env::ArmProfile>& cohort);

}  // namespace rmab::whittle
