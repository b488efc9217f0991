#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmab/environment.hpp"
#include "rmab/fairness.hpp"
#include "rmab/goal_prompt.hpp"
#include "rmab/llm_gateway.hpp"
#include "rmab/reward_dsl.hpp"
#include "rmab/whittle.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rmab::search {

// One proposed reward function in one generation. Invalid candidates are
// kept (with their failure reason) so the run log shows what the model did.
struct Candidate {
  std::string raw_llm_text;
  std::string expression_text;
  std::optional<dsl::RewardAst> ast;
  dsl::ValidationReport validation;
  std::optional<whittle::SimulationResult> simulation;
  std::optional<fairness::FeatureAllocationRates> allocation_summary;

  bool usable() const { return ast.has_value() && validation.usable(); }
  bool simulated() const { return simulation.has_value(); }
};

struct GenerationRecord {
  std::vector<Candidate> candidates;
  int chosen_index = -1;  // into candidates; -1 when nothing was usable
  std::string reflection_raw_text;
  bool reflection_called = false;
  bool used_fallback = false;
};

struct SearchOutcome {
  std::vector<GenerationRecord> generations;
  std::vector<std::string> reward_history;  // chosen expression per generation
  int final_generation = -1;
  int final_candidate = -1;

  bool has_final() const { return final_generation >= 0; }
  const Candidate& final() const {
    return generations[static_cast<std::size_t>(final_generation)]
        .candidates[static_cast<std::size_t>(final_candidate)];
  }
};

// Chain-of-thought generation prompt: feature index list, task instructions,
// the worked example, the goal sentence and the reward history ("(none)"
// when empty).
std::string render_generation_prompt(const GoalPrompt& goal,
                                     const std::vector<std::string>& history);

// Lists every usable candidate (numbered from 1) with its per-feature bucket
// allocation shares at three decimals and asks for "ANSWER: <k>".
std::string render_reflection_prompt(const GoalPrompt& goal,
                                     const std::vector<const Candidate*>& shown);

// First "ANSWER: k" in the reflection response, or nullopt.
std::optional<int> parse_reflection_answer(const std::string& text);

struct SearchConfig {
  int candidates_per_generation = 3;
  int generations = 5;
  double generation_temperature = 1.0;
  double reflection_temperature = 0.0;
  int max_output_tokens = 1024;
  std::size_t probe_cap = 200;
  whittle::SimConfig sim;
  std::uint64_t sim_seed = 0;
  std::string run_tag;  // folded into request tags
};

class SearchRunner {
 public:
  SearchRunner(const GoalPrompt& goal,
               const std::vector<env::ArmProfile>& cohort,
               llm::Gateway& gateway, const SearchConfig& config,
               llm::Transcript* transcript);

  // Runs the full propose -> evaluate -> select loop. Throws
  // SearchFailedError when no generation produced a usable choice.
  SearchOutcome run();

  // Individual steps, exposed so they can be exercised directly.
  std::vector<Candidate> propose_candidates(const std::string& prompt_text,
                                            int generation_number);
  void evaluate_candidates(std::vector<Candidate>& candidates);
  // Returns the index into `candidates` of the chosen one.
  int select_candidate(std::vector<Candidate>& candidates,
                       int generation_number, GenerationRecord& record);

 private:
  double intended_share(const Candidate& candidate) const;

  GoalPrompt goal_;  // copied: outlives any caller temporary
  const std::vector<env::ArmProfile>& cohort_;
  llm::Gateway& gateway_;
  SearchConfig config_;
  llm::Transcript* transcript_;
  std::vector<dsl::ProbeVector> probes_;
};

nlohmann::json candidate_to_json(const Candidate& candidate);
nlohmann::json outcome_to_json(const SearchOutcome& outcome);
// Restores the pieces replay needs: raw texts, reflection texts and call
// flags, chosen indices, expressions and history.
SearchOutcome outcome_from_json(const nlohmann::json& doc);

}  // namespace rmab::search
