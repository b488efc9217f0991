#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rmab/environment.hpp"
#include "rmab/fairness.hpp"
#include "rmab/goal_prompt.hpp"
#include "rmab/whittle.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rmab::experiment {

enum class ProviderKind { kScripted, kHttp };

struct ExperimentConfig {
  // cohort
  int n = 100;
  std::vector<double> alphas{0.2, 0.8};
  std::uint64_t seed_base = 20250809;
  env::CohortConfig cohort;

  whittle::SimConfig sim;

  // search loop
  int candidates_per_generation = 3;
  int generations = 5;
  double generation_temperature = 1.0;
  double reflection_temperature = 0.0;
  int max_output_tokens = 1024;
  int probe_cap = 200;

  // gateway
  ProviderKind provider_kind = ProviderKind::kScripted;
  std::filesystem::path script_path;
  std::string endpoint;
  std::string model;
  std::string credential_env = "RMAB_LLM_API_KEY";
  int max_attempts = 4;
  int backoff_ms = 250;
  int min_interval_ms = 0;
  int concurrency = 1;

  // prompts: language label -> file, plus the id -> intended-buckets catalog
  std::map<std::string, std::filesystem::path> prompt_files;
  std::map<int, std::map<env::Feature, std::set<int>>> catalog;
  // loaded goal prompts: language -> prompt id -> goal
  std::map<std::string, std::map<int, GoalPrompt>> goals;

  int runs_per_cell = 20;
  std::vector<double> thresholds{0.0005, 0.001, 0.002, 0.005, 0.01};
  std::filesystem::path output_dir = "out";
  bool svg = false;
};

// Parses and fully validates a config file (JSON, // comments allowed).
// Relative paths resolve against the config file's directory. Errors name
// the offending field or file.
ExperimentConfig load_config(const std::filesystem::path& path);

struct CellKey {
  std::string language;
  int prompt_id = 0;
  double alpha = 0.0;
  int run_index = 0;

  std::string alpha_text() const;
  std::string stem() const;  // e.g. en_p1_a0.2_r00 — file stem for this run
  std::string hash_text() const;
};

std::uint64_t run_seed(const ExperimentConfig& config, const CellKey& key);

struct RunRecord {
  CellKey key;
  std::uint64_t seed = 0;
  std::string failure_reason;  // empty on success
  std::string final_expression;
  std::optional<fairness::FairnessReport> fairness;
  std::optional<fairness::FeatureAllocationRates> final_allocation;
  std::string outcome_file;
  std::string transcript_file;

  bool failed() const { return !failure_reason.empty(); }
};

nlohmann::json record_to_json(const RunRecord& record,
                              const ExperimentConfig& config);
RunRecord record_from_json(const nlohmann::json& doc);

struct RunStats {
  int completed = 0;
  int failed = 0;
  int skipped = 0;
};

// Executes the full language x prompt x alpha x run grid. Each run is
// persisted atomically (write-then-rename) as soon as it finishes. With
// `resume`, runs whose record file already exists are skipped; without it
// they are recomputed and deterministically overwritten. Provider outages
// abort after persisting what completed.
RunStats run_experiment(const ExperimentConfig& config, bool resume,
                        int workers, std::ostream& log);

// Re-executes one recorded run with a scripted provider built from its
// logged responses and checks that the fairness report comes out identical.
bool replay_record(const std::filesystem::path& record_path, std::ostream& log);

}  // namespace rmab::experiment
