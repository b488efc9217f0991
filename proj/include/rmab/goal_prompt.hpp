#pragma once

#include <map>
#include <set>
#include <string>

#include "rmab/environment.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rmab {

// One natural-language allocation preference, in some language, together
// with the feature groups and buckets it targets. The language label is
// opaque; prompt text comes from per-language files.
struct GoalPrompt {
  int prompt_id = 0;
  std::string language_label;
  std::string text;
  std::map<env::Feature, std::set<int>> intended_buckets;

  std::set<env::Feature> intended_features() const {
    std::set<env::Feature> out;
    for (const auto& [f, _] : intended_buckets) out.insert(f);
    return out;
  }
};

nlohmann::json goal_prompt_to_json(const GoalPrompt& goal);
GoalPrompt goal_prompt_from_json(const nlohmann::json& j);

}  // namespace rmab
