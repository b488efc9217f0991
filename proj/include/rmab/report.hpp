#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "rmab/experiment.hpp"

namespace rmab::report {

// Reads every record under records_dir. Throws ReportError when none exist.
std::vector<experiment::RunRecord> load_records(
    const std::filesystem::path& records_dir);

// Writes the report set into out_dir:
//   acceptable_rates.csv / acceptable_rates.txt   mean +/- 1 SE per cell
//   success_rates_alpha_<a>.csv                   per alpha
//   allocation_shares.csv                         final-candidate shares
//   unfairness_absolute.csv                       prompts over threshold
//   unfairness_relative_by_language.csv
//   unfairness_relative_by_prompt.csv
// and, when svg is set, bar charts under out_dir/svg. Standard errors are
// sample standard deviation / sqrt(runs).
void emit_report(const std::vector<experiment::RunRecord>& records,
                 const std::filesystem::path& out_dir, bool svg);

}  // namespace rmab::report
