#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "rmlab/campaign.hpp"
#include "rmlab/fit.hpp"

namespace rmlab {

/// wall_ms is written only when `timings` is set, so default record streams
/// are byte-identical across runs.
[[nodiscard]] nlohmann::json record_to_json(const TrialRecord& r, bool timings = false);
[[nodiscard]] TrialRecord record_from_json(const nlohmann::json& j);

void write_jsonl(std::ostream& out, const std::vector<TrialRecord>& records, bool timings = false);
/// Blank lines are skipped. Throws std::runtime_error naming the bad line.
[[nodiscard]] std::vector<TrialRecord> read_jsonl(std::istream& in);

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);

[[nodiscard]] nlohmann::json summary_to_json(const CampaignSummary& s);
[[nodiscard]] nlohmann::json fit_to_json(const FitReport& f);
[[nodiscard]] nlohmann::json poisson_to_json(const PoissonFit& f);

/// "cell,observed,empirical,expected,std_error,wilson_lo,wilson_hi".
void write_fit_csv(std::ostream& out, const FitReport& f);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace rmlab
