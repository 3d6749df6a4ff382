#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simrouge/engine.hpp"
#include "simrouge/eval.hpp"

namespace simrouge {

// Rounds half away from zero to `places` decimals.
double round_to(double x, int places);

// Every score rounded to 4 decimals, i.e. what survives a JSON round trip.
ComparisonReport rounded(const ComparisonReport& report);
SweepRow rounded(const SweepRow& row);

// {"<method>": [{"ref_index", "matches": [{"cand_index", "r", "p", "f",
// "flagged"}], "flagged_cands"}]}; scores at 4 decimals.
std::string reports_to_json(const std::vector<ComparisonReport>& reports);
std::vector<ComparisonReport> reports_from_json(std::string_view text);  // throws InputError

// method, ref_index, rank, cand_index, r, p, f, flagged.
std::string reports_to_tsv(const std::vector<ComparisonReport>& reports);

// Human-readable listing with scores at 2 decimals.
std::string reports_to_text(const std::vector<ComparisonReport>& reports, const std::vector<MethodConfig>& cfgs);

// threshold, TP, FP, TN, FN, R, P, F.
std::string sweep_to_tsv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_tsv(std::string_view text);  // throws InputError

std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace simrouge
