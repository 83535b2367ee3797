#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "routehobo/pipeline.hpp"

namespace routehobo {

inline constexpr int kReportSchemaVersion = 1;

const char* method_name(SolveMethod method);

/// Field names follow CompressionReport; carries "schema_version".
nlohmann::json report_to_json(const CompressionReport& report);
nlohmann::json compression_to_json(const CompressionResult& result, double epsilon, const CompressOptions& options);
nlohmann::json comparison_to_json(const Comparison& comparison);

/// Side-by-side table, percentages of total points to 2 decimals:
///                    RDP              Proposed
///   Total points     357              357
///   Selected points  168 (47.06%)     167 (46.78%)
///   ...
std::string comparison_table(const Comparison& comparison);

/// "epsilon,rdp_selected,proposed_selected,ratio" plus one row per entry.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace routehobo
