#include "routehobo/report_io.hpp"

#include <cstdio>

namespace routehobo {

using nlohmann::json;

namespace {

std::string cell(std::size_t count, std::size_t total) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu (%.2f%%)", count,
                100.0 * static_cast<double>(count) / static_cast<double>(total));
  return buf;
}

std::string row(const std::string& label, const std::string& rdp, const std::string& proposed) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-18s %-18s %s\n", label.c_str(), rdp.c_str(), proposed.c_str());
  return buf;
}

}  // namespace

const char* method_name(SolveMethod method) {
  return method == SolveMethod::Exact ? "exact" : "qaoa";
}

json report_to_json(const CompressionReport& report) {
  json segments = json::array();
  for (const SegmentSolve& s : report.segments) {
    segments.push_back({{"first", s.first},
                        {"last", s.last},
                        {"method", method_name(s.method)},
                        {"variable_count", s.variable_count},
                        {"fallback", s.fallback}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"total_points", report.total_points},
          {"selected_points", report.selected_points},
          {"dropped_points", report.dropped_points},
          {"categories",
           {{"normal", report.categories.normal},
            {"theoretical_div", report.categories.theoretical_div},
            {"computational_div", report.categories.computational_div}}},
          {"ratio", report.ratio},
          {"segments", segments}};
}

json compression_to_json(const CompressionResult& result, double epsilon, const CompressOptions& options) {
  json doc = report_to_json(result.report);
  doc["epsilon"] = epsilon;
  doc["qubit_budget"] = options.qubit_budget;
  doc["method"] = method_name(options.method);
  if (options.method == SolveMethod::Qaoa) {
    doc["qaoa"] = {{"reps", options.qaoa.reps}, {"shots", options.qaoa.shots}, {"seed", options.qaoa.seed}};
  }
  doc["kept_indices"] = result.kept_indices;
  return doc;
}

json comparison_to_json(const Comparison& c) {
  const std::size_t total = c.proposed.total_points;
  return {{"schema_version", kReportSchemaVersion},
          {"epsilon", c.epsilon},
          {"rdp",
           {{"total_points", total},
            {"selected_points", c.rdp.selected},
            {"dropped_points", c.rdp.dropped},
            {"ratio", c.rdp.ratio}}},
          {"proposed", report_to_json(c.proposed)},
          {"proposed_to_rdp", static_cast<double>(c.proposed.selected_points) / static_cast<double>(c.rdp.selected)}};
}

std::string comparison_table(const Comparison& c) {
  const CompressionReport& p = c.proposed;
  const std::size_t total = p.total_points;
  std::string out;
  out += row("", "RDP", "Proposed");
  out += row("Total points", std::to_string(total), std::to_string(total));
  out += row("Selected points", cell(c.rdp.selected, total), cell(p.selected_points, total));
  out += row("  Normal", "-", cell(p.categories.normal, total));
  out += row("  Theor. Div.", "-", cell(p.categories.theoretical_div, total));
  out += row("  Comp. Div.", "-", cell(p.categories.computational_div, total));
  out += row("Dropped points", cell(c.rdp.dropped, total), cell(p.dropped_points, total));
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,rdp_selected,proposed_selected,ratio\n";
  char buf[128];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.9g,%zu,%zu,%.6f\n", r.epsilon, r.rdp_selected, r.proposed_selected, r.ratio);
    out += buf;
  }
  return out;
}

}  // namespace routehobo
