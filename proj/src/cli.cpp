#include "routehobo/cli.hpp"

#include <charconv>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "routehobo/report_io.hpp"
#include "routehobo/route_io.hpp"

namespace routehobo {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid number '" + text + "' in " + what);
  }
  return value;
}

std::vector<double> parse_epsilon_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_number(field, "--epsilons"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_epsilon_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--eps-range expects start:stop:steps");
  const double start = parse_number(text.substr(0, a), "--eps-range");
  const double stop = parse_number(text.substr(a + 1, b - a - 1), "--eps-range");
  const double steps = parse_number(text.substr(b + 1), "--eps-range");
  if (steps < 1 || steps != static_cast<double>(static_cast<std::size_t>(steps))) {
    throw UsageError("--eps-range steps must be a positive integer");
  }
  return linear_epsilons(start, stop, static_cast<std::size_t>(steps));
}

struct SolverFlags {
  std::size_t qubit_budget = 12;
  std::string method = "exact";
  std::size_t reps = 2;
  std::size_t shots = 4096;
  std::uint64_t seed = 0;
  std::size_t max_iters = 200;
  std::size_t restarts = 3;
  std::optional<std::size_t> max_offset;

  void attach(CLI::App* cmd) {
    cmd->add_option("--qubit-budget", qubit_budget, "Max HOBO variables per segment")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--method", method, "Segment solver")
        ->check(CLI::IsMember({"exact", "qaoa"}))
        ->capture_default_str();
    cmd->add_option("--reps", reps, "QAOA layers")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--shots", shots, "QAOA measurement shots")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--seed", seed, "Base random seed")->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "Optimizer evaluations per restart")->capture_default_str();
    cmd->add_option("--restarts", restarts, "Optimizer restarts")->capture_default_str();
    cmd->add_option("--max-offset", max_offset, "Longest candidate edge, in vertices");
  }

  CompressOptions options() const {
    CompressOptions o;
    o.qubit_budget = qubit_budget;
    o.method = method == "qaoa" ? SolveMethod::Qaoa : SolveMethod::Exact;
    o.qaoa.reps = reps;
    o.qaoa.shots = shots;
    o.qaoa.seed = seed;
    o.qaoa.optimizer_max_iters = max_iters;
    o.qaoa.optimizer_restarts = restarts;
    o.max_offset = max_offset;
    return o;
  }
};

Polyline select(const Polyline& route, const std::vector<std::size_t>& indices) {
  Polyline out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(route[i]);
  return out;
}

void emit_route(const std::string& output, const Polyline& route, std::ostream& out) {
  if (output.empty()) {
    out << write_csv(route);
  } else {
    write_route(output, route);
  }
}

void check_route(const RouteFile& file) {
  if (file.point_count() < 2) throw Error(file.source.string() + ": route needs at least 2 points");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Route compression with RDP and HOBO path selection", "routehobo"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string report;
  double epsilon = 0.0;
  SolverFlags solver;

  auto* rdp = app.add_subcommand("rdp", "Simplify a route with Ramer-Douglas-Peucker");
  rdp->add_option("--input", input, "GPX or CSV route")->required();
  rdp->add_option("--epsilon", epsilon, "Distance threshold")->required()->check(CLI::NonNegativeNumber);
  rdp->add_option("--output", output, "Output route (.gpx or .csv); CSV to stdout if absent");

  auto* compress = app.add_subcommand("compress", "Compress a route by optimal path selection");
  compress->add_option("--input", input, "GPX or CSV route")->required();
  compress->add_option("--epsilon", epsilon, "Edge thinning threshold")->required()->check(CLI::NonNegativeNumber);
  compress->add_option("--output", output, "Output route (.gpx or .csv); CSV to stdout if absent");
  compress->add_option("--report", report, "JSON report path");
  solver.attach(compress);

  auto* compare = app.add_subcommand("compare", "Compare RDP and the proposed method");
  compare->add_option("--input", input, "GPX or CSV route")->required();
  compare->add_option("--epsilon", epsilon, "Threshold for both methods")->required()->check(CLI::NonNegativeNumber);
  compare->add_option("--report", report, "JSON report path");
  solver.attach(compare);

  std::string eps_list;
  std::string eps_range;
  bool normalize = false;
  std::optional<double> normalize_mean;
  auto* sweep = app.add_subcommand("sweep", "Ratio of proposed to RDP point counts across thresholds");
  sweep->add_option("--input", input, "GPX or CSV route")->required();
  auto* list_opt = sweep->add_option("--epsilons", eps_list, "Comma-separated thresholds");
  auto* range_opt = sweep->add_option("--eps-range", eps_range, "start:stop:steps, linear");
  list_opt->excludes(range_opt);
  sweep->add_flag("--normalize", normalize, "Rescale the route to a mean point spacing of 0.000653");
  sweep->add_option("--normalize-mean", normalize_mean, "Rescale the route to this mean point spacing")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--output", output, "CSV path; stdout if absent");
  solver.attach(sweep);

  auto* stats = app.add_subcommand("stats", "Point count and mean point spacing");
  stats->add_option("--input", input, "GPX or CSV route")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const RouteFile file = read_route(input);
    const Polyline& route = file.route;

    if (*rdp) {
      check_route(file);
      const RdpResult r = rdp_simplify(route, epsilon);
      emit_route(output, select(route, r.kept_indices), out);
      if (!output.empty()) out << "selected " << r.kept_indices.size() << " of " << route.size() << " points\n";
    } else if (*compress) {
      check_route(file);
      const CompressOptions options = solver.options();
      const CompressionResult r = compress_route(route, epsilon, options);
      emit_route(output, select(route, r.kept_indices), out);
      if (!report.empty()) write_file(report, compression_to_json(r, epsilon, options).dump(2) + "\n");
      if (!output.empty()) {
        out << "selected " << r.report.selected_points << " of " << r.report.total_points << " points\n";
      }
    } else if (*compare) {
      check_route(file);
      const Comparison c = compare_methods(route, epsilon, solver.options());
      out << comparison_table(c);
      if (!report.empty()) write_file(report, comparison_to_json(c).dump(2) + "\n");
    } else if (*sweep) {
      check_route(file);
      std::vector<double> epsilons;
      if (!eps_list.empty()) {
        epsilons = parse_epsilon_list(eps_list);
      } else if (!eps_range.empty()) {
        epsilons = parse_epsilon_range(eps_range);
      } else {
        throw UsageError("sweep needs --epsilons or --eps-range");
      }
      for (double e : epsilons) {
        if (e < 0.0) throw UsageError("thresholds must be non-negative");
      }
      std::optional<double> target = normalize_mean;
      if (normalize && !target) target = kReferenceMeanDistance;
      const std::string csv = sweep_csv(epsilon_sweep(route, epsilons, target, solver.options()));
      if (output.empty()) {
        out << csv;
      } else {
        write_file(output, csv);
      }
    } else if (*stats) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9g", mean_adjacent_distance(route));
      out << "points " << route.size() << "\nmean_adjacent_distance " << buf << "\n";
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace routehobo
