#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "routehobo/cli.hpp"
#include "routehobo/route_io.hpp"

using namespace routehobo;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "routehobo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("routehobo_cli_" + std::to_string(std::rand()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rdp", "--input", "x.csv"}).code == 2);
  CHECK(run({"compress", "--input", "x.csv", "--epsilon", "0.1", "--method", "anneal"}).code == 2);
  CHECK(run({"sweep", "--input", "x.csv", "--epsilons", "1", "--eps-range", "0:1:2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data errors exit 1") {
  Workspace ws;
  const Run missing = run({"stats", "--input", ws.path("nope.csv")});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: ", 0) == 0);

  write_file(ws.path("bad.csv"), "lon,lat\n0,zero\n");
  CHECK(run({"rdp", "--input", ws.path("bad.csv"), "--epsilon", "1"}).code == 1);
  write_file(ws.path("one.csv"), "0,0\n");
  CHECK(run({"compress", "--input", ws.path("one.csv"), "--epsilon", "1"}).code == 1);
  write_file(ws.path("r.csv"), write_csv(corpus::collinear(5)));
  CHECK(run({"sweep", "--input", ws.path("r.csv"), "--epsilons", "0.1,x"}).code == 2);
  CHECK(run({"sweep", "--input", ws.path("r.csv")}).code == 2);
}

TEST_CASE("stats") {
  Workspace ws;
  write_file(ws.path("r.csv"), "lon,lat\n0,0\n3,4\n3,5\n");
  const Run r = run({"stats", "--input", ws.path("r.csv")});
  CHECK(r.code == 0);
  CHECK(r.out == "points 3\nmean_adjacent_distance 3\n");
}

TEST_CASE("rdp and compress write routes and reports") {
  Workspace ws;
  write_route(ws.path("r.gpx"), corpus::toy_route());
  const Run rdp = run({"rdp", "--input", ws.path("r.gpx"), "--epsilon", "0.6", "--output", ws.path("o.gpx")});
  CHECK(rdp.code == 0);
  CHECK(read_route(ws.path("o.gpx")).point_count() >= 2);

  const Run c = run({"compress", "--input", ws.path("r.gpx"), "--epsilon", "0.6", "--output", ws.path("c.gpx"),
                     "--report", ws.path("c.json")});
  CHECK(c.code == 0);
  CHECK(c.out == "selected 3 of 5 points\n");
  CHECK(read_route(ws.path("c.gpx")).point_count() == 3);
  const auto j = nlohmann::json::parse(read_file(ws.path("c.json")));
  CHECK(j["schema_version"] == 1);
  CHECK(j["selected_points"] == 3);
  CHECK(j["total_points"] == 5);
  CHECK(j["method"] == "exact");
  CHECK(j["kept_indices"].size() == 3);

  const Run to_stdout = run({"compress", "--input", ws.path("r.gpx"), "--epsilon", "0.6", "--method", "qaoa"});
  CHECK(to_stdout.code == 0);
  CHECK(parse_csv(to_stdout.out).size() == 3);
}

TEST_CASE("compare prints the table") {
  Workspace ws;
  write_route(ws.path("r.csv"), corpus::sine(40, 0.2, 1.0));
  const Run r = run({"compare", "--input", ws.path("r.csv"), "--epsilon", "0.05", "--report", ws.path("c.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("Total points") != std::string::npos);
  CHECK(r.out.find("Theor. Div.") != std::string::npos);
  const auto j = nlohmann::json::parse(read_file(ws.path("c.json")));
  CHECK(j.contains("rdp"));
  CHECK(j["proposed"]["schema_version"] == 1);
}

TEST_CASE("sweep rows and determinism") {
  Workspace ws;
  write_route(ws.path("r.csv"), corpus::zigzag(4, 6, 0.002, 0.0005));
  const std::vector<std::string> args{"sweep", "--input", ws.path("r.csv"), "--eps-range", "0.00001:0.0003:30",
                                      "--normalize", "--method", "qaoa", "--seed", "7", "--shots", "256"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "epsilon,rdp_selected,proposed_selected,ratio");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 30);

  auto to_file = args;
  to_file.insert(to_file.end(), {"--output", ws.path("s.csv")});
  CHECK(run(to_file).code == 0);
  CHECK(read_file(ws.path("s.csv")) == a.out);
}

TEST_CASE("installed binary reports exit codes") {
  const std::string cli = ROUTEHOBO_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("--help") == 0);
  CHECK(status("bogus") == 2);
  CHECK(status("stats --input /nonexistent/route.csv") == 1);
}
