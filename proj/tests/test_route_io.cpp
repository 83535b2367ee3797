#include <doctest.h>

#include <filesystem>
#include <random>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "corpus.hpp"
#include "routehobo/route_io.hpp"

using namespace routehobo;

namespace {

std::string gpx_with(const std::string& body) {
  return "<?xml version=\"1.0\"?>\n<gpx version=\"1.1\" creator=\"test\" "
         "xmlns=\"http://www.topografix.com/GPX/1/1\">\n" +
         body + "</gpx>\n";
}

}  // namespace

TEST_CASE("GPX parsing") {
  const Polyline three = parse_gpx(gpx_with(
      "<trk><trkseg>"
      "<trkpt lat=\"0\" lon=\"0\"><ele>12</ele></trkpt>"
      "<trkpt lat=\"1\" lon=\"0\"><time>2020-01-01T00:00:00Z</time></trkpt>"
      "<trkpt lat=\"2\" lon=\"0\"/>"
      "</trkseg></trk>"));
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Point(0, 0));
  CHECK(three[1] == Point(0, 1));
  CHECK(three[2] == Point(0, 2));

  const Polyline joined = parse_gpx(gpx_with(
      "<trk><name>x</name>"
      "<trkseg><trkpt lat=\"1\" lon=\"10\"/><trkpt lat=\"2\" lon=\"20\"/></trkseg>"
      "<trkseg><trkpt lat=\"3\" lon=\"30\"/><trkpt lat=\"4\" lon=\"40\"/><trkpt lat=\"5\" lon=\"50\"/></trkseg>"
      "</trk>"
      "<trk><trkseg><trkpt lat=\"9\" lon=\"9\"/></trkseg></trk>"));
  REQUIRE(joined.size() == 5);
  CHECK(joined[4] == Point(50, 5));
}

TEST_CASE("GPX errors") {
  CHECK_THROWS_WITH_AS(parse_gpx(gpx_with("<trk><trkseg></trkseg></trk>")), "no track points", Error);
  CHECK_THROWS_WITH_AS(parse_gpx(gpx_with("<wpt lat=\"1\" lon=\"2\"/>")), "no track points", Error);
  CHECK_THROWS_WITH_AS(parse_gpx("<gpx>\n<trk>\n<trkseg>\n</trk>"), doctest::Contains("line"), Error);
  CHECK_THROWS_AS(parse_gpx(gpx_with("<trk><trkseg><trkpt lat=\"north\" lon=\"0\"/></trkseg></trk>")), Error);
  CHECK_THROWS_AS(parse_gpx(gpx_with("<trk><trkseg><trkpt lat=\"1\"/></trkseg></trk>")), Error);
}

TEST_CASE("CSV parsing") {
  const Polyline two = parse_csv("0,0\n1,0\n");
  REQUIRE(two.size() == 2);
  CHECK(two[1] == Point(1, 0));

  const Polyline header = parse_csv("lon,lat\n0,0\n");
  REQUIRE(header.size() == 1);

  const Polyline blanks = parse_csv("\nlon,lat\r\n\n 1.5 , -2\r\n\n3,4");
  REQUIRE(blanks.size() == 2);
  CHECK(blanks[0] == Point(1.5, -2));

  CHECK_THROWS_WITH_AS(parse_csv("a,b\nc,d\n"), doctest::Contains("row 2"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("0,0\n1\n"), doctest::Contains("row 2"), Error);
  CHECK_THROWS_AS(parse_csv("0,0\n1,2,3\n"), Error);
  CHECK_THROWS_AS(parse_csv("0,0\nnan,1\n"), Error);
}

TEST_CASE("round trips keep nine decimals") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> lon(-180, 180), lat(-90, 90);
  Polyline route;
  for (int k = 0; k < 200; ++k) route.emplace_back(lon(rng), lat(rng));

  for (const Polyline& back : {parse_csv(write_csv(route)), parse_gpx(write_gpx(route))}) {
    REQUIRE(back.size() == route.size());
    for (std::size_t k = 0; k < route.size(); ++k) {
      CHECK(std::abs(back[k].x() - route[k].x()) <= 5e-10);
      CHECK(std::abs(back[k].y() - route[k].y()) <= 5e-10);
    }
  }
}

TEST_CASE("emitted GPX has one track and one segment") {
  const Polyline route = corpus::sine(7, 1.0, 1.0);
  const std::string text = write_gpx(route, "a<b");
  std::istringstream in(text);
  boost::property_tree::ptree doc;
  boost::property_tree::read_xml(in, doc);
  const auto& gpx = doc.get_child("gpx");
  CHECK(gpx.get<std::string>("<xmlattr>.version") == "1.1");
  CHECK(gpx.count("trk") == 1);
  const auto& trk = gpx.get_child("trk");
  CHECK(trk.get<std::string>("name") == "a<b");
  CHECK(trk.count("trkseg") == 1);
  CHECK(trk.get_child("trkseg").count("trkpt") == 7);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "routehobo_io_test";
  std::filesystem::create_directories(dir);
  const Polyline route = corpus::zigzag(2, 4, 1.0, 0.5);
  write_route(dir / "r.gpx", route);
  write_route(dir / "r.csv", route);
  const RouteFile g = read_route(dir / "r.gpx");
  const RouteFile c = read_route(dir / "r.csv");
  CHECK(g.format == RouteFormat::Gpx);
  CHECK(c.format == RouteFormat::Csv);
  CHECK(g.point_count() == route.size());
  CHECK(c.point_count() == route.size());
  CHECK(format_for("X.GPX") == RouteFormat::Gpx);
  CHECK_THROWS_WITH_AS(read_route(dir / "missing.csv"), doctest::Contains("missing.csv"), Error);
  std::filesystem::remove_all(dir);
}
