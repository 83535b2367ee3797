#include "routehobo/route_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace routehobo {

namespace pt = boost::property_tree;

namespace {

bool parse_double(std::string_view field, double& out) {
  while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
  while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size() && std::isfinite(out);
}

std::string format_coordinate(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Polyline parse_gpx(std::string_view text) {
  pt::ptree doc;
  try {
    std::istringstream in{std::string(text)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw Error("malformed GPX at line " + std::to_string(e.line()) + ": " + e.message());
  }

  const auto gpx = doc.get_child_optional("gpx");
  if (!gpx) throw Error("no track points: missing <gpx> root");
  Polyline route;
  for (const auto& [tag, trk] : *gpx) {
    if (tag != "trk") continue;
    for (const auto& [seg_tag, seg] : trk) {
      if (seg_tag != "trkseg") continue;
      for (const auto& [pt_tag, point] : seg) {
        if (pt_tag != "trkpt") continue;
        double lat = 0.0;
        double lon = 0.0;
        const auto lat_text = point.get_optional<std::string>("<xmlattr>.lat");
        const auto lon_text = point.get_optional<std::string>("<xmlattr>.lon");
        if (!lat_text || !lon_text || !parse_double(*lat_text, lat) || !parse_double(*lon_text, lon)) {
          throw Error("track point " + std::to_string(route.size() + 1) + " has invalid lat/lon");
        }
        route.emplace_back(lon, lat);
      }
    }
    break;  // first track only
  }
  if (route.empty()) throw Error("no track points");
  return route;
}

Polyline parse_csv(std::string_view text) {
  Polyline route;
  std::size_t row = 0;
  bool seen_first = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;

    const auto comma = line.find(',');
    double lon = 0.0;
    double lat = 0.0;
    const bool ok = comma != std::string_view::npos && parse_double(line.substr(0, comma), lon) &&
                    parse_double(line.substr(comma + 1), lat);
    const bool first = !seen_first;
    seen_first = true;
    if (!ok) {
      if (first) continue;  // header
      throw Error("non-numeric field at row " + std::to_string(row));
    }
    route.emplace_back(lon, lat);
  }
  return route;
}

std::string write_gpx(const Polyline& route, std::string_view name) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<gpx version=\"1.1\" creator=\"routehobo\" xmlns=\"http://www.topografix.com/GPX/1/1\">\n"
      "  <trk>\n    <name>";
  out += xml_escape(name);
  out += "</name>\n    <trkseg>\n";
  for (const Point& p : route) {
    out += "      <trkpt lat=\"" + format_coordinate(p.y()) + "\" lon=\"" + format_coordinate(p.x()) + "\"/>\n";
  }
  out += "    </trkseg>\n  </trk>\n</gpx>\n";
  return out;
}

std::string write_csv(const Polyline& route) {
  std::string out = "lon,lat\n";
  for (const Point& p : route) out += format_coordinate(p.x()) + "," + format_coordinate(p.y()) + "\n";
  return out;
}

RouteFormat format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".gpx" ? RouteFormat::Gpx : RouteFormat::Csv;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

RouteFile read_route(const std::filesystem::path& path) {
  RouteFile file;
  file.source = path;
  file.format = format_for(path);
  const std::string text = read_file(path);
  try {
    file.route = file.format == RouteFormat::Gpx ? parse_gpx(text) : parse_csv(text);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return file;
}

void write_route(const std::filesystem::path& path, const Polyline& route) {
  write_file(path, format_for(path) == RouteFormat::Gpx ? write_gpx(route, path.stem().string())
                                                        : write_csv(route));
}

}  // namespace routehobo
