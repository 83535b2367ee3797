#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "routehobo/geometry.hpp"

namespace routehobo {

enum class RouteFormat { Gpx, Csv };

struct RouteFile {
  std::filesystem::path source;
  RouteFormat format = RouteFormat::Csv;
  Polyline route;

  std::size_t point_count() const { return route.size(); }
};

/// Track points of the first <trk>, all of its <trkseg>s in document order,
/// as (lon, lat). Elevation and time are ignored.
Polyline parse_gpx(std::string_view text);

/// "lon,lat" rows. A non-numeric first row is taken as a header; blank lines
/// are skipped. Errors name the 1-based row.
Polyline parse_csv(std::string_view text);

/// GPX 1.1 with one track and one segment; coordinates to 9 decimals.
std::string write_gpx(const Polyline& route, std::string_view name = "route");
/// "lon,lat" header plus one row per point, 9 decimals.
std::string write_csv(const Polyline& route);

/// Format from the extension (.gpx, otherwise CSV).
RouteFormat format_for(const std::filesystem::path& path);

RouteFile read_route(const std::filesystem::path& path);
void write_route(const std::filesystem::path& path, const Polyline& route);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace routehobo
