#pragma once

// Spatiotemporal data model: regular lat/lon grids over a uniform time axis,
// scalar series, and facility registries, together with their file formats.
//
// GSF ("grid stack file") layout, all fields little-endian:
//   "GSF1\n"
//   one line of JSON: {"dlat","dlon","dt","lat0","lon0","nlat","nlon","nt","t0","unit","var"}
//   "\n"
//   nt*nlat*nlon float32 values, t-major, then lat, then lon.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridcast/time.hpp"

namespace gridcast::gridstore {

/// Regular grid with its origin at the south-west cell center; latitude and
/// longitude ascend with the row and column index.
struct GridSpec {
  double lat0 = 0.0;
  double dlat = 1.0;
  std::size_t nlat = 1;
  double lon0 = 0.0;
  double dlon = 1.0;
  std::size_t nlon = 1;

  std::size_t cells() const { return nlat * nlon; }
  double lat_at(std::size_t i) const { return lat0 + static_cast<double>(i) * dlat; }
  double lon_at(std::size_t j) const { return lon0 + static_cast<double>(j) * dlon; }
  /// Fractional index coordinates of a location (not rounded).
  double row_of(double lat) const { return (lat - lat0) / dlat; }
  double col_of(double lon) const { return (lon - lon0) / dlon; }
  /// Nearest cell by rounding in index space; nullopt if outside the grid.
  std::optional<std::pair<std::size_t, std::size_t>> nearest_cell(double lat, double lon) const;

  /// Grid covering [lat_min, lat_max] x [lon_min, lon_max] with centers on
  /// both bounds.
  static GridSpec from_bounds(double lat_min, double lat_max, double lon_min, double lon_max,
                              double step);
  /// 0.25 degree grid over metropolitan France (35 x 51 cells).
  static GridSpec france();

  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

struct TimeAxis {
  Timestamp t0 = 0;
  std::int64_t dt = kSecondsPerDay;
  std::size_t nt = 0;

  Timestamp at(std::size_t k) const { return t0 + static_cast<Timestamp>(k) * dt; }
  bool hourly() const { return dt == kSecondsPerHour; }
  bool daily() const { return dt == kSecondsPerDay; }

  void validate() const;
  bool operator==(const TimeAxis&) const = default;
};

struct GridStack {
  GridSpec spec;
  TimeAxis time;
  std::string var;
  std::string unit;
  std::vector<float> values;  // (nt, nlat, nlon), NaN = missing

  GridStack() = default;
  GridStack(GridSpec spec, TimeAxis time, std::string var, std::string unit, float fill = 0.0f);

  std::size_t offset(std::size_t t, std::size_t i, std::size_t j) const {
    return (t * spec.nlat + i) * spec.nlon + j;
  }
  float& at(std::size_t t, std::size_t i, std::size_t j) { return values[offset(t, i, j)]; }
  float at(std::size_t t, std::size_t i, std::size_t j) const { return values[offset(t, i, j)]; }

  void validate() const;
};

struct Series {
  TimeAxis time;
  std::string name;
  std::string unit;
  std::vector<double> values;
};

enum class Sector { Solar, Wind };

Sector parse_sector(std::string_view text);  // throws UnknownSector
std::string_view to_string(Sector sector);

struct FacilityRecord {
  std::string id;
  Sector sector = Sector::Solar;
  double lat = 0.0;
  double lon = 0.0;
  double capacity_mw = 0.0;
  Date start;
  std::optional<Date> stop;

  bool active_on(Date day) const { return start <= day && (!stop || day <= *stop); }
};

struct FacilityRegistry {
  Sector sector = Sector::Solar;
  std::vector<FacilityRecord> records;
};

GridStack read_gsf(const std::filesystem::path& path);
void write_gsf(const GridStack& stack, const std::filesystem::path& path);

Series read_series_csv(const std::filesystem::path& path, const std::string& value_column);
void write_series_csv(const Series& series, const std::filesystem::path& path);

/// Writes the facility CSV layout
/// `facility_id,sector,lat_deg,lon_deg,capacity_mw,start_date,stop_date`.
void write_facilities_csv(const FacilityRegistry& registry, const std::filesystem::path& path);

/// Shortest text that parses back to the same double.
std::string format_double(double value);

}  // namespace gridcast::gridstore
