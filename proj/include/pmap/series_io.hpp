#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "pmap/series.hpp"

namespace pmap {

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeriesRecord {
  std::string class_id;
  Rational t{1};
  Series series;
};

std::uint64_t fnv1a(const std::string& text);
std::uint64_t series_checksum(const Series& s);

nlohmann::json to_json(const SeriesRecord& r);
SeriesRecord record_from_json(const nlohmann::json& j);  // verifies checksum

void save_record(const std::filesystem::path& p, const SeriesRecord& r);
SeriesRecord load_record(const std::filesystem::path& p);

// $PMAP_CACHE_DIR or ./cache
std::filesystem::path cache_root();
// <root>/<class>/<t>/<max_x>x<max_y>.json, with '/' in t written as '_'
std::filesystem::path cache_path(const std::string& class_id, const Rational& t, int max_x,
                                 int max_y);

}  // namespace pmap
