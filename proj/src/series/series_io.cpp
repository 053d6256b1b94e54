#include "pmap/series_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pmap {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t series_checksum(const Series& s) {
  std::ostringstream os;
  os << s.max_x() << ' ' << s.max_y() << ' ' << convention_name(s.convention()) << ';';
  for (auto& [a, b, c] : s.nonzero()) os << a << ',' << b << ',' << to_string(c) << ';';
  return fnv1a(os.str());
}

static std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

nlohmann::json to_json(const SeriesRecord& r) {
  nlohmann::json j;
  j["class-id"] = r.class_id;
  j["t"] = to_string(r.t);
  j["convention"] = convention_name(r.series.convention());
  j["max_x"] = r.series.max_x();
  j["max_y"] = r.series.max_y();
  if (r.series.x_value()) j["x_value"] = to_string(*r.series.x_value());
  auto coeffs = nlohmann::json::array();
  for (auto& [a, b, c] : r.series.nonzero()) coeffs.push_back({a, b, to_string(c)});
  j["coeffs"] = std::move(coeffs);
  j["checksum"] = hex64(series_checksum(r.series));
  return j;
}

SeriesRecord record_from_json(const nlohmann::json& j) {
  try {
    SeriesRecord r;
    r.class_id = j.at("class-id").get<std::string>();
    r.t = parse_rational(j.at("t").get<std::string>());
    Series s(j.at("max_x").get<int>(), j.at("max_y").get<int>(),
             parse_convention(j.at("convention").get<std::string>()));
    if (j.contains("x_value")) s.set_x_value(parse_rational(j["x_value"].get<std::string>()));
    for (auto& e : j.at("coeffs")) {
      int a = e.at(0).get<int>(), b = e.at(1).get<int>();
      if (!s.in_range(a, b)) throw CacheError("coefficient index outside truncation");
      s(a, b) = parse_rational(e.at(2).get<std::string>());
    }
    if (j.contains("checksum") && j["checksum"].get<std::string>() != hex64(series_checksum(s)))
      throw CacheError("checksum mismatch");
    r.series = std::move(s);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed series record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("malformed coefficient: ") + e.what());
  }
}

void save_record(const std::filesystem::path& p, const SeriesRecord& r) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw CacheError("cannot write " + p.string());
  f << to_json(r).dump(1) << '\n';
}

SeriesRecord load_record(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw CacheError("cannot read " + p.string());
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("corrupt cache file " + p.string() + ": " + e.what());
  }
  return record_from_json(j);
}

std::filesystem::path cache_root() {
  if (const char* env = std::getenv("PMAP_CACHE_DIR"); env && *env) return env;
  return "cache";
}

std::filesystem::path cache_path(const std::string& class_id, const Rational& t, int max_x,
                                 int max_y) {
  std::string ts = to_string(t);
  for (char& c : ts)
    if (c == '/') c = '_';
  return cache_root() / class_id / ts / (std::to_string(max_x) + "x" + std::to_string(max_y) + ".json");
}

}  // namespace pmap
