#include "eip/config_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace eip {

using nlohmann::json;

Config read_config_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad point-set JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw ValidationError("point-set JSON must be {\"dim\": d, \"points\": [...]}");
  if (!j["dim"].is_number_integer()) throw ValidationError("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  check_dim(dim);
  if (!j["points"].is_array()) throw ValidationError("\"points\" must be an array");
  std::vector<Point> pts;
  pts.reserve(j["points"].size());
  for (const auto& row : j["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ValidationError("each point must be an array of exactly dim coordinates");
    std::vector<Coord> cs;
    cs.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ValidationError("coordinates must be integers");
      std::int64_t x = v.get<std::int64_t>();
      if (x > std::numeric_limits<Coord>::max() || x < std::numeric_limits<Coord>::min())
        throw ValidationError("coordinate out of 32-bit range");
      cs.push_back(static_cast<Coord>(x));
    }
    pts.emplace_back(std::span<const Coord>(cs));
  }
  return Config::from_points(dim, std::move(pts));
}

Config read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return read_config_json(in);
}

std::string config_to_json(const Config& c) {
  Config e = c.materialized();
  json rows = json::array();
  for (const Point& p : e.points()) {
    json row = json::array();
    for (int i = 0; i < e.dim(); ++i) row.push_back(p[i]);
    rows.push_back(std::move(row));
  }
  json j;
  j["dim"] = e.dim();
  j["points"] = std::move(rows);
  return j.dump();
}

void write_config_file(const Config& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << config_to_json(c) << '\n';
}

}  // namespace eip
