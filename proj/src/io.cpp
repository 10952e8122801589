#include "bernproc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace bernproc {

using nlohmann::json;

PointSet read_point_set(std::istream& in) {
  std::vector<SparseVector> points;
  bool have_ambient = false;
  IndexSet ambient;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!rec.is_object()) {
      throw ParseError("line " + std::to_string(lineno) + ": record must be an object");
    }
    if (rec.contains("ambient")) {
      if (lineno != 1 || have_ambient) {
        throw ParseError("ambient header must be the first record");
      }
      std::vector<int> idx;
      for (const auto& v : rec.at("ambient")) idx.push_back(v.get<int>());
      try {
        ambient = IndexSet(std::move(idx));
      } catch (const DomainError& e) {
        throw ParseError(std::string("bad ambient header: ") + e.what());
      }
      have_ambient = true;
      continue;
    }
    if (!rec.contains("coords") || !rec.at("coords").is_object()) {
      throw ParseError("line " + std::to_string(lineno) + ": missing coords map");
    }
    std::vector<std::pair<int, double>> entries;
    for (const auto& [key, val] : rec.at("coords").items()) {
      int idx = 0;
      try {
        std::size_t consumed = 0;
        idx = std::stoi(key, &consumed);
        if (consumed != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad coordinate index '" + key + "'");
      }
      if (!val.is_number()) {
        throw ParseError("line " + std::to_string(lineno) + ": coordinate value must be a number");
      }
      entries.emplace_back(idx, val.get<double>());
    }
    std::string id = rec.value("id", "p" + std::to_string(points.size()));
    try {
      points.emplace_back(std::move(entries), std::move(id));
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (points.empty()) throw ParseError("point-set file holds no points");
  try {
    if (have_ambient) return PointSet(std::move(points), std::move(ambient));
    return PointSet(std::move(points));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point-set file: " + path);
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& T) {
  json header;
  header["ambient"] = T.ambient().members();
  out << header.dump() << "\n";
  for (const auto& p : T.points()) {
    json rec;
    rec["id"] = p.id();
    json coords = json::object();
    for (const auto& [i, v] : p.entries()) coords[std::to_string(i)] = v;
    rec["coords"] = coords;
    out << rec.dump() << "\n";
  }
}

}  // namespace bernproc
