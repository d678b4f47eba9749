#include "kmarc/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace kmarc {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string plain_hex(std::uint32_t value) {
  char buf[16];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, 16);
  return std::string(buf, res.ptr);
}

std::uint32_t parse_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  std::uint32_t value = 0;
  const auto res = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
  if (hex.empty() || res.ec != std::errc{} || res.ptr != hex.data() + hex.size()) {
    throw std::invalid_argument("malformed hex value '" + std::string(hex) + "'");
  }
  return value;
}

std::string to_hex(const FieldTower& tower, FieldElement x) {
  const std::size_t width = static_cast<std::size_t>((tower.degree() + 3) / 4);
  std::string s = plain_hex(x.bits());
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

FieldElement from_hex(const FieldTower& tower, std::string_view hex) {
  const std::uint32_t v = parse_hex(hex);
  if (v >= tower.size()) {
    throw std::invalid_argument("hex value '" + std::string(hex) + "' lies outside K");
  }
  return FieldElement(v);
}

json tower_to_json(const FieldTower& tower) {
  return {{"m", tower.m()},
          {"h", tower.h()},
          {"modulus_hex", plain_hex(tower.modulus())},
          {"i_hex", to_hex(tower, tower.i_elem())}};
}

FieldTower tower_from_json(const json& j) {
  const int m = field<int>(j, "m");
  const int h = field<int>(j, "h");
  std::optional<std::uint32_t> modulus;
  if (j.contains("modulus_hex")) modulus = parse_hex(field<std::string>(j, "modulus_hex"));
  FieldTower tower(m, h, modulus);
  if (j.contains("i_hex")) {
    if (from_hex(tower, field<std::string>(j, "i_hex")) != tower.i_elem()) {
      throw std::invalid_argument("i_hex does not match the tower's i (" +
                                  to_hex(tower, tower.i_elem()) + ")");
    }
  }
  return tower;
}

json line_to_json(const FieldTower& tower, const Line& line) {
  if (line.at_infinity) return {{"infinity", true}};
  return {{"u_hex", to_hex(tower, line.u)}, {"mu_hex", to_hex(tower, line.mu)}};
}

Line line_from_json(const FieldTower& tower, const json& j) {
  if (j.is_object() && j.value("infinity", false)) return Line::infinity();
  const FieldElement u = from_hex(tower, field<std::string>(j, "u_hex"));
  const FieldElement mu = from_hex(tower, field<std::string>(j, "mu_hex"));
  if (!std::ranges::binary_search(tower.unit_circle(), u)) {
    throw std::invalid_argument("line u is not on the unit circle");
  }
  if (!tower.in_F(mu)) throw std::invalid_argument("line mu is not in F");
  return Line::affine(u, mu);
}

json collineation_to_json(const FieldTower& tower, const Collineation& c) {
  json rows = json::array();
  for (const auto& row : c.matrix) {
    json r = json::array();
    for (FieldElement x : row) r.push_back(to_hex(tower, x));
    rows.push_back(std::move(r));
  }
  return {{"matrix", std::move(rows)}, {"frobenius", c.frob}};
}

Collineation collineation_from_json(const FieldTower& tower, const json& j) {
  const auto rows = field<std::vector<std::vector<std::string>>>(j, "matrix");
  if (rows.size() != 3) throw std::invalid_argument("collineation matrix must be 3x3");
  Matrix3 m{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (rows[i].size() != 3) throw std::invalid_argument("collineation matrix must be 3x3");
    for (std::size_t k = 0; k < 3; ++k) m[i][k] = from_hex(tower, rows[i][k]);
  }
  const int frob = j.contains("frobenius") ? field<int>(j, "frobenius") : 0;
  return make_collineation(tower, m, frob);
}

json arc_to_json(const ArcFile& arc) {
  json points = json::array();
  for (FieldElement x : arc.points) points.push_back(to_hex(arc.tower, x));
  json j = {{"tower", tower_to_json(arc.tower)},
            {"points", std::move(points)},
            {"claimed_t", arc.claimed_t}};
  if (arc.level == Level::sub) j["level"] = "sub";
  if (arc.provenance) j["provenance"] = *arc.provenance;
  return j;
}

ArcFile arc_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("arc file must be a JSON object");
  FieldTower tower = tower_from_json(field<json>(j, "tower"));
  const auto hexes = field<std::vector<std::string>>(j, "points");
  std::vector<FieldElement> pts;
  pts.reserve(hexes.size());
  for (const auto& s : hexes) pts.push_back(from_hex(tower, s));
  ArcFile arc{std::move(tower), PointSet(std::move(pts)), field<int>(j, "claimed_t"), std::nullopt,
              Level::full};
  if (j.contains("provenance")) arc.provenance = j.at("provenance");
  if (j.contains("level")) {
    const auto level = field<std::string>(j, "level");
    if (level != "sub" && level != "full") throw std::invalid_argument("level must be full or sub");
    arc.level = level == "sub" ? Level::sub : Level::full;
  }
  for (FieldElement x : arc.points) {
    if (!arc.tower.in_ambient(x, arc.level)) {
      throw std::invalid_argument("point " + to_hex(arc.tower, x) + " lies outside the subplane");
    }
  }
  return arc;
}

json report_to_json(const FieldTower& tower, const ArcReport& report) {
  json hist = json::object();
  for (const auto& [size, count] : report.histogram) hist[std::to_string(size)] = count;
  json j = {{"is_star_set", report.is_star_set},
            {"t", report.t ? json(*report.t) : json(nullptr)},
            {"histogram", std::move(hist)},
            {"verdict", report.km_arc}};
  if (report.witness) {
    j["witness"] = {{"line", line_to_json(tower, *report.witness)},
                    {"count", report.witness_count}};
  }
  return j;
}

}  // namespace kmarc
