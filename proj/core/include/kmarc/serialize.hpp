#pragma once

// JSON forms of towers, lines, collineations, arcs and verification reports.
// Field elements are lowercase hex, most significant nibble first, padded to
// ceil(2m/4) digits.

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kmarc/arcs.hpp"
#include "kmarc/gf2tower.hpp"
#include "kmarc/plane.hpp"

namespace kmarc {

std::string to_hex(const FieldTower& tower, FieldElement x);
/// Throws std::invalid_argument for malformed input or a value outside K.
FieldElement from_hex(const FieldTower& tower, std::string_view hex);
/// Unpadded lowercase hex of an integer (moduli, CLI parameters).
std::string plain_hex(std::uint32_t value);
std::uint32_t parse_hex(std::string_view hex);

nlohmann::json tower_to_json(const FieldTower& tower);
/// Rebuilds the tower and checks that i_hex (if present) is its canonical i.
FieldTower tower_from_json(const nlohmann::json& j);

nlohmann::json line_to_json(const FieldTower& tower, const Line& line);
Line line_from_json(const FieldTower& tower, const nlohmann::json& j);

nlohmann::json collineation_to_json(const FieldTower& tower, const Collineation& c);
Collineation collineation_from_json(const FieldTower& tower, const nlohmann::json& j);

struct ArcFile {
  FieldTower tower;
  PointSet points;
  int claimed_t = 0;
  std::optional<nlohmann::json> provenance;
  Level level = Level::full;  // "sub" marks an arc of the subplane PG(2,r)
};

nlohmann::json arc_to_json(const ArcFile& arc);
/// Throws std::invalid_argument on missing fields, bad hex or duplicates.
ArcFile arc_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const FieldTower& tower, const ArcReport& report);

}  // namespace kmarc
