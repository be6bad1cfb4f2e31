#include "urykat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace urykat {

Json space_to_json(const MetricSpace& space) {
  Json j;
  j["points"] = space.points();
  Json rows = Json::array();
  for (int i = 0; i < space.size(); ++i) {
    rows.push_back(format_rationals(space.row(i)));
  }
  j["dist"] = rows;
  j["pseudometric"] = space.pseudometric();
  return j;
}

SpacePtr space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("dist")) {
    fail(Errc::parse_error, "space JSON needs 'points' and 'dist'");
  }
  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<Rational>> dist;
  for (const auto& row : j.at("dist")) {
    dist.push_back(parse_rationals(row.get<std::vector<std::string>>()));
  }
  bool pseudometric = j.value("pseudometric", false);
  return MetricSpace::create(std::move(points), std::move(dist), pseudometric);
}

Json function_to_json(const KatetovFunction& f) {
  Json j;
  j["space"] = space_to_json(*f.space);
  j["values"] = format_rationals(f.values);
  return j;
}

KatetovFunction function_from_json(const Json& j, const std::string& base_dir) {
  if (!j.contains("space") || !j.contains("values")) {
    fail(Errc::parse_error, "function JSON needs 'space' and 'values'");
  }
  SpacePtr space;
  if (j.at("space").is_string()) {
    std::string path = j.at("space").get<std::string>();
    if (!base_dir.empty() && !path.empty() && path[0] != '/') path = base_dir + "/" + path;
    space = space_from_json(read_json_file(path));
  } else {
    space = space_from_json(j.at("space"));
  }
  auto values = parse_rationals(j.at("values").get<std::vector<std::string>>());
  return katetov_function(std::move(space), std::move(values));
}

Json grid_to_json(const Grid& grid) {
  return Json{{"q", grid.q}, {"cap", format_rational(grid.cap)}};
}

Grid grid_from_json(const Json& j) {
  return make_grid(j.at("q").get<int>(), parse_rational(j.at("cap").get<std::string>()));
}

Json approximant_to_json(const Approximant& a) {
  Json j;
  j["space"] = space_to_json(*a.space);
  j["grid"] = grid_to_json(a.grid);
  j["witness_k"] = a.witness_k;
  Json prov = Json::array();
  for (const auto& rec : a.provenance) {
    prov.push_back(Json{{"round", rec.round},
                        {"point", rec.point_id},
                        {"controllers", rec.controllers},
                        {"values", format_rationals(rec.control_values)}});
  }
  j["provenance"] = prov;
  return j;
}

Approximant approximant_from_json(const Json& j) {
  Approximant a;
  a.space = space_from_json(j.at("space"));
  a.grid = grid_from_json(j.at("grid"));
  a.witness_k = j.value("witness_k", 0);
  if (j.contains("provenance")) {
    for (const auto& rec : j.at("provenance")) {
      a.provenance.push_back(GrowthRecord{
          rec.at("round").get<int>(), rec.at("point").get<std::string>(),
          rec.at("controllers").get<std::vector<std::string>>(),
          parse_rationals(rec.at("values").get<std::vector<std::string>>())});
    }
  }
  return a;
}

Json group_to_json(const IsometryGroup& group) {
  Json j;
  j["space"] = space_to_json(*group.space());
  Json els = Json::array();
  for (int e = 0; e < group.order(); ++e) els.push_back(group.cycle_notation(e));
  j["order"] = group.order();
  j["elements"] = els;
  return j;
}

Json element_set_to_json(const IsometryGroup& group, const ElementSet& set) {
  Json els = Json::array();
  for (int e : set) els.push_back(group.cycle_notation(e));
  return els;
}

ElementSet element_set_from_json(const IsometryGroup& group, const Json& j) {
  std::set<int> out;
  for (const auto& text : j) {
    out.insert(group.parse_cycles(text.get<std::string>()));
  }
  return ElementSet(out.begin(), out.end());
}

GroupPtr subgroup_from_json(SpacePtr space, const Json& j) {
  const Json& els = j.is_array() ? j : j.at("elements");
  std::vector<Isometry> elements;
  for (const auto& text : els) {
    elements.push_back(Isometry{parse_permutation_cycles(*space, text.get<std::string>())});
  }
  return IsometryGroup::from_elements(std::move(space), std::move(elements));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::parse_error, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

}  // namespace urykat
