#include "mapsym/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mapsym {

AnalysisReport analyze(const FlagSystem& fs) {
  require_valid(fs);
  AnalysisReport report;
  report.n_flags = fs.n_flags();
  OrbitPartition orbits = flag_orbits(fs);
  report.k = orbits.orbit_count();
  for (const auto& orbit : orbits.members) report.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  report.aut_order = report.n_flags / report.k;
  if (report.k == 4) {
    TableReport tables = verify_against_tables(fs);
    if (!tables.ok())
      throw std::logic_error("table cross-check failed: " + tables.violations.front());
    report.type_name = tables.type_name;
    report.vertex_records = tables.vertex_records;
    report.face_records = tables.face_records;
    report.t0_components = tables.t0_components;
    report.t2_components = tables.t2_components;
  } else {
    // element records without 4-orbit type machinery
    MapElements el = elements(fs);
    for (int v = 0; v < el.vertices.orbit_count(); ++v)
      report.vertex_records.push_back({v, TwoColourId::x1a, el.vertex_degree(v),
                                       vertex_characteristic_system(fs, el, v), -1});
    for (int f = 0; f < el.faces.orbit_count(); ++f)
      report.face_records.push_back(
          {f, TwoColourId::x1a, el.face_size(f), face_characteristic_system(fs, el, f), -1});
  }
  return report;
}

namespace {

using nlohmann::json;

json record_json(const ElementTypeRecord& r, ElementFamily family, bool typed) {
  json j;
  j["element"] = r.element;
  j["value"] = r.value;
  j["characteristic_system"] = {r.char_system.cycle_length, r.char_system.first_colour,
                                r.char_system.second_colour};
  if (typed) {
    j["type"] = two_colour_name(r.type, family);
    j["component"] = r.component;
  }
  return j;
}

}  // namespace

std::string analysis_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = "mapsym/1";
  j["flags"] = r.n_flags;
  j["k"] = r.k;
  j["aut_order"] = r.aut_order;
  j["orbit_sizes"] = r.orbit_sizes;
  const bool typed = r.type_name.has_value();
  if (typed) j["type"] = *r.type_name;
  j["vertices"] = json::array();
  for (const auto& rec : r.vertex_records)
    j["vertices"].push_back(record_json(rec, ElementFamily::vertex, typed));
  j["faces"] = json::array();
  for (const auto& rec : r.face_records)
    j["faces"].push_back(record_json(rec, ElementFamily::face, typed));
  if (typed) {
    j["t0_components"] = json::array();
    for (auto id : r.t0_components) j["t0_components"].push_back(two_colour_name(id, ElementFamily::vertex));
    j["t2_components"] = json::array();
    for (auto id : r.t2_components) j["t2_components"].push_back(two_colour_name(id, ElementFamily::face));
  }
  return j.dump(2);
}

std::string analysis_to_text(const AnalysisReport& r, bool use_colour) {
  const char* bold = use_colour ? "\033[1m" : "";
  const char* reset = use_colour ? "\033[0m" : "";
  std::ostringstream out;
  out << bold << "flags:" << reset << " " << r.n_flags << "\n";
  out << bold << "k:" << reset << " " << r.k << "\n";
  out << bold << "aut order:" << reset << " " << r.aut_order << "\n";
  if (r.type_name) out << bold << "type:" << reset << " " << *r.type_name << "\n";
  const bool typed = r.type_name.has_value();
  out << bold << "vertices:" << reset << "\n";
  for (const auto& rec : r.vertex_records) {
    out << "  v" << rec.element << "  degree " << rec.value << "  char (" << rec.char_system.cycle_length
        << ",k" << rec.char_system.first_colour << ",k" << rec.char_system.second_colour << ")";
    if (typed) out << "  " << two_colour_name(rec.type, ElementFamily::vertex);
    out << "\n";
  }
  out << bold << "faces:" << reset << "\n";
  for (const auto& rec : r.face_records) {
    out << "  f" << rec.element << "  size " << rec.value << "  char (" << rec.char_system.cycle_length
        << ",k" << rec.char_system.first_colour << ",k" << rec.char_system.second_colour << ")";
    if (typed) out << "  " << two_colour_name(rec.type, ElementFamily::face);
    out << "\n";
  }
  if (typed) {
    out << bold << "T0 components:" << reset;
    for (auto id : r.t0_components) out << " " << two_colour_name(id, ElementFamily::vertex);
    out << "\n" << bold << "T2 components:" << reset;
    for (auto id : r.t2_components) out << " " << two_colour_name(id, ElementFamily::face);
    out << "\n";
  }
  return out.str();
}

}  // namespace mapsym
