#include "mapsym/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace mapsym {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) throw std::invalid_argument("unknown field \"" + key + "\"");
  }
}

std::vector<int> int_array(const json& j, const char* field, size_t expected) {
  if (!j.contains(field) || !j[field].is_array())
    throw std::invalid_argument(std::string("missing or non-array field \"") + field + "\"");
  std::vector<int> out;
  for (const auto& v : j[field]) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(field) + ": non-integer entry");
    out.push_back(v.get<int>());
  }
  if (out.size() != expected)
    throw std::invalid_argument(std::string(field) + ": expected length " + std::to_string(expected));
  return out;
}

}  // namespace

FlagSystem flag_system_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("flag system: expected a JSON object");
  reject_unknown(j, {"flags", "s0", "s1", "s2"});
  if (!j.contains("flags") || !j["flags"].is_number_integer())
    throw std::invalid_argument("flag system: missing integer field \"flags\"");
  int n = j["flags"].get<int>();
  if (n <= 0) throw std::invalid_argument("flag system: flag count must be positive");
  try {
    return FlagSystem{Permutation(int_array(j, "s0", n)), Permutation(int_array(j, "s1", n)),
                      Permutation(int_array(j, "s2", n))};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("flag system: ") + e.what());
  }
}

std::string flag_system_to_json(const FlagSystem& fs) {
  json j;
  j["flags"] = fs.n_flags();
  j["s0"] = fs.s0.images();
  j["s1"] = fs.s1.images();
  j["s2"] = fs.s2.images();
  return j.dump();
}

Pregraph pregraph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw std::invalid_argument("pregraph: expected a JSON object");
  reject_unknown(j, {"vertices", "edges", "semi_edges"});
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw std::invalid_argument("pregraph: missing integer field \"vertices\"");
  std::vector<PregraphEdge> edges;
  std::vector<SemiEdge> semis;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("pregraph: edge must be [u,v,c]");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  for (const auto& s : j.value("semi_edges", json::array())) {
    if (!s.is_array() || s.size() != 2) throw std::invalid_argument("pregraph: semi-edge must be [v,c]");
    semis.push_back({s[0].get<int>(), s[1].get<int>()});
  }
  try {
    return Pregraph(j["vertices"].get<int>(), std::move(edges), std::move(semis));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("pregraph: ") + e.what());
  }
}

std::string pregraph_to_json(const Pregraph& p) {
  json j;
  j["vertices"] = p.n_vertices();
  j["edges"] = json::array();
  for (const auto& e : p.edges()) j["edges"].push_back({e.u, e.v, e.colour});
  j["semi_edges"] = json::array();
  for (const auto& s : p.semi_edges()) j["semi_edges"].push_back({s.v, s.colour});
  return j.dump();
}

}  // namespace mapsym
