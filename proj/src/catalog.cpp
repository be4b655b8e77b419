#include "mapsym/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace mapsym {

std::string two_colour_name(TwoColourId id, ElementFamily family) {
  static const char* kSuffix[] = {"1a", "2a", "2b", "2c", "3a", "4a", "4b", "4c"};
  std::string prefix = family == ElementFamily::vertex ? "v_" : "f_";
  return prefix + kSuffix[static_cast<int>(id)];
}

// Both families share colour 1; the other colour is 2 (vertices) or 0
// (faces). The degree and size formulas coincide under this substitution.
Pregraph two_colour_shape(TwoColourId id, ElementFamily family) {
  const int a = 1;
  const int b = family == ElementFamily::vertex ? 2 : 0;
  switch (id) {
    case TwoColourId::x1a:
      return Pregraph(1, {}, {{0, a}, {0, b}});
    case TwoColourId::x2a:
      return Pregraph(2, {{0, 1, b}}, {{0, a}, {1, a}});
    case TwoColourId::x2b:
      return Pregraph(2, {{0, 1, a}}, {{0, b}, {1, b}});
    case TwoColourId::x2c:
      return Pregraph(2, {{0, 1, a}, {0, 1, b}}, {});
    case TwoColourId::x3a:
      return Pregraph(3, {{0, 1, a}, {1, 2, b}}, {{0, b}, {2, a}});
    case TwoColourId::x4a:
      return Pregraph(4, {{0, 1, a}, {1, 2, b}, {2, 3, a}, {0, 3, b}}, {});
    case TwoColourId::x4b:
      return Pregraph(4, {{0, 1, a}, {1, 2, b}, {2, 3, a}}, {{0, b}, {3, b}});
    case TwoColourId::x4c:
      return Pregraph(4, {{0, 1, b}, {1, 2, a}, {2, 3, b}}, {{0, a}, {3, a}});
  }
  throw std::logic_error("unreachable");
}

TypeFormula table_lookup(TwoColourId id) {
  switch (id) {
    case TwoColourId::x1a: return {1, 3};
    case TwoColourId::x2a: return {2, 2};
    case TwoColourId::x2b: return {2, 2};
    case TwoColourId::x2c: return {1, 3};
    case TwoColourId::x3a: return {3, 1};
    case TwoColourId::x4a: return {2, 2};
    case TwoColourId::x4b: return {4, 1};
    case TwoColourId::x4c: return {4, 1};
  }
  throw std::logic_error("unreachable");
}

std::optional<TwoColourId> classify_two_colour_shape(const Pregraph& q, ElementFamily family) {
  static const TwoColourId kAll[] = {TwoColourId::x1a, TwoColourId::x2a, TwoColourId::x2b,
                                     TwoColourId::x2c, TwoColourId::x3a, TwoColourId::x4a,
                                     TwoColourId::x4b, TwoColourId::x4c};
  if (q.n_vertices() > 4) return std::nullopt;
  for (TwoColourId id : kAll)
    if (isomorphic(q, two_colour_shape(id, family))) return id;
  return std::nullopt;
}

namespace {

using Matching = std::array<int, 4>;  // involution on the 4 catalog vertices

struct RawEntry {
  const char* name;
  Matching m0, m1, m2;
  std::vector<TwoColourId> t0, t2;
  const char* dual_name;
};

constexpr TwoColourId x1a = TwoColourId::x1a, x2a = TwoColourId::x2a, x2b = TwoColourId::x2b,
                      x2c = TwoColourId::x2c, x3a = TwoColourId::x3a, x4a = TwoColourId::x4a,
                      x4b = TwoColourId::x4b, x4c = TwoColourId::x4c;

// Embedded catalog: the three colour matchings of each of the 22 classes
// (fixed point = semi-edge), their colour-0/colour-2 deletion component
// multisets, and the 0<->2 duality pairing. build_catalog recomputes the
// multisets from the matchings, so a transcription slip here aborts
// instead of misclassifying.
const RawEntry kRawCatalog[] = {
    {"4_A", {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 1, 0, 3}, {x4b}, {x2b, x2b}, "4_Ad"},
    {"4_Ad", {1, 0, 2, 3}, {2, 3, 0, 1}, {0, 1, 2, 3}, {x2b, x2b}, {x4b}, "4_A"},
    {"4_Ap", {1, 0, 2, 3}, {2, 3, 0, 1}, {1, 0, 2, 3}, {x4b}, {x4b}, "4_Ap"},
    {"4_B", {0, 1, 2, 3}, {1, 0, 2, 3}, {2, 3, 0, 1}, {x4c}, {x1a, x1a, x2b}, "4_Bd"},
    {"4_Bd", {1, 0, 3, 2}, {2, 1, 0, 3}, {0, 1, 2, 3}, {x1a, x1a, x2b}, {x4c}, "4_B"},
    {"4_Bp", {1, 0, 3, 2}, {2, 1, 0, 3}, {1, 0, 3, 2}, {x4c}, {x4c}, "4_Bp"},
    {"4_C", {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {x4a}, {x2b, x2b}, "4_Cd"},
    {"4_Cd", {1, 0, 3, 2}, {2, 3, 0, 1}, {0, 1, 2, 3}, {x2b, x2b}, {x4a}, "4_C"},
    {"4_Cp", {1, 0, 3, 2}, {2, 3, 0, 1}, {1, 0, 3, 2}, {x4a}, {x4a}, "4_Cp"},
    {"4_D", {1, 0, 3, 2}, {2, 1, 0, 3}, {1, 0, 2, 3}, {x1a, x3a}, {x4c}, "4_Dd"},
    {"4_Dd", {1, 0, 2, 3}, {2, 1, 0, 3}, {1, 0, 3, 2}, {x4c}, {x1a, x3a}, "4_D"},
    {"4_Dp", {1, 0, 2, 3}, {2, 1, 0, 3}, {0, 1, 3, 2}, {x1a, x3a}, {x1a, x3a}, "4_Dp"},
    {"4_E", {1, 0, 3, 2}, {2, 3, 0, 1}, {1, 0, 2, 3}, {x4b}, {x4a}, "4_Ed"},
    {"4_Ed", {1, 0, 2, 3}, {2, 3, 0, 1}, {1, 0, 3, 2}, {x4a}, {x4b}, "4_E"},
    {"4_Ep", {1, 0, 2, 3}, {2, 3, 0, 1}, {0, 1, 3, 2}, {x4b}, {x4b}, "4_Ep"},
    {"4_F", {1, 0, 3, 2}, {0, 1, 2, 3}, {2, 3, 0, 1}, {x2a, x2a}, {x2a, x2a}, "4_F"},
    {"4_G", {1, 0, 3, 2}, {1, 0, 3, 2}, {2, 3, 0, 1}, {x4a}, {x2c, x2c}, "4_Gd"},
    {"4_Gd", {1, 0, 3, 2}, {2, 3, 0, 1}, {2, 3, 0, 1}, {x2c, x2c}, {x4a}, "4_G"},
    {"4_Gp", {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}, {x4a}, {x4a}, "4_Gp"},
    {"4_H", {1, 0, 3, 2}, {1, 0, 2, 3}, {2, 3, 0, 1}, {x4c}, {x2a, x2c}, "4_Hd"},
    {"4_Hd", {1, 0, 3, 2}, {2, 1, 0, 3}, {2, 3, 0, 1}, {x2a, x2c}, {x4c}, "4_H"},
    {"4_Hp", {1, 0, 3, 2}, {2, 1, 0, 3}, {3, 2, 1, 0}, {x4c}, {x4c}, "4_Hp"},
};

Pregraph from_matchings(int n, const std::vector<const int*>& matchings) {
  std::vector<PregraphEdge> edges;
  std::vector<SemiEdge> semis;
  for (int c = 0; c < static_cast<int>(matchings.size()); ++c) {
    for (int v = 0; v < n; ++v) {
      int w = matchings[c][v];
      if (w == v)
        semis.push_back({v, c});
      else if (v < w)
        edges.push_back({v, w, c});
    }
  }
  return Pregraph(n, std::move(edges), std::move(semis));
}

std::vector<TwoColourId> deletion_fingerprint(const Pregraph& p, int removed_colour) {
  ElementFamily family =
      removed_colour == 0 ? ElementFamily::vertex : ElementFamily::face;
  std::vector<TwoColourId> out;
  for (const auto& comp : components(delete_colour(p, removed_colour))) {
    auto id = classify_two_colour_shape(comp.graph, family);
    if (!id) throw std::logic_error("catalog: deletion component matches no two-colour shape");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TypeGraphEntry> build_catalog() {
  std::vector<TypeGraphEntry> entries;
  for (const RawEntry& raw : kRawCatalog) {
    TypeGraphEntry entry;
    entry.name = raw.name;
    entry.pregraph = from_matchings(4, {raw.m0.data(), raw.m1.data(), raw.m2.data()});
    entry.t0_fingerprint = raw.t0;
    entry.t2_fingerprint = raw.t2;
    entry.dual_name = raw.dual_name;
    std::sort(entry.t0_fingerprint.begin(), entry.t0_fingerprint.end());
    std::sort(entry.t2_fingerprint.begin(), entry.t2_fingerprint.end());
    entries.push_back(std::move(entry));
  }

  // Self-test the transcription against the embedded table data; a
  // mismatch is a build defect, not a user error.
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    if (deletion_fingerprint(entry.pregraph, 0) != entry.t0_fingerprint)
      throw std::logic_error("catalog self-test: T0 fingerprint mismatch for " + entry.name);
    if (deletion_fingerprint(entry.pregraph, 2) != entry.t2_fingerprint)
      throw std::logic_error("catalog self-test: T2 fingerprint mismatch for " + entry.name);
    for (size_t j = i + 1; j < entries.size(); ++j)
      if (isomorphic(entry.pregraph, entries[j].pregraph))
        throw std::logic_error("catalog self-test: isomorphic entries " + entry.name + " and " +
                               entries[j].name);
    // duality: swapping colours 0 and 2 must land on dual_name
    std::vector<PregraphEdge> edges;
    std::vector<SemiEdge> semis;
    auto swap02 = [](int c) { return c == 1 ? 1 : 2 - c; };
    for (auto e : entry.pregraph.edges()) edges.push_back({e.u, e.v, swap02(e.colour)});
    for (auto s : entry.pregraph.semi_edges()) semis.push_back({s.v, swap02(s.colour)});
    Pregraph swapped(4, std::move(edges), std::move(semis));
    const auto dual_it =
        std::find_if(entries.begin(), entries.end(),
                     [&](const TypeGraphEntry& e) { return e.name == entry.dual_name; });
    if (dual_it == entries.end() || !isomorphic(swapped, dual_it->pregraph))
      throw std::logic_error("catalog self-test: duality mismatch for " + entry.name);
  }
  return entries;
}

}  // namespace

const std::vector<TypeGraphEntry>& catalog() {
  static const std::vector<TypeGraphEntry> entries = build_catalog();
  return entries;
}

const TypeGraphEntry& catalog_entry(const std::string& name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return entry;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

const TypeGraphEntry& classify_4orbit(const FlagSystem& fs) {
  OrbitPartition orbits = flag_orbits(fs);
  if (orbits.orbit_count() != 4) throw WrongOrbitCountError(orbits.orbit_count());
  Pregraph type_graph = symmetry_type_graph(fs, orbits);
  for (const auto& entry : catalog())
    if (isomorphic(type_graph, entry.pregraph)) return entry;
  throw std::logic_error("4-orbit symmetry type graph matches no catalog entry");
}

namespace {

void check_family(const FlagSystem& fs, const MapElements& el, const OrbitPartition& orbits,
                  ElementFamily family, const std::vector<TwoColourId>& expected_fingerprint,
                  std::vector<ElementTypeRecord>& records,
                  std::vector<TwoColourId>& component_types, std::vector<std::string>& violations) {
  const bool vertices = family == ElementFamily::vertex;
  const Pregraph deleted = delete_colour(symmetry_type_graph(fs, orbits), vertices ? 0 : 2);
  const auto comps = components(deleted);

  component_types.clear();
  for (const auto& comp : comps) {
    auto id = classify_two_colour_shape(comp.graph, family);
    if (!id) {
      violations.push_back("deletion component matches no two-colour shape");
      return;
    }
    component_types.push_back(*id);
  }
  if (comps.size() > 3) violations.push_back("more than three deletion components");
  {
    auto sorted = component_types;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected_fingerprint)
      violations.push_back(std::string(vertices ? "T0" : "T2") +
                           " component multiset differs from the classified entry's table row");
  }

  const OrbitPartition& element_orbits = vertices ? el.vertices : el.faces;
  std::map<int, int> component_value;  // component index -> degree/size
  for (int element = 0; element < element_orbits.orbit_count(); ++element) {
    ElementTypeGraph etg = vertices ? vertex_type_graph(fs, el, orbits, element)
                                    : face_type_graph(fs, el, orbits, element);
    // locate the containing component's index
    int comp_index = -1;
    for (size_t i = 0; i < comps.size(); ++i)
      if (comps[i].original_labels == etg.component.original_labels)
        comp_index = static_cast<int>(i);
    auto id = classify_two_colour_shape(etg.component.graph, family);
    CharacteristicSystem cs = vertices ? vertex_characteristic_system(fs, el, element)
                                       : face_characteristic_system(fs, el, element);
    int value = cs.cycle_length / 2;
    ElementTypeRecord record{element, id.value_or(TwoColourId::x1a), value, cs, comp_index};
    if (!id || comp_index < 0) {
      violations.push_back("element type graph not a catalog shape");
      records.push_back(record);
      continue;
    }
    if (!table_lookup(*id).admits(value))
      violations.push_back(two_colour_name(*id, family) + " with inadmissible value " +
                           std::to_string(value));
    int expected_cycle = 2 * value;
    if (cs.cycle_length != expected_cycle ||
        cs.first_colour != (vertices ? 1 : 0) || cs.second_colour != (vertices ? 2 : 1))
      violations.push_back("characteristic system malformed");
    auto [it, inserted] = component_value.try_emplace(comp_index, value);
    if (!inserted && it->second != value)
      violations.push_back("elements in one component with different degree/size");
    records.push_back(record);
  }
}

}  // namespace

TableReport verify_against_tables(const FlagSystem& fs) {
  OrbitPartition orbits = flag_orbits(fs);
  if (orbits.orbit_count() != 4) throw WrongOrbitCountError(orbits.orbit_count());
  const TypeGraphEntry& entry = classify_4orbit(fs);
  MapElements el = elements(fs);

  TableReport report;
  report.type_name = entry.name;
  check_family(fs, el, orbits, ElementFamily::vertex, entry.t0_fingerprint, report.vertex_records,
               report.t0_components, report.violations);
  check_family(fs, el, orbits, ElementFamily::face, entry.t2_fingerprint, report.face_records,
               report.t2_components, report.violations);
  return report;
}

namespace {

void involutions_on(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> m(n, -1);
  // generate recursively: smallest unmatched element pairs with itself or a later one
  std::function<void(int)> rec = [&](int v) {
    while (v < n && m[v] != -1) ++v;
    if (v == n) {
      out.push_back(m);
      return;
    }
    m[v] = v;
    rec(v + 1);
    m[v] = -1;
    for (int w = v + 1; w < n; ++w) {
      if (m[w] != -1) continue;
      m[v] = w;
      m[w] = v;
      rec(v + 1);
      m[v] = m[w] = -1;
    }
  };
  rec(0);
}

bool valid_02_pair(int n, const std::vector<int>& m0, const std::vector<int>& m2) {
  // components of the {0,2} union must be quotient shapes of the
  // alternating 4-cycle
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (const auto* m : {&m0, &m2}) {
        int w = (*m)[comp[head]];
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    if (comp.size() == 1) {
      // both semi-edges: fine
    } else if (comp.size() == 2) {
      int u = comp[0], v = comp[1];
      bool swap0 = m0[u] == v, swap2 = m2[u] == v;
      bool fix0 = m0[u] == u && m0[v] == v, fix2 = m2[u] == u && m2[v] == v;
      if (!((swap0 || swap2) && (swap0 || fix0) && (swap2 || fix2))) return false;
    } else if (comp.size() == 4) {
      for (int v : comp)
        if (m0[v] == v || m2[v] == v || m0[v] == m2[v]) return false;
      // two disjoint perfect matchings on four vertices form the 4-cycle
    } else {
      return false;
    }
  }
  return true;
}

bool connected(int n, const std::vector<int>& m0, const std::vector<int>& m1,
               const std::vector<int>& m2) {
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (const auto* m : {&m0, &m1, &m2}) {
      int w = (*m)[v];
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        queue.push_back(w);
      }
    }
  }
  return visited == n;
}

}  // namespace

std::vector<Pregraph> enumerate_candidates(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("enumerate_candidates: k out of range [1,6]");
  std::vector<std::vector<int>> invs;
  involutions_on(k, invs);

  std::map<std::string, Pregraph> classes;
  for (const auto& m0 : invs) {
    for (const auto& m2 : invs) {
      if (!valid_02_pair(k, m0, m2)) continue;
      for (const auto& m1 : invs) {
        if (!connected(k, m0, m1, m2)) continue;
        Pregraph p = from_matchings(k, {m0.data(), m1.data(), m2.data()});
        classes.try_emplace(canonical_code(p), std::move(p));
      }
    }
  }
  std::vector<Pregraph> out;
  for (auto& [code, p] : classes) out.push_back(std::move(p));
  return out;
}

}  // namespace mapsym
