#include "mapsym/symmetry.hpp"

#include <algorithm>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mapsym {

namespace {

// Extends the partial map flag 0 -> target through words in {s0,s1,s2}.
// The action of Mon is transitive, so either the whole image table is
// forced or a contradiction appears.
std::optional<Permutation> extend_from_base_image(const FlagSystem& fs, int target) {
  const int n = fs.n_flags();
  std::vector<int> image(n, -1), queue;
  std::vector<char> hit(n, 0);
  image[0] = target;
  hit[target] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    int flag = queue.back();
    queue.pop_back();
    for (int c = 0; c < 3; ++c) {
      int next = fs.s(c)(flag);
      int forced = fs.s(c)(image[flag]);
      if (image[next] == -1) {
        if (hit[forced]) return std::nullopt;
        image[next] = forced;
        hit[forced] = 1;
        queue.push_back(next);
      } else if (image[next] != forced) {
        return std::nullopt;
      }
    }
  }
  return Permutation(std::move(image));
}

}  // namespace

AutomorphismGroup automorphisms_serial(const FlagSystem& fs) {
  require_valid(fs);
  AutomorphismGroup group;
  for (int target = 0; target < fs.n_flags(); ++target)
    if (auto perm = extend_from_base_image(fs, target)) group.elements.push_back(std::move(*perm));
  return group;
}

AutomorphismGroup automorphisms(const FlagSystem& fs) {
  require_valid(fs);
  const int n = fs.n_flags();
  std::vector<std::optional<Permutation>> found(n);
#pragma omp parallel for schedule(dynamic)
  for (int target = 0; target < n; ++target) found[target] = extend_from_base_image(fs, target);
  AutomorphismGroup group;
  for (auto& perm : found)
    if (perm) group.elements.push_back(std::move(*perm));
  return group;
}

OrbitPartition flag_orbits(const FlagSystem& fs) {
  AutomorphismGroup group = automorphisms(fs);
  const int n = fs.n_flags();
  std::vector<int> orbit_of(n, -1);
  int next_id = 0;
  for (int start = 0; start < n; ++start) {
    if (orbit_of[start] != -1) continue;
    for (const Permutation& g : group.elements) orbit_of[g(start)] = next_id;
    ++next_id;
  }
  OrbitPartition part;
  part.members.resize(next_id);
  for (int i = 0; i < n; ++i) part.members[orbit_of[i]].push_back(i);
  part.orbit_of = std::move(orbit_of);
  return part;
}

int orbit_count(const FlagSystem& fs) { return flag_orbits(fs).orbit_count(); }

Pregraph symmetry_type_graph(const FlagSystem& fs, const OrbitPartition& orbits) {
  const int k = orbits.orbit_count();
  std::vector<PregraphEdge> edges;
  std::vector<SemiEdge> semis;
  for (int orbit = 0; orbit < k; ++orbit) {
    int flag = orbits.members[orbit].front();
    for (int c = 0; c < 3; ++c) {
      int other = orbits.orbit_of[fs.s(c)(flag)];
      if (other == orbit)
        semis.push_back({orbit, c});
      else if (orbit < other)  // one edge per unordered pair and colour
        edges.push_back({orbit, other, c});
    }
  }
  return Pregraph(k, std::move(edges), std::move(semis));
}

Pregraph symmetry_type_graph(const FlagSystem& fs) {
  return symmetry_type_graph(fs, flag_orbits(fs));
}

Pregraph colour_deleted(const FlagSystem& fs, int removed_colour) {
  return delete_colour(symmetry_type_graph(fs), removed_colour);
}

namespace {

CharacteristicSystem cycle_system(const FlagSystem& fs, const OrbitPartition& element_orbits,
                                  int element, int first_colour, int second_colour) {
  return CharacteristicSystem{
      static_cast<int>(element_orbits.members.at(element).size()), first_colour, second_colour};
}

// Quotient of the element's alternately coloured flag cycle by the
// Aut-orbit partition, with vertices labeled by global orbit ids
// compacted to 0..m-1 (labels returned via the containing component).
ElementTypeGraph element_type_graph(const FlagSystem& fs, const std::vector<int>& cycle_flags,
                                    const OrbitPartition& orbits, int kept_a, int kept_b,
                                    int removed_colour) {
  // orbit ids present around the element, compacted
  std::vector<int> present;
  for (int flag : cycle_flags) present.push_back(orbits.orbit_of[flag]);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  auto local = [&present](int orbit) {
    return static_cast<int>(std::lower_bound(present.begin(), present.end(), orbit) -
                            present.begin());
  };

  std::vector<PregraphEdge> edges;
  std::vector<SemiEdge> semis;
  for (int flag : cycle_flags) {
    int u = local(orbits.orbit_of[flag]);
    for (int c : {kept_a, kept_b}) {
      int v = local(orbits.orbit_of[fs.s(c)(flag)]);
      if (u == v)
        semis.push_back({u, c});
      else if (u < v)
        edges.push_back({u, v, c});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::sort(semis.begin(), semis.end());
  semis.erase(std::unique(semis.begin(), semis.end()), semis.end());
  Pregraph quotient(static_cast<int>(present.size()), std::move(edges), std::move(semis));

  Pregraph deleted = delete_colour(symmetry_type_graph(fs, orbits), removed_colour);
  for (auto& comp : components(deleted)) {
    if (std::find(comp.original_labels.begin(), comp.original_labels.end(), present.front()) !=
        comp.original_labels.end())
      return ElementTypeGraph{std::move(quotient), std::move(comp)};
  }
  throw std::logic_error("element_type_graph: containing component not found");
}

}  // namespace

CharacteristicSystem vertex_characteristic_system(const FlagSystem& fs, const MapElements& el,
                                                  int vertex_orbit) {
  return cycle_system(fs, el.vertices, vertex_orbit, 1, 2);
}

CharacteristicSystem face_characteristic_system(const FlagSystem& fs, const MapElements& el,
                                                int face_orbit) {
  return cycle_system(fs, el.faces, face_orbit, 0, 1);
}

ElementTypeGraph vertex_type_graph(const FlagSystem& fs, const MapElements& el,
                                   const OrbitPartition& orbits, int vertex_orbit) {
  return element_type_graph(fs, el.vertices.members.at(vertex_orbit), orbits, 1, 2, 0);
}

ElementTypeGraph face_type_graph(const FlagSystem& fs, const MapElements& el,
                                 const OrbitPartition& orbits, int face_orbit) {
  return element_type_graph(fs, el.faces.members.at(face_orbit), orbits, 0, 1, 2);
}

}  // namespace mapsym
