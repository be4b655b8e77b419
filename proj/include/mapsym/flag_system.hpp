#ifndef MAPSYM_FLAG_SYSTEM_HPP
#define MAPSYM_FLAG_SYSTEM_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mapsym/permutation.hpp"

namespace mapsym {

/// Partition of the flag set into orbits of some permutation group.
struct OrbitPartition {
  std::vector<int> orbit_of;               // flag -> orbit id
  std::vector<std::vector<int>> members;   // orbit id -> sorted flag list

  int orbit_count() const { return static_cast<int>(members.size()); }
  int n_flags() const { return static_cast<int>(orbit_of.size()); }
};

/// A combinatorial map given by three adjacency involutions on its flags.
///
/// Flag i's 0-, 1- and 2-adjacent flags are s0(i), s1(i), s2(i); the
/// monodromy axioms (involutions, fixed-point freeness, commuting s0/s2,
/// transitivity) are checked by validate(), not by the constructor, so
/// that intermediate and deliberately broken systems can be represented.
struct FlagSystem {
  Permutation s0, s1, s2;

  int n_flags() const { return s0.size(); }
  const Permutation& s(int colour) const {
    switch (colour) {
      case 0: return s0;
      case 1: return s1;
      default: return s2;
    }
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks the monodromy axioms; with strict also the simple-graph
/// conditions (two distinct endpoints per edge, no parallel edges,
/// minimum degree 3).
ValidationReport validate(const FlagSystem& fs, bool strict = false);

/// Throws std::invalid_argument when validate(fs) reports a violation.
void require_valid(const FlagSystem& fs);

/// Orbits of the subgroup generated by the chosen involutions, by
/// breadth-first closure. An empty generator set yields singleton orbits.
OrbitPartition orbits_under(const FlagSystem& fs, std::initializer_list<int> colours);
OrbitPartition orbits_under(const FlagSystem& fs, const std::vector<int>& colours);

/// Vertices, edges and faces of the map as monodromy-subgroup orbits:
/// vertices = <s1,s2>, edges = <s0,s2>, faces = <s0,s1>.
struct MapElements {
  OrbitPartition vertices, edges, faces;

  int vertex_degree(int vertex_orbit) const {
    return static_cast<int>(vertices.members[vertex_orbit].size()) / 2;
  }
  int face_size(int face_orbit) const {
    return static_cast<int>(faces.members[face_orbit].size()) / 2;
  }
};

MapElements elements(const FlagSystem& fs);

/// Exchanges the roles of vertices and faces (s0 <-> s2).
FlagSystem dual(const FlagSystem& fs);

/// |V| - |E| + |F|
int euler_characteristic(const FlagSystem& fs);

/// Colour-preserving isomorphism of connected flag systems. Determined by
/// the image of flag 0, so the search is linear in candidate images.
bool flag_systems_isomorphic(const FlagSystem& a, const FlagSystem& b);

/// Canonical relabeling key: lexicographically minimal (s0, s1, s2) image
/// tables over all BFS relabelings. Equal keys iff isomorphic.
std::vector<int> canonical_flag_key(const FlagSystem& fs);

}  // namespace mapsym

#endif
