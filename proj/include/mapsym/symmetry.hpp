#ifndef MAPSYM_SYMMETRY_HPP
#define MAPSYM_SYMMETRY_HPP

#include <utility>
#include <vector>

#include "mapsym/flag_system.hpp"
#include "mapsym/pregraph.hpp"

namespace mapsym {

/// The full automorphism group of a map, stored exhaustively. The action
/// on flags is free, so |elements| divides n_flags.
struct AutomorphismGroup {
  std::vector<Permutation> elements;  // sorted by image of flag 0
  int order() const { return static_cast<int>(elements.size()); }
};

/// All flag permutations commuting with s0, s1, s2. Each candidate image
/// of flag 0 is extended by breadth-first propagation and accepted iff
/// globally consistent. The candidate loop is OpenMP-parallel; results
/// are deterministic (ordered by image of flag 0).
AutomorphismGroup automorphisms(const FlagSystem& fs);

/// Single-threaded reference implementation, kept for testing and for the
/// benchmark baseline. Must agree with automorphisms() exactly.
AutomorphismGroup automorphisms_serial(const FlagSystem& fs);

/// Orbit partition of the flags under Aut; all orbits have size |Aut|.
OrbitPartition flag_orbits(const FlagSystem& fs);

/// The k of "k-orbit map".
int orbit_count(const FlagSystem& fs);

/// Quotient of the flag graph by the Aut-orbit partition: one pregraph
/// vertex per flag orbit, one incidence per colour per vertex, with
/// self-images recorded as semi-edges.
Pregraph symmetry_type_graph(const FlagSystem& fs);
Pregraph symmetry_type_graph(const FlagSystem& fs, const OrbitPartition& orbits);

/// symmetry_type_graph with one colour's incidences removed
/// (T0 for colour 0, T2 for colour 2).
Pregraph colour_deleted(const FlagSystem& fs, int removed_colour);

/// Cycle length and colour pair of the alternately coloured flag cycle
/// around a vertex (colours 1,2) or face (colours 0,1). The half-length
/// is the degree or size.
struct CharacteristicSystem {
  int cycle_length;
  int first_colour, second_colour;
  bool operator==(const CharacteristicSystem&) const = default;
};

CharacteristicSystem vertex_characteristic_system(const FlagSystem& fs, const MapElements& el,
                                                  int vertex_orbit);
CharacteristicSystem face_characteristic_system(const FlagSystem& fs, const MapElements& el,
                                                int face_orbit);

/// The two-colour quotient of the flag cycle around one element, plus the
/// T0 (resp. T2) component containing it with original orbit labels.
struct ElementTypeGraph {
  Pregraph quotient;              // pregraph of the element's flag cycle
  PregraphComponent component;    // containing component of T0 / T2
};

ElementTypeGraph vertex_type_graph(const FlagSystem& fs, const MapElements& el,
                                   const OrbitPartition& orbits, int vertex_orbit);
ElementTypeGraph face_type_graph(const FlagSystem& fs, const MapElements& el,
                                 const OrbitPartition& orbits, int face_orbit);

}  // namespace mapsym

#endif
