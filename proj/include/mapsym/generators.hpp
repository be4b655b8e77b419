#ifndef MAPSYM_GENERATORS_HPP
#define MAPSYM_GENERATORS_HPP

#include <string>
#include <vector>

#include "mapsym/flag_system.hpp"

namespace mapsym {

/// A polyhedral map given by its face boundary cycles. Vertices are
/// 0..n_vertices-1; each cycle lists its boundary vertices in order, with
/// every directed edge used exactly once across all faces (a coherent
/// orientation).
struct PolyhedronSpec {
  int n_vertices = 0;
  std::vector<std::vector<int>> face_cycles;
};

/// Builds the flag system of the spec: one flag per (vertex, edge, face)
/// incidence corner side; 4 * |edges| flags in total.
FlagSystem from_face_cycles(const PolyhedronSpec& spec);

FlagSystem platonic(const std::string& name);  // tetrahedron, cube, octahedron, dodecahedron, icosahedron
FlagSystem prism(int n);                       // n >= 3
FlagSystem antiprism(int n);                   // n >= 3
FlagSystem torus_grid(int rows, int cols);     // rows, cols >= 3

/// Medial map: vertices are the edges of fs; 8 * |edges| flags.
FlagSystem medial(const FlagSystem& fs);

/// Truncation: vertices are (vertex, incident edge) pairs; 12 * |edges| flags.
FlagSystem truncation(const FlagSystem& fs);

/// Exhaustive census of valid flag systems on n_flags flags up to
/// flag-relabeling isomorphism (n_flags divisible by 4, at most 16).
/// The s0/s2 pair is fixed in the standard quad form and all
/// fixed-point-free s1 are tried; the s1 loop is OpenMP-parallel with the
/// output sorted by canonical key.
std::vector<FlagSystem> enumerate_flag_systems(int n_flags);

/// Serial reference for the census, compared against the parallel path
/// in tests.
std::vector<FlagSystem> enumerate_flag_systems_serial(int n_flags);

}  // namespace mapsym

#endif
