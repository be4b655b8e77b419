#include "mapsym/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mapsym {

FlagSystem from_face_cycles(const PolyhedronSpec& spec) {
  // A flag is one side of a face corner: (face, position, which) with
  // which = 0 for the corner flag at cycle[pos] behind edge
  // (cycle[pos-1], cycle[pos]) and which = 1 ahead of it, on edge
  // (cycle[pos], cycle[pos+1]).
  std::vector<int> flag_vertex;
  std::vector<std::pair<int, int>> flag_edge;  // unordered endpoint pair
  std::map<std::pair<int, int>, int> directed_uses;

  for (int f = 0; f < static_cast<int>(spec.face_cycles.size()); ++f) {
    const auto& cycle = spec.face_cycles[f];
    const int m = static_cast<int>(cycle.size());
    if (m < 1) throw std::invalid_argument("from_face_cycles: empty face cycle");
    for (int pos = 0; pos < m; ++pos) {
      int v = cycle[pos];
      int prev = cycle[(pos + m - 1) % m];
      int next = cycle[(pos + 1) % m];
      if (v < 0 || v >= spec.n_vertices)
        throw std::invalid_argument("from_face_cycles: vertex out of range");
      if (v == next) throw std::invalid_argument("from_face_cycles: repeated vertex in cycle");
      // which = 0 sits on edge {prev, v}, which = 1 on edge {v, next}
      flag_vertex.push_back(v);
      flag_edge.push_back(std::minmax(prev, v));
      flag_vertex.push_back(v);
      flag_edge.push_back(std::minmax(v, next));
      if (++directed_uses[{v, next}] > 1)
        throw std::invalid_argument("from_face_cycles: directed edge " + std::to_string(v) + "->" +
                                    std::to_string(next) + " used twice");
    }
  }
  const int n = static_cast<int>(flag_vertex.size());

  // index flags per (face, pos, which) for wiring
  auto flag_at = [&spec](int face_base, int pos, int which) {
    return face_base + 2 * pos + which;
  };
  std::vector<int> face_base(spec.face_cycles.size());
  {
    int base = 0;
    for (size_t f = 0; f < spec.face_cycles.size(); ++f) {
      face_base[f] = base;
      base += 2 * static_cast<int>(spec.face_cycles[f].size());
    }
  }

  std::vector<int> s0(n, -1), s1(n, -1), s2(n, -1);
  std::map<std::pair<int, int>, int> pending_s2;  // (vertex, flag-on-opposite-side key)

  // s1: same vertex and face, other edge -> pair (pos,0) with (pos,1)
  // s0: same edge and face, other vertex -> (pos,1) with (pos+1,0)
  for (size_t f = 0; f < spec.face_cycles.size(); ++f) {
    const int m = static_cast<int>(spec.face_cycles[f].size());
    for (int pos = 0; pos < m; ++pos) {
      int a = flag_at(face_base[f], pos, 0);
      int b = flag_at(face_base[f], pos, 1);
      s1[a] = b;
      s1[b] = a;
      int c = flag_at(face_base[f], (pos + 1) % m, 0);
      s0[b] = c;
      s0[c] = b;
    }
  }

  // s2: same vertex and edge, other face. Exactly two flags share a
  // (vertex, edge) pair when every edge lies on two faces.
  std::map<std::pair<int, std::pair<int, int>>, std::vector<int>> by_corner;
  for (int i = 0; i < n; ++i) by_corner[{flag_vertex[i], flag_edge[i]}].push_back(i);
  for (const auto& [corner, flags] : by_corner) {
    if (flags.size() != 2)
      throw std::invalid_argument("from_face_cycles: edge {" +
                                  std::to_string(corner.second.first) + "," +
                                  std::to_string(corner.second.second) +
                                  "} does not lie on exactly two faces");
    s2[flags[0]] = flags[1];
    s2[flags[1]] = flags[0];
  }

  return FlagSystem{Permutation(std::move(s0)), Permutation(std::move(s1)),
                    Permutation(std::move(s2))};
}

FlagSystem platonic(const std::string& name) {
  PolyhedronSpec spec;
  if (name == "tetrahedron") {
    spec.n_vertices = 4;
    spec.face_cycles = {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}};
  } else if (name == "cube") {
    spec.n_vertices = 8;
    spec.face_cycles = {{0, 1, 2, 3}, {4, 7, 6, 5}, {0, 4, 5, 1},
                        {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0}};
  } else if (name == "octahedron") {
    return antiprism(3);
  } else if (name == "dodecahedron") {
    spec.n_vertices = 20;
    spec.face_cycles = {{0, 1, 2, 3, 4},      {0, 5, 10, 6, 1},    {1, 6, 11, 7, 2},
                        {2, 7, 12, 8, 3},     {3, 8, 13, 9, 4},    {4, 9, 14, 5, 0},
                        {15, 16, 11, 6, 10},  {16, 17, 12, 7, 11}, {17, 18, 13, 8, 12},
                        {18, 19, 14, 9, 13},  {19, 15, 10, 5, 14}, {15, 19, 18, 17, 16}};
  } else if (name == "icosahedron") {
    spec.n_vertices = 12;
    spec.face_cycles = {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
                        {1, 6, 2},  {2, 7, 3},  {3, 8, 4},  {4, 9, 5},  {5, 10, 1},
                        {6, 7, 2},  {7, 8, 3},  {8, 9, 4},  {9, 10, 5}, {10, 6, 1},
                        {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10}};
  } else {
    throw std::invalid_argument("unknown platonic solid: " + name);
  }
  return from_face_cycles(spec);
}

FlagSystem prism(int n) {
  if (n < 3) throw std::invalid_argument("prism: n must be at least 3");
  PolyhedronSpec spec;
  spec.n_vertices = 2 * n;
  std::vector<int> top(n), bottom(n);
  for (int i = 0; i < n; ++i) top[i] = i;
  for (int i = 0; i < n; ++i) bottom[i] = 2 * n - 1 - i;  // reversed orientation
  spec.face_cycles.push_back(top);
  spec.face_cycles.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    spec.face_cycles.push_back({j, i, n + i, n + j});
  }
  return from_face_cycles(spec);
}

FlagSystem antiprism(int n) {
  if (n < 3) throw std::invalid_argument("antiprism: n must be at least 3");
  PolyhedronSpec spec;
  spec.n_vertices = 2 * n;
  std::vector<int> top(n), bottom(n);
  for (int i = 0; i < n; ++i) top[i] = i;
  for (int i = 0; i < n; ++i) bottom[i] = 2 * n - 1 - i;
  spec.face_cycles.push_back(top);
  spec.face_cycles.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    spec.face_cycles.push_back({j, i, n + i});          // downward triangle
    spec.face_cycles.push_back({n + i, n + j, j});      // upward triangle
  }
  return from_face_cycles(spec);
}

FlagSystem torus_grid(int rows, int cols) {
  if (rows < 3 || cols < 3) throw std::invalid_argument("torus_grid: rows and cols must be >= 3");
  PolyhedronSpec spec;
  spec.n_vertices = rows * cols;
  auto vid = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int r1 = (r + 1) % rows, c1 = (c + 1) % cols;
      spec.face_cycles.push_back({vid(r, c), vid(r, c1), vid(r1, c1), vid(r1, c)});
    }
  return from_face_cycles(spec);
}

FlagSystem medial(const FlagSystem& fs) {
  ValidationReport report = validate(fs, /*strict=*/true);
  if (!report.valid())
    throw std::invalid_argument("medial: input not a strict map: " + report.violations.front());
  // Flags of the medial are (flag of fs, side): side 0 keeps the face of
  // the flag as the medial face, side 1 takes the vertex-derived face.
  const int n = fs.n_flags();
  auto id = [n](int flag, int side) { return flag + side * n; };
  std::vector<int> s0(2 * n), s1(2 * n), s2(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int side = 0; side < 2; ++side) {
      s0[id(i, side)] = id(fs.s1(i), side);
      s2[id(i, side)] = id(i, 1 - side);
    }
    s1[id(i, 0)] = id(fs.s0(i), 0);
    s1[id(i, 1)] = id(fs.s2(i), 1);
  }
  return FlagSystem{Permutation(std::move(s0)), Permutation(std::move(s1)),
                    Permutation(std::move(s2))};
}

FlagSystem truncation(const FlagSystem& fs) {
  ValidationReport report = validate(fs, /*strict=*/true);
  if (!report.valid())
    throw std::invalid_argument("truncation: input not a strict map: " + report.violations.front());
  // Flags are (flag of fs, layer): layer 0 sits on the shortened edge,
  // layer 1 on the corner edge inside the original face, layer 2 on the
  // corner edge inside the new vertex face.
  const int n = fs.n_flags();
  auto id = [n](int flag, int layer) { return flag + layer * n; };
  std::vector<int> s0(3 * n), s1(3 * n), s2(3 * n);
  for (int i = 0; i < n; ++i) {
    s0[id(i, 0)] = id(fs.s0(i), 0);
    s0[id(i, 1)] = id(fs.s1(i), 1);
    s0[id(i, 2)] = id(fs.s1(i), 2);
    s1[id(i, 0)] = id(i, 1);
    s1[id(i, 1)] = id(i, 0);
    s1[id(i, 2)] = id(fs.s2(i), 2);
    s2[id(i, 0)] = id(fs.s2(i), 0);
    s2[id(i, 1)] = id(i, 2);
    s2[id(i, 2)] = id(i, 1);
  }
  return FlagSystem{Permutation(std::move(s0)), Permutation(std::move(s1)),
                    Permutation(std::move(s2))};
}

namespace {

// Standard quad form for <s0,s2>: flags grouped in fours with
// s0 = (4k,4k+1)(4k+2,4k+3) and s2 = (4k,4k+3)(4k+1,4k+2). Every valid
// system is isomorphic to one of this shape, so the census only has to
// range over s1.
void standard_quads(int n, std::vector<int>& s0, std::vector<int>& s2) {
  s0.resize(n);
  s2.resize(n);
  for (int q = 0; q < n; q += 4) {
    s0[q] = q + 1;
    s0[q + 1] = q;
    s0[q + 2] = q + 3;
    s0[q + 3] = q + 2;
    s2[q] = q + 3;
    s2[q + 3] = q;
    s2[q + 1] = q + 2;
    s2[q + 2] = q + 1;
  }
}

void fpf_involutions(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> m(n, -1);
  std::function<void(int)> rec = [&](int v) {
    while (v < n && m[v] != -1) ++v;
    if (v == n) {
      out.push_back(m);
      return;
    }
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

std::vector<FlagSystem> census(int n_flags, bool parallel) {
  if (n_flags <= 0 || n_flags % 4 != 0)
    throw std::invalid_argument("enumerate_flag_systems: flag count must be a positive multiple of 4");
  if (n_flags > 16)
    throw std::invalid_argument("enumerate_flag_systems: flag count above the 16-flag cap");

  std::vector<int> s0, s2;
  standard_quads(n_flags, s0, s2);
  std::vector<std::vector<int>> candidates;
  fpf_involutions(n_flags, candidates);

  const int m = static_cast<int>(candidates.size());
  std::vector<std::pair<std::vector<int>, int>> keyed(m, {{}, -1});

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < m; ++i) {
    FlagSystem fs{Permutation(s0), Permutation(candidates[i]), Permutation(s2)};
    if (validate(fs).valid()) keyed[i] = {canonical_flag_key(fs), i};
  }

  std::map<std::vector<int>, int> unique;
  for (const auto& [key, index] : keyed)
    if (index >= 0) unique.try_emplace(key, index);

  std::vector<FlagSystem> out;
  for (const auto& [key, index] : unique)
    out.push_back(FlagSystem{Permutation(s0), Permutation(candidates[index]), Permutation(s2)});
  return out;
}

}  // namespace

std::vector<FlagSystem> enumerate_flag_systems(int n_flags) { return census(n_flags, true); }

std::vector<FlagSystem> enumerate_flag_systems_serial(int n_flags) { return census(n_flags, false); }

}  // namespace mapsym
