#include <doctest.h>

#include <algorithm>

#include "mapsym/generators.hpp"
#include "mapsym/symmetry.hpp"

using namespace mapsym;

TEST_CASE("from_face_cycles on a single tetrahedron") {
  PolyhedronSpec spec;
  spec.n_vertices = 4;
  spec.face_cycles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  FlagSystem fs = from_face_cycles(spec);
  CHECK(fs.n_flags() == 24);
  CHECK(validate(fs, true).valid());
  CHECK(flag_systems_isomorphic(fs, platonic("tetrahedron")));
}

TEST_CASE("from_face_cycles rejects incoherent input") {
  PolyhedronSpec bad;
  bad.n_vertices = 4;
  // Two faces traverse the edge 0-1 in the same direction.
  bad.face_cycles = {{0, 1, 2}, {0, 1, 3}, {0, 3, 2}, {1, 3, 2}};
  CHECK_THROWS(from_face_cycles(bad));
}

TEST_CASE("platonic solids") {
  struct Row {
    const char* name;
    int flags, vertices, edges, faces;
  };
  for (Row row : {Row{"tetrahedron", 24, 4, 6, 4}, Row{"cube", 48, 8, 12, 6},
                  Row{"octahedron", 48, 6, 12, 8}, Row{"dodecahedron", 120, 20, 30, 12},
                  Row{"icosahedron", 120, 12, 30, 20}}) {
    FlagSystem fs = platonic(row.name);
    CHECK(fs.n_flags() == row.flags);
    CHECK(validate(fs, true).valid());
    MapElements el = elements(fs);
    CHECK(el.vertices.orbit_count() == row.vertices);
    CHECK(el.edges.orbit_count() == row.edges);
    CHECK(el.faces.orbit_count() == row.faces);
    CHECK(orbit_count(fs) == 1);
  }
  CHECK_THROWS(platonic("teapot"));
}

TEST_CASE("prisms and antiprisms") {
  for (int n = 3; n <= 8; ++n) {
    FlagSystem p = prism(n);
    CHECK(p.n_flags() == 12 * n);
    CHECK(validate(p, true).valid());
    CHECK(euler_characteristic(p) == 2);
    FlagSystem a = antiprism(n);
    CHECK(a.n_flags() == 16 * n);
    CHECK(validate(a, true).valid());
    CHECK(euler_characteristic(a) == 2);
  }
  CHECK(flag_systems_isomorphic(prism(4), platonic("cube")));
  CHECK(flag_systems_isomorphic(antiprism(3), platonic("octahedron")));
  CHECK_THROWS(prism(2));
  CHECK_THROWS(antiprism(2));
}

TEST_CASE("torus grids") {
  for (int rows = 3; rows <= 5; ++rows)
    for (int cols = 3; cols <= 5; ++cols) {
      FlagSystem fs = torus_grid(rows, cols);
      CHECK(fs.n_flags() == 8 * rows * cols);
      CHECK(validate(fs, true).valid());
      CHECK(euler_characteristic(fs) == 0);
    }
  CHECK(orbit_count(torus_grid(4, 4)) == 1);
  CHECK(orbit_count(torus_grid(3, 6)) == 2);
  CHECK_THROWS(torus_grid(2, 5));
}

TEST_CASE("medial") {
  FlagSystem m = medial(platonic("cube"));
  CHECK(m.n_flags() == 96);
  CHECK(validate(m, true).valid());
  MapElements el = elements(m);
  CHECK(el.vertices.orbit_count() == 12);   // one per cube edge
  CHECK(el.faces.orbit_count() == 6 + 8);   // squares plus triangles
  CHECK(orbit_count(m) == 2);               // the cuboctahedron
  CHECK(orbit_count(medial(platonic("tetrahedron"))) == 1);  // the octahedron
  CHECK(flag_systems_isomorphic(medial(platonic("tetrahedron")), platonic("octahedron")));
  for (int v = 0; v < el.vertices.orbit_count(); ++v) CHECK(el.vertex_degree(v) == 4);
}

TEST_CASE("truncation") {
  FlagSystem t = truncation(platonic("cube"));
  CHECK(t.n_flags() == 144);
  CHECK(validate(t, true).valid());
  MapElements el = elements(t);
  CHECK(el.vertices.orbit_count() == 24);
  CHECK(el.edges.orbit_count() == 36);
  CHECK(el.faces.orbit_count() == 14);
  CHECK(euler_characteristic(t) == 2);
  CHECK(orbit_count(t) == 3);
  for (int v = 0; v < el.vertices.orbit_count(); ++v) CHECK(el.vertex_degree(v) == 3);
}

TEST_CASE("derived maps preserve the euler characteristic") {
  for (const FlagSystem& fs : {prism(5), antiprism(4), torus_grid(3, 4)}) {
    CHECK(euler_characteristic(medial(fs)) == euler_characteristic(fs));
    CHECK(euler_characteristic(truncation(fs)) == euler_characteristic(fs));
  }
}

TEST_CASE("census sizes and determinism") {
  // On one quad s1 must be one of s0, s2, s0*s2: the loop, the link and
  // the projective single-edge map.
  auto four = enumerate_flag_systems(4);
  CHECK(four.size() == 3);
  for (const auto& fs : four) {
    CHECK(validate(fs).valid());
    CHECK((orbit_count(fs) == 1 || orbit_count(fs) == 2));
  }

  auto eight = enumerate_flag_systems(8);
  for (const auto& fs : eight) {
    CHECK(fs.n_flags() == 8);
    CHECK(validate(fs).valid());
  }
  // No two census entries are isomorphic.
  for (size_t i = 0; i < eight.size(); ++i)
    for (size_t j = i + 1; j < eight.size(); ++j)
      CHECK_FALSE(flag_systems_isomorphic(eight[i], eight[j]));

  auto eight_again = enumerate_flag_systems(8);
  REQUIRE(eight.size() == eight_again.size());
  for (size_t i = 0; i < eight.size(); ++i) {
    CHECK(eight[i].s0 == eight_again[i].s0);
    CHECK(eight[i].s1 == eight_again[i].s1);
    CHECK(eight[i].s2 == eight_again[i].s2);
  }
}

TEST_CASE("parallel census agrees with the serial reference") {
  for (int n : {8, 12}) {
    auto par = enumerate_flag_systems(n);
    auto ser = enumerate_flag_systems_serial(n);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i)
      CHECK(canonical_flag_key(par[i]) == canonical_flag_key(ser[i]));
  }
}

TEST_CASE("census argument checking") {
  CHECK_THROWS(enumerate_flag_systems(6));
  CHECK_THROWS(enumerate_flag_systems(20));
  CHECK_THROWS(enumerate_flag_systems(0));
}
