#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mapsym/flag_system.hpp"
#include "mapsym/generators.hpp"

using namespace mapsym;

namespace {

// Two disjoint copies of fs on a doubled flag set.
FlagSystem disjoint_double(const FlagSystem& fs) {
  const int n = fs.n_flags();
  std::vector<int> i0(2 * n), i1(2 * n), i2(2 * n);
  for (int i = 0; i < n; ++i) {
    i0[i] = fs.s0(i);
    i1[i] = fs.s1(i);
    i2[i] = fs.s2(i);
    i0[n + i] = n + fs.s0(i);
    i1[n + i] = n + fs.s1(i);
    i2[n + i] = n + fs.s2(i);
  }
  return {Permutation(i0), Permutation(i1), Permutation(i2)};
}

FlagSystem relabel_flags(const FlagSystem& fs, const std::vector<int>& to) {
  const int n = fs.n_flags();
  std::vector<int> i0(n), i1(n), i2(n);
  for (int i = 0; i < n; ++i) {
    i0[to[i]] = to[fs.s0(i)];
    i1[to[i]] = to[fs.s1(i)];
    i2[to[i]] = to[fs.s2(i)];
  }
  return {Permutation(i0), Permutation(i1), Permutation(i2)};
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p({1, 0, 3, 2});
  CHECK(p.is_involution());
  CHECK(p.is_fixed_point_free());
  CHECK(p.inverse() == p);
  CHECK((p * p) == Permutation::identity(4));
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation({0, 3, 1}));
  Permutation q({2, 0, 1});
  CHECK((q * q.inverse()) == Permutation::identity(3));
  CHECK_FALSE(q.is_involution());
}

TEST_CASE("tetrahedron is a valid flag system") {
  FlagSystem fs = platonic("tetrahedron");
  CHECK(fs.n_flags() == 24);
  ValidationReport rep = validate(fs, true);
  CHECK(rep.valid());
  CHECK_NOTHROW(require_valid(fs));
}

TEST_CASE("identity s1 breaks fixed-point freeness") {
  FlagSystem fs = platonic("tetrahedron");
  fs.s1 = Permutation::identity(fs.n_flags());
  ValidationReport rep = validate(fs);
  CHECK_FALSE(rep.valid());
  bool mentions_fixed_point = false;
  for (const auto& v : rep.violations)
    if (v.find("fixed") != std::string::npos) mentions_fixed_point = true;
  CHECK(mentions_fixed_point);
  CHECK_THROWS_AS(require_valid(fs), std::invalid_argument);
}

TEST_CASE("disjoint union fails transitivity") {
  FlagSystem fs = disjoint_double(platonic("tetrahedron"));
  ValidationReport rep = validate(fs);
  CHECK_FALSE(rep.valid());
  bool mentions_connect = false;
  for (const auto& v : rep.violations)
    if (v.find("transitiv") != std::string::npos || v.find("connect") != std::string::npos)
      mentions_connect = true;
  CHECK(mentions_connect);
}

TEST_CASE("s0 s2 must commute without fixed points") {
  // Fixed-point-free involutions within one quad always commute, so the
  // broken pair must mix the two quads: (04)(16)(25)(37) against s0.
  std::vector<int> i0{1, 0, 3, 2, 5, 4, 7, 6};
  std::vector<int> i2{3, 2, 1, 0, 7, 6, 5, 4};
  std::vector<int> bad2{4, 6, 5, 7, 0, 2, 1, 3};
  std::vector<int> i1{4, 5, 6, 7, 0, 1, 2, 3};
  FlagSystem good{Permutation(i0), Permutation(i1), Permutation(i2)};
  CHECK(validate(good).valid());
  FlagSystem bad{Permutation(i0), Permutation(i1), Permutation(bad2)};
  CHECK_FALSE(validate(bad).valid());
}

TEST_CASE("orbits_under recovers vertices, edges, faces") {
  FlagSystem fs = platonic("cube");
  CHECK(fs.n_flags() == 48);
  MapElements el = elements(fs);
  CHECK(el.vertices.orbit_count() == 8);
  CHECK(el.edges.orbit_count() == 12);
  CHECK(el.faces.orbit_count() == 6);
  for (const auto& edge : el.edges.members) CHECK(edge.size() == 4);
  for (int v = 0; v < 8; ++v) CHECK(el.vertex_degree(v) == 3);
  for (int f = 0; f < 6; ++f) CHECK(el.face_size(f) == 4);
}

TEST_CASE("orbits_under with no generators is the discrete partition") {
  FlagSystem fs = platonic("tetrahedron");
  OrbitPartition part = orbits_under(fs, {});
  CHECK(part.orbit_count() == fs.n_flags());
  for (int i = 0; i < fs.n_flags(); ++i) CHECK(part.members[part.orbit_of[i]] == std::vector<int>{i});
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(platonic("tetrahedron")) == 2);
  CHECK(euler_characteristic(platonic("icosahedron")) == 2);
  CHECK(euler_characteristic(prism(6)) == 2);
  CHECK(euler_characteristic(torus_grid(3, 4)) == 0);
  CHECK(euler_characteristic(torus_grid(5, 5)) == 0);
}

TEST_CASE("dual swaps vertices and faces") {
  FlagSystem cube = platonic("cube");
  FlagSystem d = dual(cube);
  MapElements el = elements(d);
  CHECK(el.vertices.orbit_count() == 6);
  CHECK(el.faces.orbit_count() == 8);
  CHECK(flag_systems_isomorphic(d, platonic("octahedron")));
  CHECK(flag_systems_isomorphic(dual(d), cube));
}

TEST_CASE("isomorphism is invariant under relabeling") {
  std::mt19937 rng(20240817);
  for (const char* name : {"tetrahedron", "cube"}) {
    FlagSystem fs = platonic(name);
    std::vector<int> to(fs.n_flags());
    std::iota(to.begin(), to.end(), 0);
    for (int round = 0; round < 3; ++round) {
      std::shuffle(to.begin(), to.end(), rng);
      FlagSystem shuffled = relabel_flags(fs, to);
      CHECK(flag_systems_isomorphic(fs, shuffled));
      CHECK(canonical_flag_key(fs) == canonical_flag_key(shuffled));
    }
  }
  CHECK_FALSE(flag_systems_isomorphic(platonic("cube"), platonic("octahedron")));
  CHECK(canonical_flag_key(platonic("cube")) != canonical_flag_key(platonic("octahedron")));
}
