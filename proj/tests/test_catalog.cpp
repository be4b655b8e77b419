#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "mapsym/catalog.hpp"
#include "mapsym/generators.hpp"

using namespace mapsym;

namespace {

const std::vector<TwoColourId> kAllShapes{TwoColourId::x1a, TwoColourId::x2a, TwoColourId::x2b,
                                          TwoColourId::x2c, TwoColourId::x3a, TwoColourId::x4a,
                                          TwoColourId::x4b, TwoColourId::x4c};

}  // namespace

TEST_CASE("shape names") {
  CHECK(two_colour_name(TwoColourId::x1a, ElementFamily::vertex) == "v_1a");
  CHECK(two_colour_name(TwoColourId::x3a, ElementFamily::face) == "f_3a");
  CHECK(two_colour_name(TwoColourId::x4c, ElementFamily::vertex) == "v_4c");
}

TEST_CASE("shape pregraphs use the family's colour pair") {
  for (auto id : kAllShapes) {
    Pregraph v = two_colour_shape(id, ElementFamily::vertex);
    Pregraph f = two_colour_shape(id, ElementFamily::face);
    for (const auto& e : v.edges()) CHECK((e.colour == 1 || e.colour == 2));
    for (const auto& se : v.semi_edges()) CHECK((se.colour == 1 || se.colour == 2));
    for (const auto& e : f.edges()) CHECK((e.colour == 0 || e.colour == 1));
    for (const auto& se : f.semi_edges()) CHECK((se.colour == 0 || se.colour == 1));
    CHECK(v.n_vertices() == f.n_vertices());
  }
  CHECK(two_colour_shape(TwoColourId::x1a, ElementFamily::vertex).n_vertices() == 1);
  CHECK(two_colour_shape(TwoColourId::x2c, ElementFamily::vertex).edges().size() == 2);
  CHECK(two_colour_shape(TwoColourId::x4a, ElementFamily::face).edges().size() == 4);
}

TEST_CASE("classify_two_colour_shape round-trips every shape") {
  for (auto family : {ElementFamily::vertex, ElementFamily::face})
    for (auto id : kAllShapes) {
      auto back = classify_two_colour_shape(two_colour_shape(id, family), family);
      REQUIRE(back.has_value());
      CHECK(*back == id);
    }
  // A shape of the wrong family must not match.
  CHECK_FALSE(classify_two_colour_shape(two_colour_shape(TwoColourId::x2a, ElementFamily::vertex),
                                        ElementFamily::face)
                  .has_value());
}

TEST_CASE("degree and size formulas") {
  // (multiplier, minimum n) per shape; value = multiplier * n.
  std::map<TwoColourId, std::pair<int, int>> expected{
      {TwoColourId::x1a, {1, 3}}, {TwoColourId::x2a, {2, 2}}, {TwoColourId::x2b, {2, 2}},
      {TwoColourId::x2c, {1, 3}}, {TwoColourId::x3a, {3, 1}}, {TwoColourId::x4a, {2, 2}},
      {TwoColourId::x4b, {4, 1}}, {TwoColourId::x4c, {4, 1}}};
  for (auto [id, pair] : expected) {
    TypeFormula f = table_lookup(id);
    CHECK(f.multiplier == pair.first);
    CHECK(f.min_n == pair.second);
  }
  CHECK(table_lookup(TwoColourId::x3a).admits(3));
  CHECK(table_lookup(TwoColourId::x3a).admits(6));
  CHECK_FALSE(table_lookup(TwoColourId::x3a).admits(4));
  CHECK_FALSE(table_lookup(TwoColourId::x1a).admits(2));
  CHECK_FALSE(table_lookup(TwoColourId::x4b).admits(6));
  CHECK(table_lookup(TwoColourId::x4b).admits(8));
}

TEST_CASE("the catalog has 22 pairwise non-isomorphic entries") {
  const auto& cat = catalog();
  CHECK(cat.size() == 22);
  std::set<std::string> names;
  for (const auto& e : cat) {
    names.insert(e.name);
    CHECK(e.pregraph.n_vertices() == 4);
  }
  CHECK(names.size() == 22);
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      CHECK_FALSE(isomorphic(cat[i].pregraph, cat[j].pregraph).has_value());
}

TEST_CASE("duality pairing is an involution on names") {
  for (const auto& e : catalog()) {
    const TypeGraphEntry& d = catalog_entry(e.dual_name);
    CHECK(d.dual_name == e.name);
    // Deleting colour 0 of one matches deleting colour 2 of the other.
    CHECK(e.t0_fingerprint == d.t2_fingerprint);
  }
  CHECK(catalog_entry("4_A").dual_name == "4_Ad");
  CHECK(catalog_entry("4_F").dual_name == "4_F");
  CHECK(catalog_entry("4_D").dual_name == "4_Dd");
}

TEST_CASE("enumerate_candidates counts") {
  CHECK(enumerate_candidates(1).size() == 1);
  CHECK(enumerate_candidates(2).size() == 7);
  auto four = enumerate_candidates(4);
  CHECK(four.size() == 22);
  // One-to-one with the embedded catalog.
  std::set<std::string> matched;
  for (const auto& cand : four)
    for (const auto& e : catalog())
      if (isomorphic(cand, e.pregraph).has_value()) matched.insert(e.name);
  CHECK(matched.size() == 22);
}

TEST_CASE("classify_4orbit on the square antiprism") {
  const TypeGraphEntry& e = classify_4orbit(antiprism(4));
  CHECK(e.name == "4_Dd");
  CHECK_THROWS_AS(classify_4orbit(platonic("cube")), WrongOrbitCountError);
  try {
    classify_4orbit(prism(5));
  } catch (const WrongOrbitCountError& err) {
    CHECK(err.k == 3);
  }
}

TEST_CASE("verify_against_tables on 4-orbit antiprisms") {
  for (int n : {4, 5, 6, 7}) {
    TableReport rep = verify_against_tables(antiprism(n));
    INFO("antiprism ", n);
    for (const auto& v : rep.violations) INFO(v);
    CHECK(rep.ok());
    CHECK(rep.type_name == "4_Dd");
    // Triangles are f_3a with size 3; the two n-gons are f_1a with size n.
    int triangles = 0, gons = 0;
    for (const auto& r : rep.face_records) {
      if (r.type == TwoColourId::x3a) {
        ++triangles;
        CHECK(r.value == 3);
        CHECK(r.char_system.cycle_length == 6);
      } else {
        CHECK(r.type == TwoColourId::x1a);
        ++gons;
        CHECK(r.value == n);
        CHECK(r.char_system.cycle_length == 2 * n);
      }
    }
    CHECK(triangles == 2 * n);
    CHECK(gons == 2);
    for (const auto& r : rep.vertex_records) CHECK(r.value == 4);
  }
}

TEST_CASE("verify_against_tables rejects non-4-orbit maps") {
  CHECK_THROWS_AS(verify_against_tables(platonic("tetrahedron")), WrongOrbitCountError);
}
