#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mapsym/catalog.hpp"
#include "mapsym/pregraph.hpp"

using namespace mapsym;

TEST_CASE("construction normalizes and checks invariants") {
  Pregraph p(3, {{2, 1, 0}, {0, 1, 1}}, {{2, 1}});
  CHECK(p.edges()[0] == PregraphEdge{0, 1, 1});
  CHECK(p.edges()[1] == PregraphEdge{1, 2, 0});
  CHECK(p.neighbour(0, 1) == 1);
  CHECK(p.neighbour(2, 1) == 2);  // semi-edge points back
  CHECK(p.neighbour(0, 2) == -1);
  CHECK(p.has_semi_edge(2, 1));
  CHECK_FALSE(p.has_semi_edge(0, 1));
  CHECK(p.edge_degree(1) == 2);
  CHECK(p.edge_degree(2) == 1);

  CHECK_THROWS(Pregraph(2, {{0, 0, 1}}, {}));                  // loop
  CHECK_THROWS(Pregraph(2, {{0, 1, 0}, {0, 1, 0}}, {}));       // duplicate
  CHECK_THROWS(Pregraph(2, {{0, 1, 0}}, {{0, 0}}));            // colour reused at 0
  CHECK_THROWS(Pregraph(2, {{0, 3, 1}}, {}));                  // out of range
  CHECK_NOTHROW(Pregraph(2, {{0, 1, 0}, {0, 1, 1}}, {}));      // parallel, distinct colours
}

TEST_CASE("delete_colour and components") {
  // Path 0-1-2 with edge colours 1, 2 and semi-edges at the ends.
  Pregraph p(3, {{0, 1, 1}, {1, 2, 2}}, {{0, 2}, {2, 1}});
  Pregraph q = delete_colour(p, 2);
  CHECK(q.n_vertices() == 3);
  CHECK(q.edges().size() == 1);
  CHECK(q.semi_edges().size() == 1);

  auto comps = components(q);
  CHECK(comps.size() == 2);
  std::set<std::vector<int>> labels;
  for (const auto& c : comps) labels.insert(c.original_labels);
  CHECK(labels == std::set<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("isomorphic distinguishes the eight shapes") {
  std::vector<Pregraph> shapes;
  for (auto id : {TwoColourId::x1a, TwoColourId::x2a, TwoColourId::x2b, TwoColourId::x2c,
                  TwoColourId::x3a, TwoColourId::x4a, TwoColourId::x4b, TwoColourId::x4c})
    shapes.push_back(two_colour_shape(id, ElementFamily::vertex));
  for (size_t i = 0; i < shapes.size(); ++i)
    for (size_t j = 0; j < shapes.size(); ++j) {
      bool expect = (i == j);
      CHECK(isomorphic(shapes[i], shapes[j]).has_value() == expect);
    }
}

TEST_CASE("canonical_code agrees with isomorphic under random relabeling") {
  std::mt19937 rng(7);
  std::vector<Pregraph> shapes;
  for (auto id : {TwoColourId::x2c, TwoColourId::x3a, TwoColourId::x4a, TwoColourId::x4b,
                  TwoColourId::x4c})
    shapes.push_back(two_colour_shape(id, ElementFamily::face));
  for (const auto& shape : shapes) {
    std::vector<int> to(shape.n_vertices());
    std::iota(to.begin(), to.end(), 0);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(to.begin(), to.end(), rng);
      Pregraph shuffled = relabel(shape, to);
      CHECK(canonical_code(shuffled) == canonical_code(shape));
      auto match = isomorphic(shape, shuffled);
      REQUIRE(match.has_value());
      // Returned map must carry every incidence of `shape` onto `shuffled`.
      for (const auto& e : shape.edges())
        CHECK(shuffled.neighbour((*match)[e.u], e.colour) == (*match)[e.v]);
      for (const auto& se : shape.semi_edges())
        CHECK(shuffled.has_semi_edge((*match)[se.v], se.colour));
    }
  }
  std::set<std::string> codes;
  for (const auto& shape : shapes) codes.insert(canonical_code(shape));
  CHECK(codes.size() == shapes.size());
}

TEST_CASE("isomorphism respects colours") {
  Pregraph a(2, {{0, 1, 0}}, {});
  Pregraph b(2, {{0, 1, 1}}, {});
  CHECK_FALSE(isomorphic(a, b).has_value());
  CHECK(isomorphic(a, a).has_value());
}

TEST_CASE("size caps throw rather than silently degrade") {
  std::vector<PregraphEdge> path;
  for (int i = 0; i < 12; ++i) path.push_back({i, i + 1, i % 2});
  Pregraph big(13, path, {});
  CHECK_THROWS(isomorphic(big, big));
  std::vector<PregraphEdge> path9;
  for (int i = 0; i < 8; ++i) path9.push_back({i, i + 1, i % 2});
  CHECK_THROWS(canonical_code(Pregraph(9, path9, {})));
}

TEST_CASE("dot export") {
  Pregraph p(2, {{0, 1, 0}}, {{1, 2}});
  std::string dot = to_dot(p, "demo");
  CHECK(dot.find("graph demo") != std::string::npos);
  CHECK(dot.find("red") != std::string::npos);
  CHECK(dot.find("blue") != std::string::npos);
  CHECK(dot.find("se_1_2") != std::string::npos);
  CHECK(dot.find("point") != std::string::npos);
}
