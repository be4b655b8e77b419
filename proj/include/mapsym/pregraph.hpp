#ifndef MAPSYM_PREGRAPH_HPP
#define MAPSYM_PREGRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mapsym {

/// Edge of a coloured pregraph; endpoints are distinct (u < v after
/// normalization). A same-endpoint incidence is a semi-edge, never a loop.
struct PregraphEdge {
  int u, v, colour;
  auto operator<=>(const PregraphEdge&) const = default;
};

struct SemiEdge {
  int v, colour;
  auto operator<=>(const SemiEdge&) const = default;
};

/// A 3-colourable pregraph: simple coloured edges plus semi-edges.
/// Per vertex and colour at most one incidence; parallel edges of
/// different colours between the same pair are allowed.
class Pregraph {
public:
  Pregraph() = default;
  Pregraph(int n_vertices, std::vector<PregraphEdge> edges, std::vector<SemiEdge> semi_edges);

  int n_vertices() const { return n_vertices_; }
  const std::vector<PregraphEdge>& edges() const { return edges_; }
  const std::vector<SemiEdge>& semi_edges() const { return semi_edges_; }

  /// Neighbour of v along colour c: the other endpoint, v itself for a
  /// semi-edge, or -1 if v has no incidence of colour c.
  int neighbour(int v, int colour) const;

  bool has_semi_edge(int v, int colour) const;

  /// Number of edge-ends at v (semi-edges do not count).
  int edge_degree(int v) const;

  /// Colours present on any incidence.
  std::vector<int> active_colours() const;

  bool operator==(const Pregraph&) const = default;

private:
  int n_vertices_ = 0;
  std::vector<PregraphEdge> edges_;      // sorted, u < v
  std::vector<SemiEdge> semi_edges_;     // sorted
};

/// All incidences of the given colour removed; vertex set unchanged.
Pregraph delete_colour(const Pregraph& p, int colour);

/// Connected components under edges (semi-edges do not connect),
/// relabeled to 0..k-1 per component; original labels returned alongside.
struct PregraphComponent {
  Pregraph graph;
  std::vector<int> original_labels;  // component vertex i had this label in the input
};
std::vector<PregraphComponent> components(const Pregraph& p);

/// Colour-preserving isomorphism: the returned vector maps vertices of a
/// to vertices of b. Backtracking with incidence-signature pruning;
/// instances above 12 vertices are rejected.
std::optional<std::vector<int>> isomorphic(const Pregraph& a, const Pregraph& b);

/// Minimum serialization over all vertex orderings; equal codes iff
/// isomorphic. Capped at 8 vertices.
std::string canonical_code(const Pregraph& p);

/// Relabel vertices: vertex v becomes relabel[v].
Pregraph relabel(const Pregraph& p, const std::vector<int>& relabeling);

/// GraphViz DOT with colours 0/1/2 rendered red/green/blue and a
/// semi-edge at v drawn to a point-shaped node "se_<v>_<c>".
std::string to_dot(const Pregraph& p, const std::string& name = "pregraph");

}  // namespace mapsym

#endif
