#include "mapsym/pregraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mapsym {

Pregraph::Pregraph(int n_vertices, std::vector<PregraphEdge> edges, std::vector<SemiEdge> semi_edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)), semi_edges_(std::move(semi_edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("Pregraph: loop; use a semi-edge");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_vertices_ || e.colour < 0 || e.colour > 2)
      throw std::invalid_argument("Pregraph: edge out of range");
  }
  for (const auto& s : semi_edges_)
    if (s.v < 0 || s.v >= n_vertices_ || s.colour < 0 || s.colour > 2)
      throw std::invalid_argument("Pregraph: semi-edge out of range");
  std::sort(edges_.begin(), edges_.end());
  std::sort(semi_edges_.begin(), semi_edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end() ||
      std::adjacent_find(semi_edges_.begin(), semi_edges_.end()) != semi_edges_.end())
    throw std::invalid_argument("Pregraph: duplicate incidence");

  // one incidence per vertex per colour
  std::vector<std::array<int, 3>> count(n_vertices_, {0, 0, 0});
  for (const auto& e : edges_) {
    ++count[e.u][e.colour];
    ++count[e.v][e.colour];
  }
  for (const auto& s : semi_edges_) ++count[s.v][s.colour];
  for (const auto& c : count)
    for (int k = 0; k < 3; ++k)
      if (c[k] > 1) throw std::invalid_argument("Pregraph: two incidences of one colour at a vertex");
}

int Pregraph::neighbour(int v, int colour) const {
  for (const auto& e : edges_) {
    if (e.colour != colour) continue;
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
  }
  if (has_semi_edge(v, colour)) return v;
  return -1;
}

bool Pregraph::has_semi_edge(int v, int colour) const {
  return std::binary_search(semi_edges_.begin(), semi_edges_.end(), SemiEdge{v, colour});
}

int Pregraph::edge_degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

std::vector<int> Pregraph::active_colours() const {
  std::array<bool, 3> present = {false, false, false};
  for (const auto& e : edges_) present[e.colour] = true;
  for (const auto& s : semi_edges_) present[s.colour] = true;
  std::vector<int> out;
  for (int c = 0; c < 3; ++c)
    if (present[c]) out.push_back(c);
  return out;
}

Pregraph delete_colour(const Pregraph& p, int colour) {
  if (colour < 0 || colour > 2) throw std::invalid_argument("delete_colour: colour out of range");
  std::vector<PregraphEdge> edges;
  std::vector<SemiEdge> semis;
  for (const auto& e : p.edges())
    if (e.colour != colour) edges.push_back(e);
  for (const auto& s : p.semi_edges())
    if (s.colour != colour) semis.push_back(s);
  return Pregraph(p.n_vertices(), std::move(edges), std::move(semis));
}

std::vector<PregraphComponent> components(const Pregraph& p) {
  const int n = p.n_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : p.edges()) parent[find(e.u)] = find(e.v);

  std::vector<int> comp_id(n, -1);
  std::vector<PregraphComponent> out;
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (comp_id[root] == -1) {
      comp_id[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[comp_id[root]].original_labels.push_back(v);
  }
  for (auto& comp : out) {
    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(comp.original_labels.size()); ++i)
      local[comp.original_labels[i]] = i;
    std::vector<PregraphEdge> edges;
    std::vector<SemiEdge> semis;
    for (const auto& e : p.edges())
      if (local[e.u] != -1) edges.push_back({local[e.u], local[e.v], e.colour});
    for (const auto& s : p.semi_edges())
      if (local[s.v] != -1) semis.push_back({local[s.v], s.colour});
    comp.graph = Pregraph(static_cast<int>(comp.original_labels.size()), std::move(edges),
                          std::move(semis));
  }
  return out;
}

namespace {

// (edge colour set, semi colour set) per vertex; an isomorphism must
// preserve it.
std::vector<std::pair<int, int>> signatures(const Pregraph& p) {
  std::vector<std::pair<int, int>> sig(p.n_vertices(), {0, 0});
  for (const auto& e : p.edges()) {
    sig[e.u].first |= 1 << e.colour;
    sig[e.v].first |= 1 << e.colour;
  }
  for (const auto& s : p.semi_edges()) sig[s.v].second |= 1 << s.colour;
  return sig;
}

bool extend(const Pregraph& a, const Pregraph& b, const std::vector<std::pair<int, int>>& sig_a,
            const std::vector<std::pair<int, int>>& sig_b, std::vector<int>& map_ab,
            std::vector<char>& used_b, int next) {
  const int n = a.n_vertices();
  if (next == n) {
    // mapping is signature-consistent and total; confirm edges exactly
    for (const auto& e : a.edges()) {
      int u = map_ab[e.u], v = map_ab[e.v];
      if (b.neighbour(u, e.colour) != v || u == v) return false;
    }
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used_b[cand] || sig_a[next] != sig_b[cand]) continue;
    // check incidences to already-mapped vertices
    bool ok = true;
    for (int c = 0; c < 3 && ok; ++c) {
      int na = a.neighbour(next, c);
      if (na == -1) {
        if (b.neighbour(cand, c) != -1) ok = false;
      } else if (na == next) {
        if (b.neighbour(cand, c) != cand) ok = false;
      } else if (na < next) {
        if (b.neighbour(cand, c) != map_ab[na]) ok = false;
      } else {
        if (b.neighbour(cand, c) == -1 || b.neighbour(cand, c) == cand) ok = false;
      }
    }
    if (!ok) continue;
    map_ab[next] = cand;
    used_b[cand] = 1;
    if (extend(a, b, sig_a, sig_b, map_ab, used_b, next + 1)) return true;
    used_b[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const Pregraph& a, const Pregraph& b) {
  constexpr int kCap = 12;
  if (a.n_vertices() > kCap || b.n_vertices() > kCap)
    throw std::invalid_argument("isomorphic: instance above the 12-vertex cap");
  if (a.n_vertices() != b.n_vertices() || a.edges().size() != b.edges().size() ||
      a.semi_edges().size() != b.semi_edges().size())
    return std::nullopt;
  auto sig_a = signatures(a), sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map_ab(a.n_vertices(), -1);
  std::vector<char> used_b(a.n_vertices(), 0);
  if (extend(a, b, sig_a, sig_b, map_ab, used_b, 0)) return map_ab;
  return std::nullopt;
}

Pregraph relabel(const Pregraph& p, const std::vector<int>& relabeling) {
  std::vector<PregraphEdge> edges;
  std::vector<SemiEdge> semis;
  for (const auto& e : p.edges()) edges.push_back({relabeling[e.u], relabeling[e.v], e.colour});
  for (const auto& s : p.semi_edges()) semis.push_back({relabeling[s.v], s.colour});
  return Pregraph(p.n_vertices(), std::move(edges), std::move(semis));
}

std::string canonical_code(const Pregraph& p) {
  constexpr int kCap = 8;
  const int n = p.n_vertices();
  if (n > kCap) throw std::invalid_argument("canonical_code: instance above the 8-vertex cap");

  auto serialize = [n](const Pregraph& q) {
    std::string out;
    out.push_back(static_cast<char>('0' + n));
    for (const auto& e : q.edges()) {
      out.push_back('e');
      out.push_back(static_cast<char>('0' + e.u));
      out.push_back(static_cast<char>('0' + e.v));
      out.push_back(static_cast<char>('0' + e.colour));
    }
    for (const auto& s : q.semi_edges()) {
      out.push_back('s');
      out.push_back(static_cast<char>('0' + s.v));
      out.push_back(static_cast<char>('0' + s.colour));
    }
    return out;
  };

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = serialize(p);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string code = serialize(relabel(p, perm));
    if (code < best) best = code;
  }
  return best;
}

std::string to_dot(const Pregraph& p, const std::string& name) {
  static const char* kColours[3] = {"red", "green", "blue"};
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < p.n_vertices(); ++v) out << "  v" << v << ";\n";
  for (const auto& e : p.edges())
    out << "  v" << e.u << " -- v" << e.v << " [color=" << kColours[e.colour]
        << ", label=" << e.colour << "];\n";
  for (const auto& s : p.semi_edges()) {
    out << "  se_" << s.v << "_" << s.colour << " [shape=point];\n";
    out << "  v" << s.v << " -- se_" << s.v << "_" << s.colour
        << " [color=" << kColours[s.colour] << ", label=" << s.colour << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mapsym
