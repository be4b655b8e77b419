#include "mapsym/flag_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mapsym {

namespace {

OrbitPartition partition_from_ids(std::vector<int> orbit_of) {
  OrbitPartition part;
  int count = orbit_of.empty() ? 0 : *std::max_element(orbit_of.begin(), orbit_of.end()) + 1;
  part.members.resize(count);
  for (int i = 0; i < static_cast<int>(orbit_of.size()); ++i)
    part.members[orbit_of[i]].push_back(i);
  part.orbit_of = std::move(orbit_of);
  return part;
}

}  // namespace

ValidationReport validate(const FlagSystem& fs, bool strict) {
  ValidationReport report;
  const int n = fs.n_flags();
  if (n == 0) {
    report.violations.push_back("empty flag set");
    return report;
  }
  if (fs.s1.size() != n || fs.s2.size() != n) {
    report.violations.push_back("permutation lengths differ");
    return report;
  }
  if (n % 4 != 0) report.violations.push_back("flag count not divisible by 4");

  for (int j = 0; j < 3; ++j) {
    const Permutation& s = fs.s(j);
    if (!s.is_involution())
      report.violations.push_back("s" + std::to_string(j) + " is not an involution");
    if (!s.is_fixed_point_free())
      report.violations.push_back("s" + std::to_string(j) + " has fixed points");
  }

  bool commutes = true;
  for (int i = 0; i < n; ++i) {
    if (fs.s0(fs.s2(i)) != fs.s2(fs.s0(i))) commutes = false;
  }
  if (!commutes) report.violations.push_back("s0 and s2 do not commute");
  if (commutes) {
    for (int i = 0; i < n; ++i)
      if (fs.s0(fs.s2(i)) == i) {
        report.violations.push_back("s0*s2 has fixed points");
        break;
      }
  }

  if (orbits_under(fs, {0, 1, 2}).orbit_count() != 1)
    report.violations.push_back("monodromy group is not transitive");

  if (strict && report.valid()) {
    MapElements el = elements(fs);
    std::set<std::pair<int, int>> vertex_pairs;
    for (const auto& edge_flags : el.edges.members) {
      std::set<int> ends;
      for (int flag : edge_flags) ends.insert(el.vertices.orbit_of[flag]);
      if (ends.size() != 2) {
        report.violations.push_back("edge with coincident endpoints");
        continue;
      }
      auto pair = std::make_pair(*ends.begin(), *ends.rbegin());
      if (!vertex_pairs.insert(pair).second)
        report.violations.push_back("parallel edges between one vertex pair");
    }
    for (int v = 0; v < el.vertices.orbit_count(); ++v)
      if (el.vertex_degree(v) < 3) {
        report.violations.push_back("vertex of degree below 3");
        break;
      }
  }
  return report;
}

void require_valid(const FlagSystem& fs) {
  ValidationReport report = validate(fs);
  if (!report.valid())
    throw std::invalid_argument("invalid flag system: " + report.violations.front());
}

OrbitPartition orbits_under(const FlagSystem& fs, const std::vector<int>& colours) {
  for (int c : colours)
    if (c < 0 || c > 2) throw std::invalid_argument("generator colour out of range");
  const int n = fs.n_flags();
  std::vector<int> orbit_of(n, -1);
  int next_id = 0;
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (orbit_of[start] != -1) continue;
    orbit_of[start] = next_id;
    queue.assign(1, start);
    while (!queue.empty()) {
      int flag = queue.back();
      queue.pop_back();
      for (int c : colours) {
        int image = fs.s(c)(flag);
        if (orbit_of[image] == -1) {
          orbit_of[image] = next_id;
          queue.push_back(image);
        }
      }
    }
    ++next_id;
  }
  return partition_from_ids(std::move(orbit_of));
}

OrbitPartition orbits_under(const FlagSystem& fs, std::initializer_list<int> colours) {
  return orbits_under(fs, std::vector<int>(colours));
}

MapElements elements(const FlagSystem& fs) {
  require_valid(fs);
  return MapElements{orbits_under(fs, {1, 2}), orbits_under(fs, {0, 2}), orbits_under(fs, {0, 1})};
}

FlagSystem dual(const FlagSystem& fs) {
  return FlagSystem{fs.s2, fs.s1, fs.s0};
}

int euler_characteristic(const FlagSystem& fs) {
  MapElements el = elements(fs);
  return el.vertices.orbit_count() - el.edges.orbit_count() + el.faces.orbit_count();
}

namespace {

// BFS relabeling with flag `start` mapped to 0 and neighbours explored in
// colour order; the resulting (s0,s1,s2) image tables only depend on the
// isomorphism class and the start flag.
std::vector<int> bfs_key(const FlagSystem& fs, int start) {
  const int n = fs.n_flags();
  std::vector<int> new_label(n, -1), order;
  order.reserve(n);
  new_label[start] = 0;
  order.push_back(start);
  for (int head = 0; head < static_cast<int>(order.size()); ++head) {
    int flag = order[head];
    for (int c = 0; c < 3; ++c) {
      int image = fs.s(c)(flag);
      if (new_label[image] == -1) {
        new_label[image] = static_cast<int>(order.size());
        order.push_back(image);
      }
    }
  }
  std::vector<int> key;
  key.reserve(3 * n);
  for (int c = 0; c < 3; ++c)
    for (int flag : order) key.push_back(new_label[fs.s(c)(flag)]);
  return key;
}

}  // namespace

std::vector<int> canonical_flag_key(const FlagSystem& fs) {
  std::vector<int> best = bfs_key(fs, 0);
  for (int start = 1; start < fs.n_flags(); ++start) {
    std::vector<int> key = bfs_key(fs, start);
    if (key < best) best = key;
  }
  return best;
}

bool flag_systems_isomorphic(const FlagSystem& a, const FlagSystem& b) {
  if (a.n_flags() != b.n_flags()) return false;
  return canonical_flag_key(a) == canonical_flag_key(b);
}

}  // namespace mapsym
