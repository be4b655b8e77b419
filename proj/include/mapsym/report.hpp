#ifndef MAPSYM_REPORT_HPP
#define MAPSYM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "mapsym/catalog.hpp"
#include "mapsym/flag_system.hpp"

namespace mapsym {

/// Per-map analysis: orbit structure plus, for 4-orbit maps, the
/// classified type and the per-element table rows.
struct AnalysisReport {
  int n_flags = 0;
  int k = 0;
  int aut_order = 0;
  std::vector<int> orbit_sizes;
  std::optional<std::string> type_name;  // present iff k == 4
  std::vector<ElementTypeRecord> vertex_records;
  std::vector<ElementTypeRecord> face_records;
  std::vector<TwoColourId> t0_components;
  std::vector<TwoColourId> t2_components;
};

AnalysisReport analyze(const FlagSystem& fs);

/// Stable, versioned schema ("schema": "mapsym/1"), canonical key order.
std::string analysis_to_json(const AnalysisReport& r);

/// Human-readable table; ANSI colour per use_colour.
std::string analysis_to_text(const AnalysisReport& r, bool use_colour);

}  // namespace mapsym

#endif
