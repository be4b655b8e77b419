#ifndef MAPSYM_JSON_IO_HPP
#define MAPSYM_JSON_IO_HPP

#include <string>

#include "mapsym/flag_system.hpp"
#include "mapsym/pregraph.hpp"

namespace mapsym {

/// Canonical interchange format:
///   {"flags": n, "s0": [...], "s1": [...], "s2": [...]}
/// 0-based, whitespace-insensitive, unknown fields rejected.
FlagSystem flag_system_from_json(const std::string& text);
std::string flag_system_to_json(const FlagSystem& fs);

/// {"vertices": n, "edges": [[u,v,c]...], "semi_edges": [[v,c]...]}
Pregraph pregraph_from_json(const std::string& text);
std::string pregraph_to_json(const Pregraph& p);

}  // namespace mapsym

#endif
