#ifndef MAPSYM_CATALOG_HPP
#define MAPSYM_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mapsym/flag_system.hpp"
#include "mapsym/pregraph.hpp"
#include "mapsym/symmetry.hpp"

namespace mapsym {

/// The eight two-colour type shapes common to the vertex (v_x) and face
/// (f_x) families. Shapes share colour 1; the other colour is 2 for
/// vertices and 0 for faces.
enum class TwoColourId { x1a, x2a, x2b, x2c, x3a, x4a, x4b, x4c };

enum class ElementFamily { vertex, face };  // v_x over {1,2}, f_x over {0,1}

/// "v_3a" / "f_3a" style label.
std::string two_colour_name(TwoColourId id, ElementFamily family);

/// The concrete shape pregraph of one family member.
Pregraph two_colour_shape(TwoColourId id, ElementFamily family);

/// Degree/size formula of a type row: value = multiplier * n, n >= min_n;
/// the characteristic cycle length is 2 * value.
struct TypeFormula {
  int multiplier;
  int min_n;
  bool admits(int value) const {
    return value % multiplier == 0 && value / multiplier >= min_n;
  }
};

/// Row of the degree (vertex) or size (face) table; the two tables share
/// one formula set.
TypeFormula table_lookup(TwoColourId id);

/// Matches a connected two-colour pregraph against the eight shapes of
/// the chosen family. Empty when it is none of them.
std::optional<TwoColourId> classify_two_colour_shape(const Pregraph& q, ElementFamily family);

/// One of the 22 named 4-orbit symmetry type graph classes.
struct TypeGraphEntry {
  std::string name;                        // "4_A", "4_Ad", ... "4_Hp"
  Pregraph pregraph;                       // 4 vertices, colours 0,1,2
  std::vector<TwoColourId> t0_fingerprint; // sorted component multiset after deleting colour 0
  std::vector<TwoColourId> t2_fingerprint; // after deleting colour 2
  std::string dual_name;                   // entry isomorphic to the 0<->2 colour swap
};

/// The embedded catalog, fingerprint-checked at first use; a transcription
/// error aborts via std::logic_error rather than misclassifying.
const std::vector<TypeGraphEntry>& catalog();

const TypeGraphEntry& catalog_entry(const std::string& name);

/// Classifies a 4-orbit map by matching its symmetry type graph against
/// the catalog. Throws WrongOrbitCountError when orbit_count(fs) != 4.
struct WrongOrbitCountError : std::runtime_error {
  int k;
  explicit WrongOrbitCountError(int k_)
      : std::runtime_error("map is " + std::to_string(k_) + "-orbit, not 4-orbit"), k(k_) {}
};

const TypeGraphEntry& classify_4orbit(const FlagSystem& fs);

/// Per-element classification record.
struct ElementTypeRecord {
  int element;  // vertex or face orbit id
  TwoColourId type;
  int value;    // degree or size
  CharacteristicSystem char_system;
  int component;  // index of the containing T0/T2 component
};

/// Full cross-check of a 4-orbit map against the catalog fingerprints
/// and the degree/size formulas. Violations indicate a
/// bug, never valid data.
struct TableReport {
  std::string type_name;
  std::vector<ElementTypeRecord> vertex_records;
  std::vector<ElementTypeRecord> face_records;
  std::vector<TwoColourId> t0_components;
  std::vector<TwoColourId> t2_components;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

TableReport verify_against_tables(const FlagSystem& fs);

/// All connected pregraphs on k vertices with one incidence per colour
/// per vertex whose {0,2}-subgraph components are quotient shapes of the
/// alternating 4-cycle, up to isomorphism. k = 4 yields the 22 classes.
std::vector<Pregraph> enumerate_candidates(int k);

}  // namespace mapsym

#endif
