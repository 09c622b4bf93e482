//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace poem {

enum class Chirality : std::uint8_t { kNone = 0, kClockwise = 1, kCounterclockwise = 2 };

enum class BondOrder : std::uint8_t { kSingle = 1, kDouble = 2, kTriple = 3, kAromatic = 4 };

// Cis/trans markers are stored but never interpreted geometrically.
enum class BondDirection : std::uint8_t { kNone = 0, kUp = 1, kDown = 2 };

struct Atom {
  std::uint8_t element = 0;      // atomic number
  bool aromatic = false;
  std::int8_t formal_charge = 0;
  std::int16_t explicit_h = -1;  // -1 = unset; bracket atoms always set it
  std::uint16_t isotope = 0;     // 0 = unspecified
  Chirality chirality = Chirality::kNone;
  bool in_ring = false;
  std::uint8_t implicit_h = 0;   // derived from the valence table at parse time

  [[nodiscard]] int total_h() const {
    return explicit_h >= 0 ? explicit_h : implicit_h;
  }
};

struct Bond {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  BondOrder order = BondOrder::kSingle;
  BondDirection direction = BondDirection::kNone;
  bool in_ring = false;
};

// Parsed molecular graph. Atom order follows the source string; all derived
// fields (adjacency, ring flags, implicit hydrogens) are filled by the parser.
struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::string source;
  int num_fragments = 1;  // > 1 for dot-disconnected inputs

  // adjacency[a] = (neighbor atom index, bond index) pairs in bond order.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency;

  [[nodiscard]] std::size_t num_atoms() const { return atoms.size(); }
  [[nodiscard]] std::size_t num_bonds() const { return bonds.size(); }
  [[nodiscard]] int heavy_degree(std::uint32_t a) const {
    return static_cast<int>(adjacency[a].size());
  }
  // Cyclomatic ring count: E - V + fragments.
  [[nodiscard]] int ring_count() const {
    return static_cast<int>(bonds.size()) - static_cast<int>(atoms.size()) +
           num_fragments;
  }

  // Rebuilds adjacency and ring membership from atoms/bonds. Used by the
  // parser and by anything constructing graphs directly (tests, tools).
  void finalize_topology();
};

// Stable isomorphism-invariant key used for replicate detection: iterated
// neighborhood relabeling to a fixpoint over element, charge, aromaticity,
// isotope, hydrogen count, and bond orders. Chirality tags are ignored, so
// stereoisomers written over the same graph collide on purpose.
std::uint64_t graph_invariant_key(const MolGraph& mol);

// Element symbol <-> atomic number helpers shared by the parser and tools.
// Returns 0 for unknown symbols.
std::uint8_t element_number(std::string_view symbol);
std::string_view element_symbol(std::uint8_t number);

}  // namespace poem
