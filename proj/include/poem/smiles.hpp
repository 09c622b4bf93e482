//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string_view>

#include "poem/mol_graph.hpp"

namespace poem {

// Parses a practical SMILES subset into a molecular graph:
//   - organic-subset atoms B C N O P S F Cl Br I and aromatic b c n o p s
//   - bracket atoms with isotope, chirality (@/@@), H count, and charge
//   - bond symbols - = # : and directional / \ (stored, not interpreted)
//   - branches, ring closures 0-9 and %nn, dot disconnection
//
// Implicit hydrogens come from the standard valence table; aromatic atoms
// add one to the bonded-degree accounting, falling back to the plain count
// for lone-pair aromatics (furan oxygen). Aromaticity is taken from the
// notation as written; there is no perception or kekulization.
//
// Throws UnparsableMolecule on anything outside the subset, unclosed rings
// or brackets, or valences the table cannot satisfy.
MolGraph parse_smiles(std::string_view input);

}  // namespace poem
