//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "poem/bitvector.hpp"
#include "poem/mol_graph.hpp"

namespace poem {

enum class SchemeKind : std::uint8_t {
  kMorgan = 0,
  kAtomPair = 1,
  kPath = 2,
  kExternal = 3,
};

struct FingerprintScheme {
  std::string id;
  SchemeKind kind = SchemeKind::kMorgan;
  int radius = 2;           // morgan only
  int max_path_len = 7;     // path only
  bool use_chirality = false;
  bool feature_classes = false;  // morgan: coarse pharmacophore-class invariants
  std::uint32_t length = 2048;   // folded bit count, power of two
};

struct Fingerprint {
  std::string scheme_id;
  BitVector bits;
};

// Ordered scheme roster. The order is part of a library's identity: dominance
// comparisons are positional, so it is persisted and never reshuffled.
class SchemeSet {
 public:
  SchemeSet() = default;
  explicit SchemeSet(std::vector<FingerprintScheme> schemes);

  [[nodiscard]] std::size_t size() const { return schemes_.size(); }
  [[nodiscard]] const FingerprintScheme& operator[](std::size_t i) const {
    return schemes_[i];
  }
  [[nodiscard]] const std::vector<FingerprintScheme>& schemes() const {
    return schemes_;
  }
  // -1 when absent.
  [[nodiscard]] int index_of(std::string_view scheme_id) const;

 private:
  std::vector<FingerprintScheme> schemes_;
};

// The six built-in schemes: Morgan r=2/r=4 (element invariants), the same two
// radii over coarse atom classes (donor/acceptor/aromatic/halogen/charge),
// atom pairs, and linear paths. All chirality-aware where applicable.
SchemeSet default_scheme_set(std::uint32_t length = 2048);
// Subset of the default roster by id, preserving roster order.
SchemeSet native_scheme_set(std::span<const std::string> ids,
                            std::uint32_t length = 2048);

// Circular fingerprint: iterated neighborhood hashing, layers 0..radius all
// folded in, so a higher radius strictly accumulates bits over a lower one.
Fingerprint morgan_fingerprint(const MolGraph& mol, const FingerprintScheme& scheme);

// One hashed (type_a, type_b, topological distance) per connected atom pair.
Fingerprint atom_pair_fingerprint(const MolGraph& mol, const FingerprintScheme& scheme);

// All simple bond paths up to max_path_len, direction-normalized.
Fingerprint path_fingerprint(const MolGraph& mol, const FingerprintScheme& scheme);

// Dispatch on scheme kind; external schemes cannot be computed from a graph.
Fingerprint compute_fingerprint(const MolGraph& mol, const FingerprintScheme& scheme);

std::vector<Fingerprint> fingerprint_molecule(const MolGraph& mol,
                                              const SchemeSet& schemes);

// 1 - |a&b| / |a|b|. Two empty fingerprints are at distance 0. Throws
// SchemeMismatch when ids or lengths differ.
double tanimoto_distance(const Fingerprint& a, const Fingerprint& b);
double tanimoto_distance_bits(const BitVector& a, const BitVector& b);
double tanimoto_distance_words(std::span<const std::uint64_t> a,
                               std::span<const std::uint64_t> b);

// Externally computed fingerprints. Text format:
//   line 1:  scheme_id,length
//   rows:    molecule_key,hex_bits
// hex_bits holds exactly ceil(length/4) digits (optional 0x prefix accepted),
// most significant bit of the first digit = bit 0.
struct ExternalFingerprintFile {
  FingerprintScheme scheme;  // kind = kExternal
  std::vector<std::pair<std::string, BitVector>> rows;
};

ExternalFingerprintFile load_external_fingerprints(std::istream& in);
ExternalFingerprintFile load_external_fingerprints_file(const std::string& path);
void write_external_fingerprints(std::ostream& out, const ExternalFingerprintFile& file);

}  // namespace poem
