//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "poem/mol_graph.hpp"

#include <algorithm>
#include <cstddef>

#include "poem/hash.hpp"

namespace poem {

namespace {

// Symbols indexed by atomic number - 1.
constexpr const char* kSymbols[] = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
    "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
    "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
    "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
    "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
    "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
    "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr"};

constexpr std::size_t kNumElements = sizeof(kSymbols) / sizeof(kSymbols[0]);

}  // namespace

std::uint8_t element_number(std::string_view symbol) {
  for (std::size_t i = 0; i < kNumElements; ++i) {
    if (symbol == kSymbols[i]) return static_cast<std::uint8_t>(i + 1);
  }
  return 0;
}

std::string_view element_symbol(std::uint8_t number) {
  if (number == 0 || number > kNumElements) return "?";
  return kSymbols[number - 1];
}

void MolGraph::finalize_topology() {
  adjacency.assign(atoms.size(), {});
  for (std::uint32_t bi = 0; bi < bonds.size(); ++bi) {
    const Bond& b = bonds[bi];
    adjacency[b.a].emplace_back(b.b, bi);
    adjacency[b.b].emplace_back(b.a, bi);
  }

  // Connected components give the fragment count.
  const std::size_t n = atoms.size();
  std::vector<int> comp(n, -1);
  int n_comp = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = n_comp;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::uint32_t a = stack.back();
      stack.pop_back();
      for (auto [nbr, bi] : adjacency[a]) {
        (void)bi;
        if (comp[nbr] < 0) {
          comp[nbr] = n_comp;
          stack.push_back(nbr);
        }
      }
    }
    ++n_comp;
  }
  num_fragments = n_comp == 0 ? 1 : n_comp;

  // Ring membership: every non-bridge edge lies on a cycle. Iterative DFS
  // lowlink bridge finding; parent edges tracked by bond index so parallel
  // input errors cannot confuse it (duplicate bonds are rejected upstream).
  for (Atom& a : atoms) a.in_ring = false;
  for (Bond& b : bonds) b.in_ring = false;
  if (n == 0) return;

  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    std::uint32_t atom;
    std::uint32_t parent_bond;
    std::size_t next_edge;
  };
  std::vector<Frame> frames;
  int timer = 0;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (disc[start] >= 0) continue;
    frames.push_back({start, UINT32_MAX, 0});
    disc[start] = low[start] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_edge < adjacency[f.atom].size()) {
        const auto [nbr, bi] = adjacency[f.atom][f.next_edge++];
        if (bi == f.parent_bond) continue;
        if (disc[nbr] >= 0) {
          low[f.atom] = std::min(low[f.atom], disc[nbr]);
          bonds[bi].in_ring = true;  // back edge always closes a cycle
        } else {
          disc[nbr] = low[nbr] = timer++;
          frames.push_back({nbr, bi, 0});
        }
      } else {
        const Frame done = f;
        frames.pop_back();
        if (!frames.empty()) {
          Frame& parent = frames.back();
          low[parent.atom] = std::min(low[parent.atom], low[done.atom]);
          if (low[done.atom] <= disc[parent.atom]) {
            bonds[done.parent_bond].in_ring = true;
          }
        }
      }
    }
  }
  for (const Bond& b : bonds) {
    if (b.in_ring) {
      atoms[b.a].in_ring = true;
      atoms[b.b].in_ring = true;
    }
  }
}

std::uint64_t graph_invariant_key(const MolGraph& mol) {
  const std::size_t n = mol.num_atoms();
  std::vector<std::uint64_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Atom& a = mol.atoms[i];
    labels[i] = Hash64()
                    .add(a.element)
                    .add(static_cast<std::uint64_t>(a.formal_charge + 128))
                    .add(a.aromatic)
                    .add(a.isotope)
                    .add(static_cast<std::uint64_t>(a.total_h()))
                    .value();
  }

  auto distinct = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };

  std::size_t classes = distinct(labels);
  std::vector<std::uint64_t> next(n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nbrs;
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      nbrs.clear();
      for (auto [nbr, bi] : mol.adjacency[i]) {
        nbrs.emplace_back(static_cast<std::uint64_t>(mol.bonds[bi].order),
                          labels[nbr]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      Hash64 h;
      h.add(labels[i]);
      for (const auto& [order, lab] : nbrs) h.add(order).add(lab);
      next[i] = h.value();
    }
    labels.swap(next);
    const std::size_t refined = distinct(labels);
    if (refined == classes) break;  // partition stable; labels only rename
    classes = refined;
  }

  std::sort(labels.begin(), labels.end());
  Hash64 h;
  h.add(n).add(mol.num_bonds());
  for (std::uint64_t lab : labels) h.add(lab);
  return h.value();
}

}  // namespace poem
