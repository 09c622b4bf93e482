//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "poem/smiles.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "poem/errors.hpp"

namespace poem {

namespace {

struct ValenceSet {
  std::uint8_t element;
  std::uint8_t allowed[3];  // ascending, 0-terminated
};

// Standard valences for the organic subset; implicit hydrogens fill the
// smallest allowed valence not below the bonded degree.
constexpr ValenceSet kValences[] = {
    {5, {3, 0, 0}},    // B
    {6, {4, 0, 0}},    // C
    {7, {3, 5, 0}},    // N
    {8, {2, 0, 0}},    // O
    {9, {1, 0, 0}},    // F
    {15, {3, 5, 0}},   // P
    {16, {2, 4, 6}},   // S
    {17, {1, 0, 0}},   // Cl
    {35, {1, 0, 0}},   // Br
    {53, {1, 0, 0}},   // I
};

const ValenceSet* valences_for(std::uint8_t element) {
  for (const auto& v : kValences) {
    if (v.element == element) return &v;
  }
  return nullptr;
}

int bond_degree(BondOrder order) {
  switch (order) {
    case BondOrder::kSingle:
    case BondOrder::kAromatic:
      return 1;
    case BondOrder::kDouble:
      return 2;
    case BondOrder::kTriple:
      return 3;
  }
  return 1;
}

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\';
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;
  MolGraph mol;

  std::vector<int> branch_stack;
  int prev = -1;
  char pending_bond = 0;

  struct OpenRing {
    int atom;
    char bond;  // 0 = unspecified
  };
  std::map<int, OpenRing> open_rings;

  [[noreturn]] void fail(const std::string& msg) const {
    throw UnparsableMolecule("cannot parse '" + std::string(src) + "' at position " +
                             std::to_string(pos) + ": " + msg);
  }

  [[nodiscard]] bool eof() const { return pos >= src.size(); }
  [[nodiscard]] char peek() const { return eof() ? '\0' : src[pos]; }
  [[nodiscard]] char peek2() const {
    return pos + 1 < src.size() ? src[pos + 1] : '\0';
  }

  int read_digits(int max_digits) {
    int value = 0;
    int seen = 0;
    while (seen < max_digits && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (src[pos] - '0');
      ++pos;
      ++seen;
    }
    return seen == 0 ? -1 : value;
  }

  BondOrder resolve_order(char bond_char, const Atom& a, const Atom& b) const {
    switch (bond_char) {
      case '=':
        return BondOrder::kDouble;
      case '#':
        return BondOrder::kTriple;
      case ':':
        return BondOrder::kAromatic;
      case '-':
      case '/':
      case '\\':
        return BondOrder::kSingle;
      default:
        return (a.aromatic && b.aromatic) ? BondOrder::kAromatic
                                          : BondOrder::kSingle;
    }
  }

  static BondDirection direction_of(char bond_char) {
    if (bond_char == '/') return BondDirection::kUp;
    if (bond_char == '\\') return BondDirection::kDown;
    return BondDirection::kNone;
  }

  void add_bond(int a, int b, char bond_char) {
    if (a == b) fail("ring bond connects an atom to itself");
    for (const Bond& existing : mol.bonds) {
      const auto lo = static_cast<std::uint32_t>(std::min(a, b));
      const auto hi = static_cast<std::uint32_t>(std::max(a, b));
      if (std::min(existing.a, existing.b) == lo &&
          std::max(existing.a, existing.b) == hi) {
        fail("duplicate bond between atoms " + std::to_string(a) + " and " +
             std::to_string(b));
      }
    }
    Bond bond;
    bond.a = static_cast<std::uint32_t>(a);
    bond.b = static_cast<std::uint32_t>(b);
    bond.order = resolve_order(bond_char, mol.atoms[a], mol.atoms[b]);
    bond.direction = direction_of(bond_char);
    mol.bonds.push_back(bond);
  }

  void finish_atom(Atom atom) {
    mol.atoms.push_back(atom);
    const int idx = static_cast<int>(mol.atoms.size()) - 1;
    if (prev >= 0) {
      add_bond(prev, idx, pending_bond);
    } else if (pending_bond != 0) {
      fail("bond symbol with no preceding atom");
    }
    pending_bond = 0;
    prev = idx;
  }

  void ring_closure(int digit) {
    if (prev < 0) fail("ring closure digit before any atom");
    const auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      open_rings[digit] = OpenRing{prev, pending_bond};
      pending_bond = 0;
      return;
    }
    const OpenRing open = it->second;
    open_rings.erase(it);
    char bond_char = open.bond;
    if (pending_bond != 0) {
      if (bond_char == 0) {
        bond_char = pending_bond;
      } else {
        const Atom& a = mol.atoms[open.atom];
        const Atom& b = mol.atoms[prev];
        if (resolve_order(bond_char, a, b) != resolve_order(pending_bond, a, b)) {
          fail("conflicting bond orders on ring closure " + std::to_string(digit));
        }
      }
    }
    pending_bond = 0;
    add_bond(open.atom, prev, bond_char);
  }

  Atom parse_bracket_atom() {
    ++pos;  // consume '['
    Atom atom;
    atom.explicit_h = 0;

    const int isotope = read_digits(3);
    if (isotope >= 0) atom.isotope = static_cast<std::uint16_t>(isotope);

    // Aromatic two-letter symbols first, then aromatic single, then the
    // general element table (longest match).
    const char c = peek();
    if (c == '\0') fail("unterminated bracket atom");
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string_view two = src.substr(pos, 2);
      std::uint8_t elem = 0;
      if (two == "se" || two == "as") {
        elem = element_number(two == "se" ? "Se" : "As");
        pos += 2;
      } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' ||
                 c == 's') {
        char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        elem = element_number(std::string_view(&upper, 1));
        ++pos;
      } else {
        fail(std::string("unknown aromatic symbol '") + c + "'");
      }
      atom.element = elem;
      atom.aromatic = true;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      std::uint8_t elem = 0;
      if (std::islower(static_cast<unsigned char>(peek2()))) {
        elem = element_number(src.substr(pos, 2));
        if (elem != 0) pos += 2;
      }
      if (elem == 0) {
        elem = element_number(src.substr(pos, 1));
        if (elem == 0) fail(std::string("unknown element symbol '") + c + "'");
        ++pos;
      }
      atom.element = elem;
    } else {
      fail(std::string("unexpected character '") + c + "' in bracket atom");
    }

    if (peek() == '@') {
      ++pos;
      if (peek() == '@') {
        ++pos;
        atom.chirality = Chirality::kClockwise;
      } else {
        atom.chirality = Chirality::kCounterclockwise;
      }
    }

    if (peek() == 'H') {
      ++pos;
      const int count = read_digits(2);
      atom.explicit_h = static_cast<std::int16_t>(count < 0 ? 1 : count);
    }

    if (peek() == '+' || peek() == '-') {
      const char sign_char = peek();
      const int sign = sign_char == '+' ? 1 : -1;
      ++pos;
      int magnitude = 1;
      const int digits = read_digits(2);
      if (digits >= 0) {
        magnitude = digits;
      } else {
        while (peek() == sign_char) {
          ++pos;
          ++magnitude;
        }
      }
      if (magnitude > 15) fail("formal charge out of range");
      atom.formal_charge = static_cast<std::int8_t>(sign * magnitude);
    }

    if (peek() != ']') fail("expected ']' to close bracket atom");
    ++pos;
    return atom;
  }

  // Returns true if an atom token was consumed.
  bool parse_organic_atom() {
    const char c = peek();
    Atom atom;
    if (c == 'C' && peek2() == 'l') {
      atom.element = element_number("Cl");
      pos += 2;
    } else if (c == 'B' && peek2() == 'r') {
      atom.element = element_number("Br");
      pos += 2;
    } else if (c == 'B' || c == 'C' || c == 'N' || c == 'O' || c == 'P' ||
               c == 'S' || c == 'F' || c == 'I') {
      char sym = c;
      atom.element = element_number(std::string_view(&sym, 1));
      ++pos;
    } else if (c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' ||
               c == 's') {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      atom.element = element_number(std::string_view(&upper, 1));
      atom.aromatic = true;
      ++pos;
    } else {
      return false;
    }
    finish_atom(atom);
    return true;
  }

  void run() {
    if (src.empty()) throw UnparsableMolecule("empty SMILES string");
    while (!eof()) {
      const char c = peek();
      if (is_bond_char(c)) {
        if (pending_bond != 0) fail("two consecutive bond symbols");
        pending_bond = c;
        ++pos;
      } else if (c == '(') {
        if (prev < 0) fail("branch before any atom");
        if (pending_bond != 0) fail("bond symbol before '('");
        branch_stack.push_back(prev);
        ++pos;
      } else if (c == ')') {
        if (pending_bond != 0) fail("dangling bond symbol before ')'");
        if (branch_stack.empty()) fail("unmatched ')'");
        prev = branch_stack.back();
        branch_stack.pop_back();
        ++pos;
      } else if (c == '.') {
        if (pending_bond != 0) fail("bond symbol before '.'");
        prev = -1;
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos;
        ring_closure(c - '0');
      } else if (c == '%') {
        ++pos;
        if (!std::isdigit(static_cast<unsigned char>(peek())) ||
            !std::isdigit(static_cast<unsigned char>(peek2()))) {
          fail("'%' ring closure needs two digits");
        }
        const int digit = (src[pos] - '0') * 10 + (src[pos + 1] - '0');
        pos += 2;
        ring_closure(digit);
      } else if (c == '[') {
        finish_atom(parse_bracket_atom());
      } else if (!parse_organic_atom()) {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (pending_bond != 0) fail("input ends with a dangling bond symbol");
    if (!branch_stack.empty()) fail("unmatched '('");
    if (!open_rings.empty()) {
      fail("ring closure digit " + std::to_string(open_rings.begin()->first) +
           " never closed");
    }
    if (mol.atoms.empty()) fail("no atoms");
  }

  void assign_implicit_hydrogens() {
    std::vector<int> degree(mol.atoms.size(), 0);
    for (const Bond& b : mol.bonds) {
      degree[b.a] += bond_degree(b.order);
      degree[b.b] += bond_degree(b.order);
    }
    for (std::size_t i = 0; i < mol.atoms.size(); ++i) {
      Atom& atom = mol.atoms[i];
      if (atom.explicit_h >= 0) continue;  // bracket atom: trusted as written
      const ValenceSet* vs = valences_for(atom.element);
      if (vs == nullptr) fail("no valence model for bare atom");
      auto fill = [&](int bonded) -> int {
        for (std::uint8_t v : vs->allowed) {
          if (v != 0 && v >= bonded) return v - bonded;
        }
        return -1;
      };
      // Aromatic atoms carry one extra bonded unit for the ring pi system;
      // lone-pair aromatics (o, s) fall back to the plain count.
      int h = atom.aromatic ? fill(degree[i] + 1) : fill(degree[i]);
      if (h < 0 && atom.aromatic) h = fill(degree[i]);
      if (h < 0) {
        pos = 0;
        fail("valence of atom " + std::to_string(i) + " (" +
             std::string(element_symbol(atom.element)) +
             ") cannot be satisfied");
      }
      atom.implicit_h = static_cast<std::uint8_t>(h);
    }
  }
};

}  // namespace

MolGraph parse_smiles(std::string_view input) {
  Parser parser;
  parser.src = input;
  parser.mol.source = std::string(input);
  parser.run();
  parser.assign_implicit_hydrogens();
  parser.mol.finalize_topology();
  return std::move(parser.mol);
}

}  // namespace poem
