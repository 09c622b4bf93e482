//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "poem/errors.hpp"

namespace poem {

// Fixed-length bit vector backing every fingerprint. Bit i lives in
// word i/64 at position i%64; the hex text form instead puts bit 0 at the
// most significant position of the first digit (fingerprint-file convention).
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(std::uint32_t n_bits)
      : words_((n_bits + 63) / 64, 0), n_bits_(n_bits) {}

  [[nodiscard]] std::uint32_t size() const { return n_bits_; }

  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  [[nodiscard]] bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  [[nodiscard]] std::uint32_t popcount() const {
    std::uint32_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
    return n;
  }

  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }
  [[nodiscard]] std::span<std::uint64_t> words() { return words_; }

  // OR-fold the upper half into the lower half, halving the length.
  [[nodiscard]] BitVector folded() const {
    BitVector out(n_bits_ / 2);
    for (std::uint32_t i = 0; i < n_bits_; ++i) {
      if (test(i)) out.set(i % out.size());
    }
    return out;
  }

  // Hex encoding: exactly ceil(n_bits/4) uppercase digits, bit 0 at the
  // most significant bit of the first digit.
  [[nodiscard]] std::string to_hex() const {
    static const char* digits = "0123456789ABCDEF";
    const std::uint32_t n_digits = (n_bits_ + 3) / 4;
    std::string out(n_digits, '0');
    for (std::uint32_t q = 0; q < n_digits; ++q) {
      unsigned d = 0;
      for (unsigned r = 0; r < 4; ++r) {
        const std::uint32_t bit = 4 * q + r;
        if (bit < n_bits_ && test(bit)) d |= 0x8u >> r;
      }
      out[q] = digits[d];
    }
    return out;
  }

  // Inverse of to_hex(). Accepts an optional 0x/0X prefix and either digit
  // case; requires exactly ceil(n_bits/4) digits and no bit set past n_bits.
  static BitVector from_hex(std::string_view hex, std::uint32_t n_bits) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
      hex.remove_prefix(2);
    }
    const std::uint32_t n_digits = (n_bits + 3) / 4;
    if (hex.size() != n_digits) {
      throw FormatError("hex fingerprint has " + std::to_string(hex.size()) +
                        " digits, expected " + std::to_string(n_digits) +
                        " for length " + std::to_string(n_bits));
    }
    BitVector out(n_bits);
    for (std::uint32_t q = 0; q < n_digits; ++q) {
      const char c = hex[q];
      unsigned d = 0;
      if (c >= '0' && c <= '9') {
        d = static_cast<unsigned>(c - '0');
      } else if (c >= 'A' && c <= 'F') {
        d = static_cast<unsigned>(c - 'A' + 10);
      } else if (c >= 'a' && c <= 'f') {
        d = static_cast<unsigned>(c - 'a' + 10);
      } else {
        throw FormatError(std::string("invalid hex digit '") + c + "'");
      }
      for (unsigned r = 0; r < 4; ++r) {
        if ((d & (0x8u >> r)) == 0) continue;
        const std::uint32_t bit = 4 * q + r;
        if (bit >= n_bits) {
          throw FormatError("hex fingerprint sets a bit past declared length " +
                            std::to_string(n_bits));
        }
        out.set(bit);
      }
    }
    return out;
  }

  bool operator==(const BitVector&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::uint32_t n_bits_ = 0;
};

}  // namespace poem
