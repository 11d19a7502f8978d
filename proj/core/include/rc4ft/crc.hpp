// Copyright 2026 The rc4ft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RC4FT_CRC_HPP_
#define RC4FT_CRC_HPP_

#include <array>
#include <cstdint>

#include "rc4ft/types.hpp"

namespace rc4ft {

// Generator polynomial x^4 + x^3 + 1, all five coefficient bits.
inline constexpr unsigned kCrcGenerator = 0b11001u;

/// 4-bit residue of value(x) * x^4 mod (x^4 + x^3 + 1) over GF(2),
/// message bits taken MSB-first. No init value, no final xor.
constexpr std::uint8_t crc4(std::uint8_t value) {
    unsigned crc = 0;
    for (int bit = 7; bit >= 0; --bit) {
        const unsigned feedback = ((crc >> 3) ^ (value >> bit)) & 1u;
        crc = (crc << 1) & 0xFu;
        if (feedback) crc ^= kCrcGenerator & 0xFu;
    }
    return static_cast<std::uint8_t>(crc);
}

/// One coded S-box word: 8-bit value in the high bits of the 12-bit
/// codeword, its 4-bit residue in the low bits. A fault-free entry has
/// crc == crc4(value).
struct CodedEntry {
    std::uint8_t value = 0;
    std::uint8_t crc = 0;  // low 4 bits only

    friend bool operator==(const CodedEntry&, const CodedEntry&) = default;
};

/// Encodes a value into a consistent coded entry.
constexpr CodedEntry coded(std::uint8_t value) { return {value, crc4(value)}; }

/// The checker's stored lookup of residues, indexed by value.
class CrcArray {
  public:
    std::uint8_t at(std::uint8_t value) const { return table_[value]; }

  private:
    friend CrcArray build_crc_array();
    std::array<std::uint8_t, 256> table_{};
};

/// Builds the residue lookup: table[n] = crc4(n) for every n.
CrcArray build_crc_array();

/// Pass iff the entry's stored residue matches the lookup for its value.
CheckerVerdict verify_entry(const CodedEntry& entry, const CrcArray& array);

/// Pass iff both accessed entries verify.
CheckerVerdict check_access(const CodedEntry& si, const CodedEntry& sj,
                            const CrcArray& array);

}  // namespace rc4ft

#endif  // RC4FT_CRC_HPP_
