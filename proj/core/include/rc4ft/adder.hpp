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

#ifndef RC4FT_ADDER_HPP_
#define RC4FT_ADDER_HPP_

#include <cstdint>

namespace rc4ft {

/// Taps of one 8-bit ripple-carry addition. carries bit k holds the carry
/// out of bit k; the carry out of bit 7 never enters the sum (mod-256).
/// claimed_sum is whatever the datapath produced and may be faulted --
/// the checker treats operands and carries as trusted wires and the sum
/// as the value under test.
struct AdditionRecord {
    std::uint8_t addend = 0;
    std::uint8_t augend = 0;
    bool carry_in = false;
    std::uint8_t carries = 0;
    std::uint8_t claimed_sum = 0;
};

/// The modeled datapath adder: computes (addend + augend + carry_in) mod 256
/// bit by bit and records every carry.
constexpr AdditionRecord ripple_add(std::uint8_t addend, std::uint8_t augend,
                                    bool carry_in = false) {
    AdditionRecord rec{addend, augend, carry_in, 0, 0};
    unsigned carry = carry_in ? 1u : 0u;
    for (int bit = 0; bit < 8; ++bit) {
        const unsigned a = (addend >> bit) & 1u;
        const unsigned b = (augend >> bit) & 1u;
        rec.claimed_sum |= static_cast<std::uint8_t>((a ^ b ^ carry) << bit);
        carry = (a & b) | (a & carry) | (b & carry);
        rec.carries |= static_cast<std::uint8_t>(carry << bit);
    }
    return rec;
}

}  // namespace rc4ft

#endif  // RC4FT_ADDER_HPP_
