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

#ifndef RC4FT_ADDITION_CHECKER_HPP_
#define RC4FT_ADDITION_CHECKER_HPP_

#include <bit>
#include <cstdint>

#include "rc4ft/adder.hpp"
#include "rc4ft/types.hpp"

namespace rc4ft {

/// XOR of the low 4 bits.
constexpr bool nibble_parity(std::uint8_t nibble) {
    return std::popcount(static_cast<unsigned>(nibble & 0xFu)) & 1u;
}

struct ParityPrediction {
    bool low = false;
    bool high = false;
};

/// Predicts the parity of each sum nibble from operand parities and the
/// carry chain, without touching the sum itself. Each sum bit k is
/// a_k ^ b_k ^ c_k with c_k the carry into bit k, so a nibble's parity is
/// the XOR of both operand nibble parities and the four incoming carries:
/// cin, C0, C1, C2 for the low nibble and C3, C4, C5, C6 for the high one
/// (C3, the carry out of bit 3, is the high nibble's carry-in; C7 is the
/// discarded mod-256 overflow and never contributes).
constexpr ParityPrediction predict_parities(const AdditionRecord& rec) {
    const auto carry = [&rec](int bit) -> bool { return (rec.carries >> bit) & 1u; };
    ParityPrediction pred;
    pred.low = nibble_parity(rec.addend) ^ nibble_parity(rec.augend) ^
               rec.carry_in ^ carry(0) ^ carry(1) ^ carry(2);
    pred.high = nibble_parity(rec.addend >> 4) ^ nibble_parity(rec.augend >> 4) ^
                carry(3) ^ carry(4) ^ carry(5) ^ carry(6);
    return pred;
}

/// Pass iff both predicted nibble parities match the claimed sum's.
constexpr CheckerVerdict check_addition(const AdditionRecord& rec) {
    const ParityPrediction pred = predict_parities(rec);
    const bool ok = pred.low == nibble_parity(rec.claimed_sum) &&
                    pred.high == nibble_parity(rec.claimed_sum >> 4);
    return {ok, true};
}

}  // namespace rc4ft

#endif  // RC4FT_ADDITION_CHECKER_HPP_
