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

#ifndef RC4FT_COUNTER_CHECKER_HPP_
#define RC4FT_COUNTER_CHECKER_HPP_

#include <array>
#include <bit>
#include <cstdint>

#include "rc4ft/types.hpp"

namespace rc4ft {

/// XOR of bits 0, 2, 4, 6.
constexpr bool even_parity(std::uint8_t v) {
    return std::popcount(static_cast<unsigned>(v & 0x55u)) & 1u;
}

/// XOR of bits 1, 3, 5, 7.
constexpr bool odd_parity(std::uint8_t v) {
    return std::popcount(static_cast<unsigned>(v & 0xAAu)) & 1u;
}

/// XOR of the two nibble MSBs, bits 7 and 3.
constexpr bool msb_parity(std::uint8_t v) {
    return std::popcount(static_cast<unsigned>(v & 0x88u)) & 1u;
}

/// Eight consecutive counter samples, intended to be v..v+7 with v a
/// multiple of 8. Checks only fire on a full window.
struct CounterWindow {
    std::array<std::uint8_t, 8> counts{};
    int fill = 0;

    bool full() const { return fill == 8; }
};

/// Verifies the parity pattern of an aligned 8-count window:
///  (a) even-position parity complements between halves (bit 2 toggles
///      when 4 is added below an aligned boundary),
///  (b) odd-position parity matches between halves (no odd-position bit
///      changes inside an aligned window),
///  (c) the two-nibble-MSB parity is constant across the window (bits
///      3..7 cannot change inside an aligned window).
/// A window that is not yet full yields an abstaining verdict.
CheckerVerdict check_window(const CounterWindow& window);

/// Stateful wrapper the pipeline drives: buffers one counter sample per
/// falling edge and fires check_window on every 8th, then starts a fresh
/// window. Detection only -- the buffer is never written back.
class CounterChecker {
  public:
    /// Buffers one sample. Returns the window verdict on the 8th push,
    /// an abstaining verdict otherwise.
    CheckerVerdict push(std::uint8_t count);

    /// Drops any partial window (phase boundary).
    void reset_window() { window_ = {}; }

    int fill() const { return window_.fill; }

    /// Fault hook: XORs mask into an already-buffered slot. Returns false
    /// (and leaves *pre untouched) if the slot has not been filled yet.
    bool xor_slot(int slot, std::uint8_t mask, std::uint8_t* pre);

  private:
    CounterWindow window_;
};

}  // namespace rc4ft

#endif  // RC4FT_COUNTER_CHECKER_HPP_
