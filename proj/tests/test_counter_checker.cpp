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

#include "rc4ft/counter_checker.hpp"

#include <bit>

#include <doctest.h>

using namespace rc4ft;

namespace {

CounterWindow aligned_window(int start) {
    CounterWindow window;
    for (int k = 0; k < 8; ++k)
        window.counts[k] = static_cast<std::uint8_t>(start + k);
    window.fill = 8;
    return window;
}

bool oracle_undetected(int mask) {
    return std::popcount(unsigned(mask) & 0x55u) % 2 == 0 &&
           std::popcount(unsigned(mask) & 0xAAu) % 2 == 0 &&
           std::popcount(unsigned(mask) & 0x88u) % 2 == 0;
}

}  // namespace

TEST_CASE("position parities of known counts") {
    CHECK(even_parity(0x00) == false);
    CHECK(even_parity(0x01) == true);
    CHECK(even_parity(0xFE) == true);

    CHECK(odd_parity(0x02) == true);
    CHECK(odd_parity(0xFF) == false);
    // Bit positions 1,3,5,7 of 0x07 hold a single one (bit 1).
    CHECK(odd_parity(0x07) == true);

    CHECK(msb_parity(0x00) == false);
    CHECK(msb_parity(0x08) == true);
    CHECK(msb_parity(0xFF) == false);
    CHECK(msb_parity(0xFE) == false);
}

TEST_CASE("every aligned fault-free window passes") {
    for (int start = 0; start < 256; start += 8) {
        const CheckerVerdict verdict = check_window(aligned_window(start));
        CHECK(verdict.evaluated);
        CHECK(verdict.ok);
    }
}

TEST_CASE("counting pattern across window halves") {
    // Adding 4 below an aligned boundary toggles exactly bit 2, so the
    // even-position parity complements and the odd-position parity holds.
    for (int start = 0; start < 256; start += 8) {
        for (int k = 0; k < 4; ++k) {
            const auto lo = static_cast<std::uint8_t>(start + k);
            const auto hi = static_cast<std::uint8_t>(start + k + 4);
            CHECK(even_parity(lo) != even_parity(hi));
            CHECK(odd_parity(lo) == odd_parity(hi));
            CHECK(msb_parity(lo) == msb_parity(hi));
        }
    }
}

TEST_CASE("single even-position flip breaks the window") {
    CounterWindow window = aligned_window(0);
    window.counts[3] ^= 0x01;
    CHECK_FALSE(check_window(window).ok);
}

TEST_CASE("mask 0x05 on one count escapes") {
    CounterWindow window = aligned_window(0);
    window.counts[2] ^= 0x05;  // two even positions, nothing else
    CHECK(check_window(window).ok);
}

TEST_CASE("single-bit counter faults are always detected") {
    for (int start = 0; start < 256; start += 8) {
        for (int slot = 0; slot < 8; ++slot) {
            for (int bit = 0; bit < 8; ++bit) {
                CounterWindow window = aligned_window(start);
                window.counts[slot] ^= static_cast<std::uint8_t>(1 << bit);
                CHECK_FALSE(check_window(window).ok);
            }
        }
    }
}

TEST_CASE("detection is slot- and window-independent and matches the closed form") {
    int undetected_count = 0;
    for (int mask = 1; mask <= 255; ++mask) {
        const bool expect_undetected = oracle_undetected(mask);
        if (expect_undetected) ++undetected_count;
        for (int start = 0; start < 256; start += 8) {
            for (int slot = 0; slot < 8; ++slot) {
                CounterWindow window = aligned_window(start);
                window.counts[slot] ^= static_cast<std::uint8_t>(mask);
                CHECK(check_window(window).ok == expect_undetected);
            }
        }
        // Odd total weight always trips one of the positional parities.
        if (std::popcount(unsigned(mask)) % 2 != 0)
            CHECK_FALSE(expect_undetected);
    }
    CHECK(undetected_count == 31);
}

TEST_CASE("partial windows abstain") {
    CounterWindow window = aligned_window(8);
    window.fill = 7;
    const CheckerVerdict verdict = check_window(window);
    CHECK(verdict.ok);
    CHECK_FALSE(verdict.evaluated);
}

TEST_CASE("CounterChecker buffers eight samples then fires and resets") {
    CounterChecker checker;
    for (int k = 0; k < 7; ++k) {
        const CheckerVerdict verdict = checker.push(static_cast<std::uint8_t>(k));
        CHECK_FALSE(verdict.evaluated);
        CHECK(verdict.ok);
    }
    CHECK(checker.fill() == 7);
    const CheckerVerdict fired = checker.push(7);
    CHECK(fired.evaluated);
    CHECK(fired.ok);
    CHECK(checker.fill() == 0);

    // Second window, with one buffered sample corrupted through the fault hook.
    for (int k = 8; k < 12; ++k) checker.push(static_cast<std::uint8_t>(k));
    std::uint8_t pre = 0;
    CHECK(checker.xor_slot(1, 0x01, &pre));
    CHECK(pre == 9);
    CHECK_FALSE(checker.xor_slot(5, 0x01, &pre));  // not buffered yet
    for (int k = 12; k < 15; ++k) checker.push(static_cast<std::uint8_t>(k));
    const CheckerVerdict bad = checker.push(15);
    CHECK(bad.evaluated);
    CHECK_FALSE(bad.ok);
}
