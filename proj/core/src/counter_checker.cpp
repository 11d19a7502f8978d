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

namespace rc4ft {

CheckerVerdict check_window(const CounterWindow& window) {
    if (!window.full()) return {true, false};
    const auto& c = window.counts;
    for (int k = 0; k < 4; ++k) {
        if (even_parity(c[k]) == even_parity(c[k + 4])) return {false, true};
        if (odd_parity(c[k]) != odd_parity(c[k + 4])) return {false, true};
    }
    const bool msb = msb_parity(c[0]);
    for (int k = 1; k < 8; ++k)
        if (msb_parity(c[k]) != msb) return {false, true};
    return {true, true};
}

CheckerVerdict CounterChecker::push(std::uint8_t count) {
    window_.counts[window_.fill++] = count;
    if (!window_.full()) return {true, false};
    const CheckerVerdict verdict = check_window(window_);
    window_ = {};
    return verdict;
}

bool CounterChecker::xor_slot(int slot, std::uint8_t mask, std::uint8_t* pre) {
    if (slot < 0 || slot >= window_.fill) return false;
    if (pre != nullptr) *pre = window_.counts[slot];
    window_.counts[slot] ^= mask;
    return true;
}

}  // namespace rc4ft
