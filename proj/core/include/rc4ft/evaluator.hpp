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

#ifndef RC4FT_EVALUATOR_HPP_
#define RC4FT_EVALUATOR_HPP_

#include <array>
#include <cstdint>
#include <string>

namespace rc4ft {

/// Detection outcome for all C(8,n) masks of one Hamming weight, next to
/// the published counts for the same checker design.
struct WeightRow {
    int weight = 0;
    int combinations = 0;
    int detected = 0;
    int undetected = 0;
    int published_detected = 0;
    int published_undetected = 0;

    int delta_detected() const { return detected - published_detected; }
    int delta_undetected() const { return undetected - published_undetected; }
};

/// Exhaustive single-site detection efficiency of one checker over the
/// 255 nonzero 8-bit masks. detected_total/255 is exact; the percent
/// helpers round to one decimal. note documents any disagreement with the
/// published table.
struct EfficiencyReport {
    std::string checker;
    std::array<WeightRow, 8> rows{};
    int detected_total = 0;
    int undetected_total = 0;
    int published_detected_total = 0;
    int published_undetected_total = 0;
    int published_efficiency_percent = 0;
    std::string note;

    static constexpr int kTotalMasks = 255;

    double efficiency_percent() const;  // one decimal
    bool matches_published() const;
};

/// S-box entry faults: every mask applied to the value byte of every
/// underlying value with the residue left intact (the verdict is checked
/// to be value-independent). A mask escapes iff its own residue is zero,
/// i.e. iff it is a multiple of the generator polynomial.
EfficiencyReport evaluate_crc();

/// Adder faults: every mask applied to the claimed sum with operands and
/// carries intact. A mask escapes iff both of its nibbles have even
/// weight. Classification is cross-checked by simulating a sample of
/// masks over all operand pairs.
EfficiencyReport evaluate_addition();

/// Counter faults: every mask applied to one buffered sample, swept over
/// all 8 slots and all 32 aligned windows (the verdict is checked to be
/// slot- and window-independent). A mask escapes iff its weight is even
/// on the even positions, the odd positions, and bits {3,7}.
EfficiencyReport evaluate_counter();

// Serializations. CSV and text mirror the published table layout and add
// the paper_delta column; JSON carries the same data plus the note.
std::string to_json(const EfficiencyReport& report);
std::string to_csv(const EfficiencyReport& report);
std::string to_text(const EfficiencyReport& report);

}  // namespace rc4ft

#endif  // RC4FT_EVALUATOR_HPP_
