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

#ifndef RC4FT_TYPES_HPP_
#define RC4FT_TYPES_HPP_

#include <cstdint>
#include <string>

namespace rc4ft {

/// Outcome of one checker evaluation. A checker that had nothing to look at
/// (e.g. the counter checker before its window fills) abstains: it reports
/// ok=true with evaluated=false so the fault gate is not tripped.
struct CheckerVerdict {
    bool ok = true;
    bool evaluated = true;
};

/// Clock edge within one cycle. Rising carries the arithmetic, falling the
/// swap/output work; edges always alternate rising -> falling.
enum class Edge : std::uint8_t { Rising, Falling };

/// A specific half-cycle of the simulated clock. Cycles count from 0 and
/// increment after the falling edge.
struct ClockPhase {
    std::uint64_t cycle = 0;
    Edge edge = Edge::Rising;

    friend bool operator==(const ClockPhase&, const ClockPhase&) = default;
};

inline bool phase_less(const ClockPhase& a, const ClockPhase& b) {
    if (a.cycle != b.cycle) return a.cycle < b.cycle;
    return a.edge == Edge::Rising && b.edge == Edge::Falling;
}

std::string to_string(Edge edge);
Edge edge_from_string(const std::string& name);

}  // namespace rc4ft

#endif  // RC4FT_TYPES_HPP_
