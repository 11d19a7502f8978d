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

#ifndef RC4FT_FAULT_HPP_
#define RC4FT_FAULT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rc4ft/counter_checker.hpp"
#include "rc4ft/rc4_core.hpp"
#include "rc4ft/types.hpp"

namespace rc4ft {

enum class FaultTarget : std::uint8_t {
    SBoxValue,    // value byte of S[index]
    SBoxCrc,      // residue nibble of S[index]
    JRegister,    // the j accumulator
    ICounter,     // the i counter
    AdderSum,     // claimed sum of addition #index (0 or 1) this half-cycle
    CounterSlot,  // buffered slot #index of the counter checker window
};

std::string to_string(FaultTarget target);

/// One transient bit-flip: XOR mask into target at (cycle, edge), exactly
/// once. mask must be nonzero and sized to the site (4 bits for SBoxCrc);
/// index must be in the target's range.
struct FaultSpec {
    FaultTarget target = FaultTarget::SBoxValue;
    std::uint16_t index = 0;
    std::uint8_t mask = 0;
    std::uint64_t cycle = 0;
    Edge edge = Edge::Rising;
};

std::string to_string(const FaultSpec& spec);

/// Parses "target:index:mask:cycle:edge" (mask in hex, fields also
/// splittable on whitespace or commas). Throws std::invalid_argument with
/// the offending field.
FaultSpec parse_fault_spec(std::string_view text);

/// Reads one spec per line; '#' starts a comment, blank lines are skipped.
std::vector<FaultSpec> parse_fault_file(std::istream& in);

/// Validated, (cycle, edge)-sorted set of fault specs.
class FaultPlan {
  public:
    FaultPlan() = default;

    /// Validates every spec (nonzero mask, index and mask in range) and
    /// sorts by firing instant. Throws std::invalid_argument naming the
    /// first malformed spec.
    static FaultPlan arm(std::vector<FaultSpec> specs);

    bool empty() const { return specs_.empty(); }
    std::size_t size() const { return specs_.size(); }
    const std::vector<FaultSpec>& specs() const { return specs_; }

  private:
    std::vector<FaultSpec> specs_;
};

/// One fired (or skipped) spec: the site's value before and after the XOR.
/// For AdderSum the site is the per-half-cycle staging register that feeds
/// the adder output; for a skipped firing, applied=false and reason says
/// why the site was unavailable.
struct FaultEvent {
    FaultSpec spec;
    ClockPhase fired_at;
    std::uint8_t pre = 0;
    std::uint8_t post = 0;
    bool applied = true;
    std::string reason;
};

using FaultLog = std::vector<FaultEvent>;

/// The mutable sites a firing spec may touch during one half-cycle.
/// adder_masks is null on edges that schedule no additions; counter is
/// null when checkers are disabled.
struct FaultSites {
    Rc4State* state = nullptr;
    CounterChecker* counter = nullptr;
    AdderFaultMasks* adder_masks = nullptr;
};

/// Walks an armed plan as simulated time advances, firing each due spec
/// once and recording it. Holds its own copy of the plan.
class FaultInjector {
  public:
    explicit FaultInjector(FaultPlan plan) : plan_(std::move(plan)) {}

    /// Fires every spec due at exactly (cycle, edge). Call once per
    /// half-cycle, before the datapath acts.
    void apply_due(ClockPhase now, const FaultSites& sites);

    const FaultLog& log() const { return log_; }
    FaultLog take_log() { return std::move(log_); }

  private:
    FaultPlan plan_;
    std::size_t next_ = 0;
    FaultLog log_;
};

}  // namespace rc4ft

#endif  // RC4FT_FAULT_HPP_
