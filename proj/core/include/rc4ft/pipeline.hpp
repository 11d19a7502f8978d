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

#ifndef RC4FT_PIPELINE_HPP_
#define RC4FT_PIPELINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rc4ft/fault.hpp"
#include "rc4ft/rc4_core.hpp"
#include "rc4ft/types.hpp"

namespace rc4ft {

enum class RunState : std::uint8_t { Done, Halted };

/// Final pipeline state. no_fault is the AND of the three most recent
/// checker verdicts; once it drops the machine freezes at halted_at and
/// performs no further datapath work.
struct PipelineStatus {
    RunState state = RunState::Done;
    std::uint64_t bytes_emitted = 0;
    bool no_fault = true;
    bool crc_ok = true;
    bool add_ok = true;
    bool cnt_ok = true;
    std::optional<ClockPhase> halted_at;
};

/// One half-cycle of the execution trace: registers after the edge's
/// datapath plus the three live checker verdicts; z is set on falling
/// edges that emit a keystream byte.
struct TraceRecord {
    std::uint64_t cycle = 0;
    Edge edge = Edge::Rising;
    std::uint8_t i = 0;
    std::uint8_t j = 0;
    bool crc_ok = true;
    bool add_ok = true;
    bool cnt_ok = true;
    std::optional<std::uint8_t> z;
};

struct RunOptions {
    bool checkers_enabled = true;
    bool record_trace = false;
};

struct RunResult {
    std::vector<std::uint8_t> keystream;
    PipelineStatus status;
    FaultLog fault_log;
    std::vector<TraceRecord> trace;
    std::uint64_t total_cycles = 0;  // completed clock cycles
    std::uint64_t ksa_cycles = 0;
    std::uint64_t prga_cycles = 0;   // includes the initial fill cycle
};

/// Runs the dual-edge schedule end to end: 256 KSA cycles, one PRGA fill
/// cycle, then one cycle per keystream byte. Rising edges apply due
/// faults, perform the step's additions and run the addition checker;
/// falling edges apply due faults, buffer the i counter (window check on
/// every 8th falling edge of a phase), perform the swap and byte emission,
/// and run the access checker on the two entries read at the rising edge.
/// Any failing verdict halts the machine before the next half-cycle.
RunResult run(const SecretKey& key, std::uint64_t n_bytes,
              const FaultPlan& plan = {}, const RunOptions& options = {});

/// Fault-free total cycle count for n bytes; identical whether the
/// checkers run or not, since they occupy the same half-cycles as the
/// datapath.
std::uint64_t throughput_probe(const SecretKey& key, std::uint64_t n_bytes,
                               bool checkers_enabled);

/// CSV trace: header plus one row per half-cycle
/// (cycle,edge,i,j,crc_ok,add_ok,cnt_ok,z_hex).
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);

}  // namespace rc4ft

#endif  // RC4FT_PIPELINE_HPP_
