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

#include "rc4ft/pipeline.hpp"

#include <ostream>

#include "rc4ft/addition_checker.hpp"
#include "rc4ft/counter_checker.hpp"
#include "rc4ft/crc.hpp"
#include "rc4ft/hex.hpp"

namespace rc4ft {

namespace {

// Drives the dual-edge schedule. Verdict registers hold the last value a
// checker produced; the fault gate is their conjunction, sampled after
// every half-cycle.
class Machine {
  public:
    Machine(const SecretKey& key, std::uint64_t n_bytes, const FaultPlan& plan,
            const RunOptions& options)
        : state_(key),
          injector_(plan),
          options_(options),
          n_bytes_(n_bytes),
          crc_array_(build_crc_array()) {}

    RunResult execute() {
        run_ksa();
        if (!halted_) run_prga();

        RunResult result;
        result.keystream = std::move(keystream_);
        result.fault_log = injector_.take_log();
        result.trace = std::move(trace_);
        result.total_cycles = ksa_cycles_ + prga_cycles_;
        result.ksa_cycles = ksa_cycles_;
        result.prga_cycles = prga_cycles_;
        result.status.state = halted_ ? RunState::Halted : RunState::Done;
        result.status.bytes_emitted = result.keystream.size();
        result.status.crc_ok = crc_ok_;
        result.status.add_ok = add_ok_;
        result.status.cnt_ok = cnt_ok_;
        result.status.no_fault = crc_ok_ && add_ok_ && cnt_ok_;
        if (halted_) result.status.halted_at = halted_at_;
        return result;
    }

  private:
    void run_ksa() {
        for (int step = 0; step < 256 && !halted_; ++step) {
            step_rising_edge();
            if (halted_) return;
            falling_edge(/*has_swap=*/true, /*emit=*/false);
            ++ksa_cycles_;
        }
    }

    void run_prga() {
        // Fill cycle: the generator clears its index registers and emits
        // nothing; output then runs one byte per cycle.
        counter_.reset_window();
        idle_rising_edge([this] { state_.begin_prga(); });
        if (!halted_) {
            falling_edge(/*has_swap=*/false, /*emit=*/false);
            ++prga_cycles_;
        }
        for (std::uint64_t byte = 0; byte < n_bytes_ && !halted_; ++byte) {
            step_rising_edge();
            if (halted_) return;
            falling_edge(/*has_swap=*/true, /*emit=*/true);
            ++prga_cycles_;
        }
    }

    void step_rising_edge() {
        AdderFaultMasks masks{};
        injector_.apply_due({cycle_, Edge::Rising},
                            {&state_, counter_site(), &masks});
        tap_ = state_.step_rising(masks);
        if (options_.checkers_enabled)
            add_ok_ = check_addition(tap_.additions[0]).ok &&
                      check_addition(tap_.additions[1]).ok;
        record(Edge::Rising, std::nullopt);
        gate(Edge::Rising);
    }

    template <typename Datapath>
    void idle_rising_edge(Datapath&& datapath) {
        injector_.apply_due({cycle_, Edge::Rising},
                            {&state_, counter_site(), nullptr});
        datapath();
        record(Edge::Rising, std::nullopt);
        gate(Edge::Rising);
    }

    void falling_edge(bool has_swap, bool emit) {
        injector_.apply_due({cycle_, Edge::Falling},
                            {&state_, counter_site(), nullptr});
        if (options_.checkers_enabled) {
            const CheckerVerdict verdict = counter_.push(state_.i());
            if (verdict.evaluated) cnt_ok_ = verdict.ok;
        }
        std::optional<std::uint8_t> z;
        if (has_swap) {
            z = state_.step_falling();
            if (options_.checkers_enabled)
                crc_ok_ = check_access(tap_.read_si, tap_.read_sj, crc_array_).ok;
        }
        if (emit && z) keystream_.push_back(*z);
        record(Edge::Falling, emit ? z : std::nullopt);
        gate(Edge::Falling);
        ++cycle_;
    }

    CounterChecker* counter_site() {
        return options_.checkers_enabled ? &counter_ : nullptr;
    }

    void record(Edge edge, std::optional<std::uint8_t> z) {
        if (options_.record_trace)
            trace_.push_back({cycle_, edge, state_.i(), state_.j(), crc_ok_,
                              add_ok_, cnt_ok_, z});
    }

    void gate(Edge edge) {
        if (crc_ok_ && add_ok_ && cnt_ok_) return;
        halted_ = true;
        halted_at_ = {cycle_, edge};
    }

    Rc4State state_;
    FaultInjector injector_;
    RunOptions options_;
    std::uint64_t n_bytes_;
    CrcArray crc_array_;
    CounterChecker counter_;

    StepTap tap_;
    std::vector<std::uint8_t> keystream_;
    std::vector<TraceRecord> trace_;
    std::uint64_t cycle_ = 0;
    std::uint64_t ksa_cycles_ = 0;
    std::uint64_t prga_cycles_ = 0;
    bool crc_ok_ = true;
    bool add_ok_ = true;
    bool cnt_ok_ = true;
    bool halted_ = false;
    ClockPhase halted_at_;
};

}  // namespace

RunResult run(const SecretKey& key, std::uint64_t n_bytes, const FaultPlan& plan,
              const RunOptions& options) {
    return Machine(key, n_bytes, plan, options).execute();
}

std::uint64_t throughput_probe(const SecretKey& key, std::uint64_t n_bytes,
                               bool checkers_enabled) {
    return run(key, n_bytes, {}, {checkers_enabled, /*record_trace=*/false})
        .total_cycles;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
    out << "cycle,edge,i,j,crc_ok,add_ok,cnt_ok,z_hex\n";
    for (const TraceRecord& rec : trace) {
        out << rec.cycle << ',' << to_string(rec.edge) << ','
            << static_cast<int>(rec.i) << ',' << static_cast<int>(rec.j) << ','
            << int(rec.crc_ok) << ',' << int(rec.add_ok) << ','
            << int(rec.cnt_ok) << ',';
        if (rec.z) out << to_hex({&*rec.z, 1});
        out << '\n';
    }
}

}  // namespace rc4ft
