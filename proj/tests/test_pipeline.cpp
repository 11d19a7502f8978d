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

#include <sstream>

#include <doctest.h>

#include "rc4ft/hex.hpp"
#include "reference_rc4.hpp"

using namespace rc4ft;
using rc4ft_tests::reference_keystream;

namespace {

const SecretKey& test_key() {
    static const SecretKey key = SecretKey::from_hex("0102030405");
    return key;
}

}  // namespace

TEST_CASE("fault-free run reaches Done with the reference keystream") {
    const RunResult result = run(test_key(), 16);
    CHECK(result.status.state == RunState::Done);
    CHECK(result.status.no_fault);
    CHECK(result.status.bytes_emitted == 16);
    CHECK(result.keystream == reference_keystream({1, 2, 3, 4, 5}, 16));
    CHECK(to_hex({result.keystream.data(), result.keystream.size()}) ==
          "b2396305f03dc027ccc3524a0a1118a8");
    CHECK(result.ksa_cycles == 256);
    CHECK(result.prga_cycles == 17);  // one fill cycle + one per byte
    CHECK(result.total_cycles == 256 + 17);
    CHECK(result.fault_log.empty());
}

TEST_CASE("cycle counts are checker-independent and the output span is n+1") {
    for (const std::uint64_t n : {0ull, 1ull, 8ull, 256ull, 1000ull}) {
        const std::uint64_t with = throughput_probe(test_key(), n, true);
        const std::uint64_t without = throughput_probe(test_key(), n, false);
        CHECK(with == without);
        CHECK(with == 256 + n + 1);

        const RunResult result = run(test_key(), n);
        CHECK(result.prga_cycles == n + 1);
        CHECK(result.status.bytes_emitted == n);
    }
}

TEST_CASE("trace covers every half-cycle and carries the emitted bytes") {
    const RunResult result =
        run(test_key(), 24, {}, {.checkers_enabled = true, .record_trace = true});
    REQUIRE(result.trace.size() == 2 * result.total_cycles);

    std::vector<std::uint8_t> emitted;
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
        const TraceRecord& rec = result.trace[k];
        CHECK(rec.cycle == k / 2);
        CHECK(rec.edge == (k % 2 == 0 ? Edge::Rising : Edge::Falling));
        CHECK(rec.crc_ok);
        CHECK(rec.add_ok);
        CHECK(rec.cnt_ok);
        if (rec.z) {
            CHECK(rec.edge == Edge::Falling);
            CHECK(rec.cycle >= 257);
            emitted.push_back(*rec.z);
        }
    }
    CHECK(emitted == result.keystream);

    std::ostringstream csv;
    write_trace_csv(csv, result.trace);
    const std::string text = csv.str();
    CHECK(text.starts_with("cycle,edge,i,j,crc_ok,add_ok,cnt_ok,z_hex\n"));
    CHECK(text.find("0,rising,") != std::string::npos);
    CHECK(text.find(",falling,") != std::string::npos);
}

TEST_CASE("a coded-box fault on the entry read that cycle halts at its access") {
    // At cycle c >= 257 the generator reads S[c - 256 mod 256] as S[i]; a
    // rising-edge hit on that entry is seen by the access check the same
    // falling edge.
    const std::uint64_t cycle = 300;
    const auto index = static_cast<std::uint16_t>((cycle - 256) & 0xFF);
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::SBoxValue, index, 0x01, cycle, Edge::Rising}});
    const RunResult result = run(test_key(), 600, plan);

    CHECK(result.status.state == RunState::Halted);
    REQUIRE(result.status.halted_at.has_value());
    CHECK(*result.status.halted_at == ClockPhase{cycle, Edge::Falling});
    CHECK_FALSE(result.status.crc_ok);
    CHECK(result.status.add_ok);
    CHECK(result.status.cnt_ok);
    CHECK_FALSE(result.status.no_fault);
    // The byte of the halting cycle is still latched at its falling edge.
    CHECK(result.status.bytes_emitted == cycle - 256);
    REQUIRE(result.fault_log.size() == 1);
    CHECK(result.fault_log[0].applied);
}

TEST_CASE("a detectable adder fault halts at its rising edge") {
    const std::uint64_t cycle = 300;
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::AdderSum, 0, 0x01, cycle, Edge::Rising}});
    const RunResult result = run(test_key(), 600, plan);

    CHECK(result.status.state == RunState::Halted);
    CHECK(*result.status.halted_at == ClockPhase{cycle, Edge::Rising});
    CHECK_FALSE(result.status.add_ok);
    CHECK(result.status.crc_ok);
    CHECK(result.status.bytes_emitted == cycle - 257);
}

TEST_CASE("an even-nibble adder fault escapes and corrupts the keystream") {
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::AdderSum, 0, 0x03, 300, Edge::Rising}});
    const RunResult result = run(test_key(), 600, plan);

    CHECK(result.status.state == RunState::Done);
    CHECK(result.status.no_fault);
    CHECK(result.status.bytes_emitted == 600);
    const auto reference = reference_keystream({1, 2, 3, 4, 5}, 600);
    CHECK(result.keystream != reference);
    // Clean prefix up to the fault, divergence after it.
    CHECK(std::equal(reference.begin(), reference.begin() + (300 - 257),
                     result.keystream.begin()));
}

TEST_CASE("a buffered-counter fault halts at the next window boundary") {
    // Phase falling index k = cycle - 256; slot fill before the push is
    // k mod 8 and the window closes at index k - k%8 + 7.
    const std::uint64_t cycle = 300;  // k = 44, fill = 4, window closes at 47
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::CounterSlot, 0, 0x01, cycle, Edge::Falling}});
    const RunResult result = run(test_key(), 600, plan);

    CHECK(result.status.state == RunState::Halted);
    CHECK(*result.status.halted_at == ClockPhase{303, Edge::Falling});
    CHECK_FALSE(result.status.cnt_ok);
    CHECK(result.status.crc_ok);
}

TEST_CASE("an i-counter upset breaks the counting pattern of its window") {
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::ICounter, 0, 0x01, 300, Edge::Falling}});
    const RunResult result = run(test_key(), 600, plan);

    CHECK(result.status.state == RunState::Halted);
    CHECK(*result.status.halted_at == ClockPhase{303, Edge::Falling});
    CHECK_FALSE(result.status.cnt_ok);
}

TEST_CASE("a j-register upset is invisible to the checkers but not the output") {
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::JRegister, 0, 0x01, 300, Edge::Falling}});
    const RunResult result = run(test_key(), 600, plan);

    // Swapped entries stay self-consistent codewords, the adders still add
    // correctly and the counter never lies, so nothing trips.
    CHECK(result.status.state == RunState::Done);
    CHECK(result.keystream != reference_keystream({1, 2, 3, 4, 5}, 600));
}

TEST_CASE("schedule faults are also caught during the key schedule") {
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::SBoxValue, 200, 0x01, 0, Edge::Rising}});
    const RunResult result = run(test_key(), 16, plan);

    CHECK(result.status.state == RunState::Halted);
    REQUIRE(result.status.halted_at.has_value());
    CHECK(result.status.halted_at->cycle <= 200);
    CHECK(result.status.halted_at->edge == Edge::Falling);
    CHECK_FALSE(result.status.crc_ok);
    CHECK(result.status.bytes_emitted == 0);

    const FaultPlan adder_plan = FaultPlan::arm(
        {{FaultTarget::AdderSum, 1, 0x10, 17, Edge::Rising}});
    const RunResult adder_result = run(test_key(), 16, adder_plan);
    CHECK(adder_result.status.state == RunState::Halted);
    CHECK(*adder_result.status.halted_at == ClockPhase{17, Edge::Rising});
    CHECK_FALSE(adder_result.status.add_ok);
}

TEST_CASE("the trace pinpoints the halting half-cycle") {
    const std::uint64_t cycle = 280;
    const auto index = static_cast<std::uint16_t>((cycle - 256) & 0xFF);
    const FaultPlan plan = FaultPlan::arm(
        {{FaultTarget::SBoxValue, index, 0x02, cycle, Edge::Rising}});
    const RunResult result =
        run(test_key(), 600, plan, {.checkers_enabled = true, .record_trace = true});

    REQUIRE(result.status.state == RunState::Halted);
    REQUIRE(!result.trace.empty());
    const TraceRecord& last = result.trace.back();
    CHECK(last.cycle == result.status.halted_at->cycle);
    CHECK(last.edge == result.status.halted_at->edge);
    CHECK_FALSE(last.crc_ok);
    // Every earlier record is clean: the gate drops at first observation.
    for (std::size_t k = 0; k + 1 < result.trace.size(); ++k) {
        const TraceRecord& rec = result.trace[k];
        CHECK((rec.crc_ok && rec.add_ok && rec.cnt_ok));
    }
}

TEST_CASE("n = 0 still runs the schedule and the fill cycle") {
    const RunResult result = run(test_key(), 0);
    CHECK(result.status.state == RunState::Done);
    CHECK(result.keystream.empty());
    CHECK(result.total_cycles == 257);
}
