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

#ifndef RC4FT_RC4_CORE_HPP_
#define RC4FT_RC4_CORE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rc4ft/adder.hpp"
#include "rc4ft/crc.hpp"

namespace rc4ft {

/// RC4 secret key, 5 to 16 bytes. Construction rejects anything outside
/// that range.
class SecretKey {
  public:
    static constexpr std::size_t kMinBytes = 5;
    static constexpr std::size_t kMaxBytes = 16;

    explicit SecretKey(std::vector<std::uint8_t> bytes);
    static SecretKey from_hex(std::string_view hex);

    std::size_t size() const { return bytes_.size(); }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    /// key[index mod l], the schedule's wrap-around indexing.
    std::uint8_t byte(std::size_t index) const {
        return bytes_[index % bytes_.size()];
    }

  private:
    std::vector<std::uint8_t> bytes_;
};

enum class Phase : std::uint8_t { Ksa, Prga };

/// Everything one algorithm step exposes to the checkers: the step's index
/// register, the claimed new j, the two chained addition taps, the two
/// coded entries read for the swap, and (PRGA) the emitted byte.
struct StepTap {
    std::uint8_t i = 0;
    std::uint8_t j_new = 0;
    std::array<AdditionRecord, 2> additions{};
    CodedEntry read_si;
    CodedEntry read_sj;
    std::optional<std::uint8_t> z;
};

/// Per-step fault staging for the two adder outputs; a nonzero mask is
/// XORed into the matching addition's claimed sum as it is produced.
using AdderFaultMasks = std::array<std::uint8_t, 2>;

/// The cipher state machine over the coded S-box. Steps split into a
/// rising half (index update, additions, entry reads, j write) and a
/// falling half (swap, keystream byte), mirroring the dual-edge datapath;
/// ksa_step/prga_step run both halves at once.
///
/// Swaps move whole 12-bit coded words; residues are never recomputed
/// after construction, so any bit flip in a stored entry stays visible
/// to the access checker until the entry is overwritten.
class Rc4State {
  public:
    explicit Rc4State(SecretKey key);

    Phase phase() const { return phase_; }
    int ksa_steps_done() const { return ksa_done_; }
    bool swap_pending() const { return pending_.has_value(); }
    std::uint8_t i() const { return i_; }
    std::uint8_t j() const { return j_; }
    const std::array<CodedEntry, 256>& sbox() const { return sbox_; }
    const SecretKey& key() const { return key_; }

    /// One whole KSA step. Throws std::logic_error after 256 steps or
    /// mid-step.
    StepTap ksa_step(const AdderFaultMasks& faults = {});

    /// Enters keystream generation: requires the full key schedule done;
    /// clears the i and j registers.
    void begin_prga();

    /// One whole PRGA step; tap.z carries the keystream byte. Throws
    /// std::logic_error while still in KSA or mid-step.
    StepTap prga_step(const AdderFaultMasks& faults = {});

    // Half-cycle interface for the edge scheduler.
    StepTap step_rising(const AdderFaultMasks& faults = {});
    std::optional<std::uint8_t> step_falling();

    // Fault hooks: XOR a mask into a storage site, returning the prior
    // value of the touched field.
    std::uint8_t xor_sbox_value(std::uint8_t index, std::uint8_t mask);
    std::uint8_t xor_sbox_crc(std::uint8_t index, std::uint8_t mask);
    std::uint8_t xor_i(std::uint8_t mask);
    std::uint8_t xor_j(std::uint8_t mask);

  private:
    // Data latched at the rising edge; the falling edge addresses the swap
    // with the live i/j registers, so register faults between the edges
    // redirect the writes just as they would in hardware.
    struct PendingSwap {
        CodedEntry read_si;
        CodedEntry read_sj;
        std::optional<std::uint8_t> z_index;
    };

    SecretKey key_;
    std::array<CodedEntry, 256> sbox_;
    std::uint8_t i_ = 0;
    std::uint8_t j_ = 0;
    Phase phase_ = Phase::Ksa;
    int ksa_done_ = 0;
    std::optional<PendingSwap> pending_;
};

}  // namespace rc4ft

#endif  // RC4FT_RC4_CORE_HPP_
