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

#include "rc4ft/rc4_core.hpp"

#include <stdexcept>
#include <utility>

#include "rc4ft/hex.hpp"

namespace rc4ft {

SecretKey::SecretKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
    if (bytes_.size() < kMinBytes || bytes_.size() > kMaxBytes)
        throw std::invalid_argument(
            "rejected key: length " + std::to_string(bytes_.size()) +
            " outside [" + std::to_string(kMinBytes) + ", " +
            std::to_string(kMaxBytes) + "] bytes");
}

SecretKey SecretKey::from_hex(std::string_view hex) {
    return SecretKey(rc4ft::from_hex(hex));
}

Rc4State::Rc4State(SecretKey key) : key_(std::move(key)) {
    for (int n = 0; n < 256; ++n)
        sbox_[n] = coded(static_cast<std::uint8_t>(n));
}

StepTap Rc4State::step_rising(const AdderFaultMasks& faults) {
    if (pending_)
        throw std::logic_error("step_rising called with a swap pending");

    StepTap tap;
    if (phase_ == Phase::Ksa) {
        if (ksa_done_ >= 256)
            throw std::logic_error("ksa_step called after the 256th step");
        const CodedEntry read_si = sbox_[i_];
        AdditionRecord first = ripple_add(j_, read_si.value);
        first.claimed_sum ^= faults[0];
        AdditionRecord second = ripple_add(first.claimed_sum, key_.byte(i_));
        second.claimed_sum ^= faults[1];
        j_ = second.claimed_sum;
        const CodedEntry read_sj = sbox_[j_];
        pending_ = PendingSwap{read_si, read_sj, std::nullopt};
        tap = {i_, j_, {first, second}, read_si, read_sj, std::nullopt};
    } else {
        i_ = static_cast<std::uint8_t>(i_ + 1);
        const CodedEntry read_si = sbox_[i_];
        AdditionRecord first = ripple_add(j_, read_si.value);
        first.claimed_sum ^= faults[0];
        j_ = first.claimed_sum;
        const CodedEntry read_sj = sbox_[j_];
        // The output index S[i]+S[j] is swap-invariant, so the adder can
        // run at the rising edge; the lookup itself waits for the swap.
        AdditionRecord second = ripple_add(read_si.value, read_sj.value);
        second.claimed_sum ^= faults[1];
        pending_ = PendingSwap{read_si, read_sj, second.claimed_sum};
        tap = {i_, j_, {first, second}, read_si, read_sj, std::nullopt};
    }
    return tap;
}

std::optional<std::uint8_t> Rc4State::step_falling() {
    if (!pending_)
        throw std::logic_error("step_falling called with no swap pending");

    sbox_[i_] = pending_->read_sj;
    sbox_[j_] = pending_->read_si;

    std::optional<std::uint8_t> z;
    if (pending_->z_index) z = sbox_[*pending_->z_index].value;

    if (phase_ == Phase::Ksa) {
        ++ksa_done_;
        i_ = static_cast<std::uint8_t>(i_ + 1);
    }
    pending_.reset();
    return z;
}

StepTap Rc4State::ksa_step(const AdderFaultMasks& faults) {
    if (phase_ != Phase::Ksa)
        throw std::logic_error("ksa_step called during keystream generation");
    StepTap tap = step_rising(faults);
    step_falling();
    return tap;
}

void Rc4State::begin_prga() {
    if (phase_ != Phase::Ksa || pending_)
        throw std::logic_error("begin_prga called twice or mid-step");
    if (ksa_done_ != 256)
        throw std::logic_error("begin_prga called before the key schedule finished");
    phase_ = Phase::Prga;
    i_ = 0;
    j_ = 0;
}

StepTap Rc4State::prga_step(const AdderFaultMasks& faults) {
    if (phase_ != Phase::Prga)
        throw std::logic_error("prga_step called during the key schedule");
    StepTap tap = step_rising(faults);
    tap.z = step_falling();
    return tap;
}

std::uint8_t Rc4State::xor_sbox_value(std::uint8_t index, std::uint8_t mask) {
    const std::uint8_t pre = sbox_[index].value;
    sbox_[index].value ^= mask;
    return pre;
}

std::uint8_t Rc4State::xor_sbox_crc(std::uint8_t index, std::uint8_t mask) {
    const std::uint8_t pre = sbox_[index].crc;
    sbox_[index].crc = (sbox_[index].crc ^ mask) & 0xF;
    return pre;
}

std::uint8_t Rc4State::xor_i(std::uint8_t mask) {
    const std::uint8_t pre = i_;
    i_ ^= mask;
    return pre;
}

std::uint8_t Rc4State::xor_j(std::uint8_t mask) {
    const std::uint8_t pre = j_;
    j_ ^= mask;
    return pre;
}

}  // namespace rc4ft
