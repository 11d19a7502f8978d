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

#include "rc4ft/fault.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <stdexcept>

namespace rc4ft {

namespace {

struct TargetName {
    FaultTarget target;
    const char* name;
    unsigned max_index;
    std::uint8_t max_mask;
};

constexpr TargetName kTargets[] = {
    {FaultTarget::SBoxValue, "sbox_value", 255, 0xFF},
    {FaultTarget::SBoxCrc, "sbox_crc", 255, 0x0F},
    {FaultTarget::JRegister, "j_register", 0, 0xFF},
    {FaultTarget::ICounter, "i_counter", 0, 0xFF},
    {FaultTarget::AdderSum, "adder_sum", 1, 0xFF},
    {FaultTarget::CounterSlot, "counter_slot", 7, 0xFF},
};

const TargetName& target_info(FaultTarget target) {
    for (const auto& t : kTargets)
        if (t.target == target) return t;
    throw std::invalid_argument("unknown fault target");
}

std::vector<std::string_view> split_fields(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find_first_of(":, \t", start);
        if (end == std::string_view::npos) {
            fields.push_back(text.substr(start));
            break;
        }
        if (end > start) fields.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

std::uint64_t parse_uint(std::string_view field, int base, const char* what) {
    if (field.starts_with("0x") || field.starts_with("0X")) {
        base = 16;
        field.remove_prefix(2);
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value, base);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument(std::string("bad ") + what + " field \"" +
                                    std::string(field) + "\"");
    return value;
}

void validate(const FaultSpec& spec) {
    const TargetName& info = target_info(spec.target);
    if (spec.mask == 0)
        throw std::invalid_argument("fault spec " + to_string(spec) +
                                    ": mask must be nonzero");
    if (spec.mask > info.max_mask)
        throw std::invalid_argument("fault spec " + to_string(spec) +
                                    ": mask exceeds site width");
    if (spec.index > info.max_index)
        throw std::invalid_argument("fault spec " + to_string(spec) +
                                    ": index out of range for " + info.name);
}

}  // namespace

std::string to_string(FaultTarget target) { return target_info(target).name; }

std::string to_string(const FaultSpec& spec) {
    char mask[8];
    std::snprintf(mask, sizeof mask, "0x%02x", spec.mask);
    return to_string(spec.target) + ":" + std::to_string(spec.index) + ":" +
           mask + ":" + std::to_string(spec.cycle) + ":" + to_string(spec.edge);
}

FaultSpec parse_fault_spec(std::string_view text) {
    const auto fields = split_fields(text);
    if (fields.size() != 5)
        throw std::invalid_argument(
            "fault spec \"" + std::string(text) +
            "\": expected target:index:mask:cycle:edge");

    FaultSpec spec;
    bool found = false;
    for (const auto& t : kTargets) {
        if (fields[0] == t.name) {
            spec.target = t.target;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::invalid_argument("unknown fault target \"" +
                                    std::string(fields[0]) + "\"");
    spec.index = static_cast<std::uint16_t>(parse_uint(fields[1], 10, "index"));
    spec.mask = static_cast<std::uint8_t>(parse_uint(fields[2], 16, "mask"));
    spec.cycle = parse_uint(fields[3], 10, "cycle");
    spec.edge = edge_from_string(std::string(fields[4]));
    validate(spec);
    return spec;
}

std::vector<FaultSpec> parse_fault_file(std::istream& in) {
    std::vector<FaultSpec> specs;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const std::size_t last = line.find_last_not_of(" \t\r");
        specs.push_back(parse_fault_spec(
            std::string_view(line).substr(first, last - first + 1)));
    }
    return specs;
}

FaultPlan FaultPlan::arm(std::vector<FaultSpec> specs) {
    for (const FaultSpec& spec : specs) validate(spec);
    std::stable_sort(specs.begin(), specs.end(),
                     [](const FaultSpec& a, const FaultSpec& b) {
                         return phase_less({a.cycle, a.edge}, {b.cycle, b.edge});
                     });
    FaultPlan plan;
    plan.specs_ = std::move(specs);
    return plan;
}

void FaultInjector::apply_due(ClockPhase now, const FaultSites& sites) {
    const auto& specs = plan_.specs();
    while (next_ < specs.size()) {
        const FaultSpec& spec = specs[next_];
        const ClockPhase at{spec.cycle, spec.edge};
        if (phase_less(now, at)) break;
        ++next_;
        if (at != now) continue;  // instant already passed (halted plan reuse)

        FaultEvent event{spec, now, 0, 0, true, {}};
        switch (spec.target) {
            case FaultTarget::SBoxValue:
                event.pre = sites.state->xor_sbox_value(
                    static_cast<std::uint8_t>(spec.index), spec.mask);
                event.post = event.pre ^ spec.mask;
                break;
            case FaultTarget::SBoxCrc:
                event.pre = sites.state->xor_sbox_crc(
                    static_cast<std::uint8_t>(spec.index), spec.mask);
                event.post = (event.pre ^ spec.mask) & 0xF;
                break;
            case FaultTarget::JRegister:
                event.pre = sites.state->xor_j(spec.mask);
                event.post = event.pre ^ spec.mask;
                break;
            case FaultTarget::ICounter:
                event.pre = sites.state->xor_i(spec.mask);
                event.post = event.pre ^ spec.mask;
                break;
            case FaultTarget::AdderSum:
                if (sites.adder_masks == nullptr) {
                    event.applied = false;
                    event.reason = "no addition scheduled at this edge";
                } else {
                    event.pre = (*sites.adder_masks)[spec.index];
                    (*sites.adder_masks)[spec.index] ^= spec.mask;
                    event.post = event.pre ^ spec.mask;
                }
                break;
            case FaultTarget::CounterSlot:
                if (sites.counter == nullptr ||
                    !sites.counter->xor_slot(spec.index, spec.mask, &event.pre)) {
                    event.applied = false;
                    event.reason = "window slot not buffered yet";
                } else {
                    event.post = event.pre ^ spec.mask;
                }
                break;
        }
        log_.push_back(std::move(event));
    }
}

}  // namespace rc4ft
