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

#include "rc4ft/evaluator.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "rc4ft/addition_checker.hpp"
#include "rc4ft/counter_checker.hpp"
#include "rc4ft/crc.hpp"

namespace rc4ft {

namespace {

constexpr std::array<int, 8> kCombinations = {8, 28, 56, 70, 56, 28, 8, 1};

struct PublishedTable {
    std::array<int, 8> detected;
    std::array<int, 8> undetected;
    int percent;
};

// Detection counts as published for this checker architecture; reports
// carry signed deltas against them because two of the three tables do not
// survive exhaustive re-enumeration.
constexpr PublishedTable kPublishedCrc = {
    {8, 21, 56, 70, 56, 0, 8, 0}, {0, 7, 0, 0, 0, 28, 0, 1}, 86};
constexpr PublishedTable kPublishedAddition = {
    {8, 16, 56, 32, 56, 16, 8, 0}, {0, 12, 0, 38, 0, 12, 0, 1}, 75};
constexpr PublishedTable kPublishedCounter = {
    {8, 20, 56, 55, 56, 20, 8, 1}, {0, 8, 0, 15, 0, 8, 0, 0}, 88};

EfficiencyReport start_report(std::string checker, const PublishedTable& published) {
    EfficiencyReport report;
    report.checker = std::move(checker);
    for (int w = 0; w < 8; ++w) {
        report.rows[w].weight = w + 1;
        report.rows[w].combinations = kCombinations[w];
        report.rows[w].published_detected = published.detected[w];
        report.rows[w].published_undetected = published.undetected[w];
        report.published_detected_total += published.detected[w];
        report.published_undetected_total += published.undetected[w];
    }
    report.published_efficiency_percent = published.percent;
    return report;
}

void tally(EfficiencyReport& report, int mask, bool detected) {
    WeightRow& row = report.rows[std::popcount(unsigned(mask)) - 1];
    if (detected) {
        ++row.detected;
        ++report.detected_total;
    } else {
        ++row.undetected;
        ++report.undetected_total;
    }
}

int weight(unsigned v) { return std::popcount(v); }

}  // namespace

double EfficiencyReport::efficiency_percent() const {
    return std::round(detected_total * 1000.0 / kTotalMasks) / 10.0;
}

bool EfficiencyReport::matches_published() const {
    for (const WeightRow& row : rows)
        if (row.delta_detected() != 0 || row.delta_undetected() != 0) return false;
    return true;
}

EfficiencyReport evaluate_crc() {
    EfficiencyReport report = start_report("crc", kPublishedCrc);
    const CrcArray array = build_crc_array();
    for (int mask = 1; mask <= 255; ++mask) {
        const bool detected = crc4(static_cast<std::uint8_t>(mask)) != 0;
        // The verdict is mask-determined; confirm over every underlying value.
        for (int v = 0; v < 256; ++v) {
            CodedEntry entry = coded(static_cast<std::uint8_t>(v));
            entry.value ^= static_cast<std::uint8_t>(mask);
            if (!verify_entry(entry, array).ok != detected)
                throw std::logic_error("crc verdict depends on underlying value");
        }
        tally(report, mask, detected);
    }
    report.note =
        "published counts (219/36, 86%) are not reproducible from a plain "
        "residue check: an intact-residue value fault escapes iff its mask is "
        "a multiple of the generator 0x19, i.e. exactly 15 masks of weights "
        "3-6, giving 240/255 = 94.1%";
    return report;
}

EfficiencyReport evaluate_addition() {
    EfficiencyReport report = start_report("addition", kPublishedAddition);
    for (int mask = 1; mask <= 255; ++mask) {
        const bool detected =
            weight(mask & 0x0Fu) % 2 != 0 || weight(mask & 0xF0u) % 2 != 0;
        tally(report, mask, detected);
    }
    // Spot-check the closed form against the checker itself over every
    // operand pair for one mask of each weight plus both nibble shapes.
    constexpr std::uint8_t kSampleMasks[] = {0x01, 0x80, 0x03, 0x11, 0x07, 0x2A,
                                             0x0F, 0x33, 0x1F, 0x55, 0x3F, 0x66,
                                             0x7F, 0xEE, 0xFF, 0xA5};
    for (std::uint8_t mask : kSampleMasks) {
        const bool detected =
            weight(mask & 0x0Fu) % 2 != 0 || weight(mask & 0xF0u) % 2 != 0;
        for (int a = 0; a < 256; ++a) {
            for (int b = 0; b < 256; ++b) {
                AdditionRecord rec = ripple_add(static_cast<std::uint8_t>(a),
                                                static_cast<std::uint8_t>(b));
                rec.claimed_sum ^= mask;
                if (!check_addition(rec).ok != detected)
                    throw std::logic_error("addition verdict disagrees with closed form");
            }
        }
    }
    report.note = "matches the published table exactly";
    return report;
}

EfficiencyReport evaluate_counter() {
    EfficiencyReport report = start_report("counter", kPublishedCounter);
    for (int mask = 1; mask <= 255; ++mask) {
        const bool undetected = weight(mask & 0x55u) % 2 == 0 &&
                                weight(mask & 0xAAu) % 2 == 0 &&
                                weight(mask & 0x88u) % 2 == 0;
        // The verdict must not depend on which slot or window is hit.
        for (int start = 0; start < 256; start += 8) {
            for (int slot = 0; slot < 8; ++slot) {
                CounterWindow window;
                for (int k = 0; k < 8; ++k)
                    window.counts[k] = static_cast<std::uint8_t>(start + k);
                window.fill = 8;
                window.counts[slot] ^= static_cast<std::uint8_t>(mask);
                if (check_window(window).ok != undetected)
                    throw std::logic_error(
                        "counter verdict depends on slot or window");
            }
        }
        tally(report, mask, !undetected);
    }
    report.note =
        "totals match the published table (224/31, 88%) but the weight-4 and "
        "weight-8 rows do not: enumeration gives 14 and 1 escaping masks "
        "there, not 15 and 0";
    return report;
}

std::string to_json(const EfficiencyReport& report) {
    nlohmann::ordered_json j;
    j["checker"] = report.checker;
    j["rows"] = nlohmann::ordered_json::array();
    for (const WeightRow& row : report.rows) {
        j["rows"].push_back({{"weight", row.weight},
                             {"combinations", row.combinations},
                             {"detected", row.detected},
                             {"undetected", row.undetected},
                             {"paper_detected", row.published_detected},
                             {"paper_undetected", row.published_undetected},
                             {"paper_delta",
                              {{"detected", row.delta_detected()},
                               {"undetected", row.delta_undetected()}}}});
    }
    j["totals"] = {{"combinations", EfficiencyReport::kTotalMasks},
                   {"detected", report.detected_total},
                   {"undetected", report.undetected_total},
                   {"paper_detected", report.published_detected_total},
                   {"paper_undetected", report.published_undetected_total},
                   {"paper_delta",
                    {{"detected",
                      report.detected_total - report.published_detected_total},
                     {"undetected", report.undetected_total -
                                        report.published_undetected_total}}}};
    j["efficiency"] = {{"detected", report.detected_total},
                       {"total_masks", EfficiencyReport::kTotalMasks}};
    j["efficiency_percent"] = report.efficiency_percent();
    j["paper_efficiency_percent"] = report.published_efficiency_percent;
    j["matches_paper"] = report.matches_published();
    j["note"] = report.note;
    return j.dump(2) + "\n";
}

std::string to_csv(const EfficiencyReport& report) {
    std::string out =
        "checker,weight,combinations,detected,undetected,paper_detected,"
        "paper_undetected,paper_delta\n";
    char line[160];
    for (const WeightRow& row : report.rows) {
        std::snprintf(line, sizeof line, "%s,%d,%d,%d,%d,%d,%d,%d\n",
                      report.checker.c_str(), row.weight, row.combinations,
                      row.detected, row.undetected, row.published_detected,
                      row.published_undetected, row.delta_detected());
        out += line;
    }
    std::snprintf(line, sizeof line, "%s,total,%d,%d,%d,%d,%d,%d\n",
                  report.checker.c_str(), EfficiencyReport::kTotalMasks,
                  report.detected_total, report.undetected_total,
                  report.published_detected_total,
                  report.published_undetected_total,
                  report.detected_total - report.published_detected_total);
    out += line;
    std::snprintf(line, sizeof line, "%s,efficiency_percent,%.1f,,,,,\n",
                  report.checker.c_str(), report.efficiency_percent());
    out += line;
    std::snprintf(line, sizeof line, "%s,paper_efficiency_percent,%d,,,,,\n",
                  report.checker.c_str(), report.published_efficiency_percent);
    out += line;
    return out;
}

std::string to_text(const EfficiencyReport& report) {
    std::string out = report.checker +
                      " checker detection efficiency (255 nonzero 8-bit masks)\n\n"
                      " weight  combos  detected  undetected  "
                      "published(det/undet)  paper_delta\n";
    char line[160];
    for (const WeightRow& row : report.rows) {
        std::snprintf(line, sizeof line, "%7d %7d %9d %11d %12d / %-6d %+11d\n",
                      row.weight, row.combinations, row.detected, row.undetected,
                      row.published_detected, row.published_undetected,
                      row.delta_detected());
        out += line;
    }
    std::snprintf(line, sizeof line, "%7s %7d %9d %11d %12d / %-6d %+11d\n",
                  "total", EfficiencyReport::kTotalMasks, report.detected_total,
                  report.undetected_total, report.published_detected_total,
                  report.published_undetected_total,
                  report.detected_total - report.published_detected_total);
    out += line;
    std::snprintf(line, sizeof line,
                  "\nefficiency: %d/%d = %.1f%%  (published: %d%%)\n",
                  report.detected_total, EfficiencyReport::kTotalMasks,
                  report.efficiency_percent(),
                  report.published_efficiency_percent);
    out += line;
    if (!report.note.empty()) out += "note: " + report.note + "\n";
    return out;
}

}  // namespace rc4ft
