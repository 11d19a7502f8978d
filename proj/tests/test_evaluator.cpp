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

#include <array>

#include <doctest.h>
#include <json.hpp>

using namespace rc4ft;

namespace {

void check_row_sums(const EfficiencyReport& report) {
    constexpr std::array<int, 8> combos = {8, 28, 56, 70, 56, 28, 8, 1};
    int detected = 0;
    int undetected = 0;
    for (int w = 0; w < 8; ++w) {
        const WeightRow& row = report.rows[w];
        CHECK(row.weight == w + 1);
        CHECK(row.combinations == combos[w]);
        CHECK(row.detected + row.undetected == combos[w]);
        CHECK(row.published_detected + row.published_undetected == combos[w]);
        detected += row.detected;
        undetected += row.undetected;
    }
    CHECK(detected == report.detected_total);
    CHECK(undetected == report.undetected_total);
    CHECK(report.detected_total + report.undetected_total == 255);
}

template <std::size_t N>
std::array<int, 8> detected_counts(const std::array<WeightRow, N>& rows) {
    std::array<int, 8> out{};
    for (std::size_t w = 0; w < 8; ++w) out[w] = rows[w].detected;
    return out;
}

}  // namespace

TEST_CASE("addition report reproduces the published table exactly") {
    const EfficiencyReport report = evaluate_addition();
    check_row_sums(report);
    CHECK(report.checker == "addition");
    CHECK(detected_counts(report.rows) ==
          std::array<int, 8>{8, 16, 56, 32, 56, 16, 8, 0});
    CHECK(report.detected_total == 192);
    CHECK(report.undetected_total == 63);
    CHECK(report.efficiency_percent() == doctest::Approx(75.3));
    CHECK(report.published_efficiency_percent == 75);
    CHECK(report.matches_published());
}

TEST_CASE("counter report matches enumeration, deviating from two published rows") {
    const EfficiencyReport report = evaluate_counter();
    check_row_sums(report);
    CHECK(detected_counts(report.rows) ==
          std::array<int, 8>{8, 20, 56, 56, 56, 20, 8, 0});
    CHECK(report.detected_total == 224);
    CHECK(report.undetected_total == 31);
    CHECK(report.efficiency_percent() == doctest::Approx(87.8));
    CHECK(report.published_efficiency_percent == 88);
    CHECK_FALSE(report.matches_published());
    // The only disagreements are weight 4 (14 escapes, published 15) and
    // weight 8 (1 escape, published 0).
    CHECK(report.rows[3].delta_detected() == 1);
    CHECK(report.rows[7].delta_detected() == -1);
    for (const int w : {0, 1, 2, 4, 5, 6}) {
        CHECK(report.rows[w].delta_detected() == 0);
    }
    CHECK_FALSE(report.note.empty());
}

TEST_CASE("crc report counts the 15 generator multiples as escapes") {
    const EfficiencyReport report = evaluate_crc();
    check_row_sums(report);
    CHECK(report.rows[0].detected == 8);
    CHECK(report.rows[0].undetected == 0);
    CHECK(detected_counts(report.rows) ==
          std::array<int, 8>{8, 28, 52, 65, 52, 26, 8, 1});
    CHECK(report.detected_total == 240);
    CHECK(report.undetected_total == 15);
    CHECK(report.efficiency_percent() == doctest::Approx(94.1));
    CHECK(report.published_detected_total == 219);
    CHECK(report.published_undetected_total == 36);
    CHECK_FALSE(report.matches_published());
    CHECK(report.note.find("not reproducible") != std::string::npos);
}

TEST_CASE("csv layout carries the totals row and the delta column") {
    const std::string csv = to_csv(evaluate_addition());
    CHECK(csv.find("checker,weight,combinations,detected,undetected,"
                   "paper_detected,paper_undetected,paper_delta\n") == 0);
    CHECK(csv.find("addition,total,255,192,63,192,63,0\n") != std::string::npos);
    CHECK(csv.find("addition,efficiency_percent,75.3") != std::string::npos);

    const std::string crc_csv = to_csv(evaluate_crc());
    CHECK(crc_csv.find("crc,total,255,240,15,219,36,21\n") != std::string::npos);
}

TEST_CASE("json report is machine-readable and deterministic") {
    const EfficiencyReport report = evaluate_counter();
    const std::string text = to_json(report);
    CHECK(text == to_json(evaluate_counter()));

    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["checker"] == "counter");
    CHECK(j["efficiency_percent"] == doctest::Approx(87.8));
    CHECK(j["paper_efficiency_percent"] == 88);
    CHECK(j["totals"]["detected"] == 224);
    CHECK(j["totals"]["undetected"] == 31);
    CHECK(j["totals"]["paper_delta"]["undetected"] == 0);
    CHECK(j["rows"].size() == 8);
    CHECK(j["rows"][3]["paper_delta"]["detected"] == 1);
    CHECK(j["matches_paper"] == false);
}

TEST_CASE("text report prints the efficiency line") {
    const std::string text = to_text(evaluate_addition());
    CHECK(text.find("efficiency: 192/255 = 75.3%") != std::string::npos);
    CHECK(text.find("published: 75%") != std::string::npos);

    const std::string counter_text = to_text(evaluate_counter());
    CHECK(counter_text.find("efficiency: 224/255 = 87.8%") != std::string::npos);
}
