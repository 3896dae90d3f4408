// Copyright 2026 The qpose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpose/verify.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "qpose/builders.hpp"
#include "qpose/simulate.hpp"

namespace qpose {

std::string VerificationReport::summary_line() const {
    char dev[32];
    std::snprintf(dev, sizeof(dev), "%.3e", max_weight_deviation);
    return std::string("verify ") + (passed ? "PASS" : "FAIL") +
           " branches=" + std::to_string(total_branches) + " matched=" + std::to_string(matched) +
           " maxdev=" + dev;
}

std::string VerificationReport::to_text() const {
    std::string text = summary_line() + "\n";
    for (const auto& [setting, what] : mismatches)
        text += "mismatch " + setting.to_string() + ": " + what + "\n";
    return text;
}

namespace {

/// Compares one decoded branch against its enumerated pose. Returns an empty
/// string on match, otherwise a description of the first difference.
std::string compare_branch(const OccupancyGrid& decoded, const OccupancyGrid& expected,
                           double tolerance, double& max_deviation) {
    for (const auto& [cell, w] : expected.cells()) {
        if (w != 0.0 && !decoded.contains(cell))
            return "cell (" + std::to_string(cell.z) + ", " + std::to_string(cell.y) + ", " +
                   std::to_string(cell.x) + ") missing from the simulated branch";
    }
    for (const auto& [cell, w] : decoded.cells()) {
        const double want = expected.weight(cell);
        if (w != 0.0 && want == 0.0)
            return "cell (" + std::to_string(cell.z) + ", " + std::to_string(cell.y) + ", " +
                   std::to_string(cell.x) + ") absent from the enumerated pose";
        const double dev = std::abs(w - want);
        max_deviation = std::max(max_deviation, dev);
        if (dev > tolerance)
            return "weight at (" + std::to_string(cell.z) + ", " + std::to_string(cell.y) +
                   ", " + std::to_string(cell.x) + ") off by " + std::to_string(dev);
    }
    return {};
}

}  // namespace

VerificationReport compare_ensembles(const std::map<ControlSetting, OccupancyGrid>& decoded,
                                     const PoseSet& expected, double tolerance) {
    VerificationReport report;

    std::set<ControlSetting> keys;
    for (const auto& [setting, grid] : decoded) keys.insert(setting);
    for (const auto& [setting, grid] : expected.poses) keys.insert(setting);
    report.total_branches = keys.size();

    for (const ControlSetting& setting : keys) {
        auto dec = decoded.find(setting);
        auto exp = expected.poses.find(setting);
        if (dec == decoded.end()) {
            report.mismatches.emplace_back(setting, "branch missing from the simulated state");
            continue;
        }
        if (exp == expected.poses.end()) {
            report.mismatches.emplace_back(setting, "branch absent from the classical enumeration");
            continue;
        }
        std::string diff =
            compare_branch(dec->second, exp->second, tolerance, report.max_weight_deviation);
        if (diff.empty())
            ++report.matched;
        else
            report.mismatches.emplace_back(setting, diff);
    }

    report.passed =
        report.matched == report.total_branches && report.max_weight_deviation < tolerance;
    return report;
}

VerificationReport verify(const OccupancyGrid& grid, const RegisterLayout& layout) {
    const Circuit circuit = build_unified(layout);
    const SparseState initial = encode_state(grid, layout);
    const SparseState final_state = run(circuit, initial);
    const auto decoded = decode_state(final_state, layout, grid.max_abs_weight());

    const PoseSet expected = enumerate_poses(grid, layout);
    return compare_ensembles(decoded, expected);
}

}  // namespace qpose
