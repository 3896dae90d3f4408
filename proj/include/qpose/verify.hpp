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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpose/encoding.hpp"
#include "qpose/oracle.hpp"

namespace qpose {

/// Rescaled weights may differ between the simulated and enumerated pose by
/// at most this much.
inline constexpr double kVerifyTolerance = 1e-9;

struct VerificationReport {
    std::size_t total_branches = 0;
    std::size_t matched = 0;
    double max_weight_deviation = 0.0;
    std::vector<std::pair<ControlSetting, std::string>> mismatches;
    bool passed = false;

    /// `verify PASS|FAIL branches=<n> matched=<n> maxdev=<e>`
    std::string summary_line() const;

    /// Summary line plus one line per mismatch.
    std::string to_text() const;
};

/// Branch-by-branch comparison of a decoded superposition against the
/// classical pose set. Branches are matched by exact ControlSetting key;
/// a matching branch has the same cell set and per-cell weights within
/// `tolerance`. total_branches counts the union of keys on both sides.
VerificationReport compare_ensembles(const std::map<ControlSetting, OccupancyGrid>& decoded,
                                     const PoseSet& expected,
                                     double tolerance = kVerifyTolerance);

/// Runs the quantum path (encode, build_unified, run, decode) and the
/// classical path (enumerate_poses) for the same layout and compares them.
VerificationReport verify(const OccupancyGrid& grid, const RegisterLayout& layout);

}  // namespace qpose
