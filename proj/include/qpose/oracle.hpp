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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "qpose/grid.hpp"
#include "qpose/layout.hpp"

namespace qpose {

using BigInt = boost::multiprecision::cpp_int;

/// Moves every cell by (dz, dy, dx), wrapping modulo the side length of each
/// axis. Weights are unchanged.
OccupancyGrid translate_grid(const OccupancyGrid& grid, std::uint32_t dz,
                             std::uint32_t dy, std::uint32_t dx);

/// Exchanges the two coordinates of `pair` on every cell (the diagonal
/// reflection). Throws std::invalid_argument when the two axes differ in bit
/// width. Involution.
OccupancyGrid swap_axes(const OccupancyGrid& grid, AxisPair pair);

/// 90-degree rotation about `axis` using the same conventions as
/// build_rotation (z: (x,y) -> (L-1-y, x), etc.). Order four. Throws
/// std::invalid_argument when the in-plane widths differ.
OccupancyGrid rotate90(const OccupancyGrid& grid, Axis axis);

/// Ground truth for circuit verification: the classically transformed grid
/// for every control setting.
struct PoseSet {
    GridSpec source;
    std::map<ControlSetting, OccupancyGrid> poses;

    std::size_t size() const { return poses.size(); }

    /// Number of distinct grids among the poses. Control settings can
    /// collide (three pairwise swaps only span the six coordinate
    /// permutations), so this may be smaller than size().
    std::size_t distinct_pose_count() const;
};

/// Enumerates every assignment of the layout's ancilla registers and applies
/// the transforms in the frozen order: swap (x,y), swap (y,z), swap (z,x),
/// rotate z, rotate y, rotate x, then the translations. Key count is
/// 2^(ancilla qubits). In shared-control mode each per-axis bit drives its
/// swap and its rotation together.
PoseSet enumerate_poses(const OccupancyGrid& grid, const RegisterLayout& layout);

/// Product of per-degree-of-freedom value counts, exact at any size.
BigInt count_configurations(std::span<const std::uint64_t> resolutions);

// Text dump: header `grid ...` line, then per pose a `pose dz=<> dy=<> dx=<>
// s=<bbb> r=<bbb>` line followed by its cells in grid-file format.
void write_poses(std::ostream& out, const PoseSet& poses);

}  // namespace qpose
