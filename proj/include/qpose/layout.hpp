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

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpose/grid.hpp"

namespace qpose {

enum class Axis : int { Z = 0, Y = 1, X = 2 };

/// Coordinate pairs exchanged by the swap stages, in the fixed circuit order.
enum class AxisPair : int { XY = 0, YZ = 1, ZX = 2 };

const char* axis_name(Axis axis);
const char* axis_pair_name(AxisPair pair);

/// Which symmetry stages of the unified circuit are active.
///
/// `swap_pairs` follows the (x,y), (y,z), (z,x) order; `rot_axes` the z, y, x
/// order. With `shared_controls` the rotation-control qubits also drive the
/// coordinate swaps (pairing r_z with (x,y), r_y with (y,z), r_x with (z,x)),
/// so swap_pairs and rot_axes must be equal in that mode.
struct StageOptions {
    std::array<bool, 3> swap_pairs{false, false, false};
    std::array<bool, 3> rot_axes{false, false, false};
    bool shared_controls = false;

    static StageOptions none() { return {}; }
    static StageOptions all_swaps();
    static StageOptions all_rotations();
    static StageOptions all();

    friend bool operator==(const StageOptions&, const StageOptions&) = default;
};

/// One classical selection of the ancilla registers: translation distances in
/// cells plus the swap / rotation apply-or-omit flags.
struct ControlSetting {
    std::uint32_t dz = 0;
    std::uint32_t dy = 0;
    std::uint32_t dx = 0;
    std::array<bool, 3> swaps{false, false, false};  // (x,y), (y,z), (z,x)
    std::array<bool, 3> rots{false, false, false};   // z, y, x

    auto operator<=>(const ControlSetting&) const = default;

    /// Renders `dz=<> dy=<> dx=<> s=<bbb> r=<bbb>` as used by pose dumps.
    std::string to_string() const;
};

/// Assignment of qubit indices to the position registers (N^z, N^y, N^x),
/// translation registers (T^z, T^y, T^x) and symmetry-control qubits.
///
/// Registers are least-significant-qubit first. `make_layout` packs them into
/// the frozen global order: position z, y, x, then translation z, y, x, then
/// swap controls (x,y), (y,z), (z,x), then rotation controls z, y, x, so the
/// z position register occupies the least significant bits of a basis index.
/// Absent control qubits are marked -1.
struct RegisterLayout {
    GridSpec spec;
    StageOptions options;
    std::vector<int> pos_z, pos_y, pos_x;
    std::vector<int> t_z, t_y, t_x;
    std::array<int, 3> swap_controls{-1, -1, -1};
    std::array<int, 3> rot_controls{-1, -1, -1};
    int total_qubits = 0;

    const std::vector<int>& pos(Axis axis) const;
    const std::vector<int>& shift(Axis axis) const;

    bool has_swap_control(AxisPair pair) const;
    bool has_rot_control(Axis axis) const;

    /// Control qubit driving the swap of `pair`, honoring shared mode.
    int swap_control(AxisPair pair) const;

    int ancilla_count() const;
    std::uint64_t ancilla_mask() const;

    /// Basis index with the position registers holding `c` and all other
    /// qubits zero.
    std::uint64_t position_index(Cell c) const;

    /// Cell stored in the position registers of `index`.
    Cell position_cell(std::uint64_t index) const;

    /// ControlSetting encoded in the ancilla bits of `index`. In shared mode
    /// the rotation bits are mirrored into the swap flags.
    ControlSetting control_setting(std::uint64_t index) const;

    /// Throws std::invalid_argument on inconsistent widths, duplicate or
    /// out-of-range qubits, oversized translation registers, control qubits
    /// that do not match `options`, or more than 48 total qubits.
    void validate() const;
};

/// Canonical layout for `spec` with translation widths `t_bits` (ordered z,
/// y, x) and the control qubits demanded by `options`. Validates the result.
RegisterLayout make_layout(const GridSpec& spec, std::array<int, 3> t_bits,
                           const StageOptions& options = {});

/// Reads the LSB-first value stored at `qubits` inside a basis index.
std::uint64_t extract_bits(std::uint64_t index, std::span<const int> qubits);

/// Basis-index mask with `value` deposited LSB-first onto `qubits`.
std::uint64_t deposit_bits(std::uint64_t value, std::span<const int> qubits);

}  // namespace qpose
