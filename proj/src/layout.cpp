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

#include "qpose/layout.hpp"

#include <set>
#include <stdexcept>

namespace qpose {

const char* axis_name(Axis axis) {
    switch (axis) {
        case Axis::Z: return "z";
        case Axis::Y: return "y";
        case Axis::X: return "x";
    }
    return "?";
}

const char* axis_pair_name(AxisPair pair) {
    switch (pair) {
        case AxisPair::XY: return "xy";
        case AxisPair::YZ: return "yz";
        case AxisPair::ZX: return "zx";
    }
    return "?";
}

StageOptions StageOptions::all_swaps() {
    StageOptions o;
    o.swap_pairs = {true, true, true};
    return o;
}

StageOptions StageOptions::all_rotations() {
    StageOptions o;
    o.rot_axes = {true, true, true};
    return o;
}

StageOptions StageOptions::all() {
    StageOptions o;
    o.swap_pairs = {true, true, true};
    o.rot_axes = {true, true, true};
    return o;
}

std::string ControlSetting::to_string() const {
    auto bits = [](const std::array<bool, 3>& b) {
        std::string s;
        for (bool v : b) s += v ? '1' : '0';
        return s;
    };
    return "dz=" + std::to_string(dz) + " dy=" + std::to_string(dy) + " dx=" +
           std::to_string(dx) + " s=" + bits(swaps) + " r=" + bits(rots);
}

const std::vector<int>& RegisterLayout::pos(Axis axis) const {
    switch (axis) {
        case Axis::Z: return pos_z;
        case Axis::Y: return pos_y;
        case Axis::X: return pos_x;
    }
    throw std::invalid_argument("bad axis");
}

const std::vector<int>& RegisterLayout::shift(Axis axis) const {
    switch (axis) {
        case Axis::Z: return t_z;
        case Axis::Y: return t_y;
        case Axis::X: return t_x;
    }
    throw std::invalid_argument("bad axis");
}

bool RegisterLayout::has_swap_control(AxisPair pair) const {
    return swap_control(pair) >= 0;
}

bool RegisterLayout::has_rot_control(Axis axis) const {
    return rot_controls[static_cast<int>(axis)] >= 0;
}

int RegisterLayout::swap_control(AxisPair pair) const {
    int i = static_cast<int>(pair);
    // Shared mode: r_z drives (x,y), r_y drives (y,z), r_x drives (z,x).
    if (options.shared_controls) return options.swap_pairs[i] ? rot_controls[i] : -1;
    return swap_controls[i];
}

int RegisterLayout::ancilla_count() const {
    int n = static_cast<int>(t_z.size() + t_y.size() + t_x.size());
    for (int q : swap_controls) n += q >= 0;
    for (int q : rot_controls) n += q >= 0;
    return n;
}

std::uint64_t RegisterLayout::ancilla_mask() const {
    std::uint64_t mask = 0;
    for (const auto* reg : {&t_z, &t_y, &t_x})
        for (int q : *reg) mask |= std::uint64_t{1} << q;
    for (int q : swap_controls)
        if (q >= 0) mask |= std::uint64_t{1} << q;
    for (int q : rot_controls)
        if (q >= 0) mask |= std::uint64_t{1} << q;
    return mask;
}

std::uint64_t RegisterLayout::position_index(Cell c) const {
    return deposit_bits(c.z, pos_z) | deposit_bits(c.y, pos_y) | deposit_bits(c.x, pos_x);
}

Cell RegisterLayout::position_cell(std::uint64_t index) const {
    return Cell{static_cast<std::uint32_t>(extract_bits(index, pos_z)),
                static_cast<std::uint32_t>(extract_bits(index, pos_y)),
                static_cast<std::uint32_t>(extract_bits(index, pos_x))};
}

ControlSetting RegisterLayout::control_setting(std::uint64_t index) const {
    ControlSetting cs;
    cs.dz = static_cast<std::uint32_t>(extract_bits(index, t_z));
    cs.dy = static_cast<std::uint32_t>(extract_bits(index, t_y));
    cs.dx = static_cast<std::uint32_t>(extract_bits(index, t_x));
    for (int i = 0; i < 3; ++i) {
        if (rot_controls[i] >= 0) cs.rots[i] = (index >> rot_controls[i]) & 1;
        if (options.shared_controls) {
            cs.swaps[i] = cs.rots[i];
        } else if (swap_controls[i] >= 0) {
            cs.swaps[i] = (index >> swap_controls[i]) & 1;
        }
    }
    return cs;
}

void RegisterLayout::validate() const {
    spec.validate();
    if (total_qubits < 0 || total_qubits > 48)
        throw std::invalid_argument("layouts are limited to 48 qubits, got " +
                                    std::to_string(total_qubits));

    if (static_cast<int>(pos_z.size()) != spec.bits_z ||
        static_cast<int>(pos_y.size()) != spec.bits_y ||
        static_cast<int>(pos_x.size()) != spec.bits_x)
        throw std::invalid_argument("position register widths do not match the grid spec");

    if (t_z.size() > pos_z.size() || t_y.size() > pos_y.size() || t_x.size() > pos_x.size())
        throw std::invalid_argument(
            "translation register wider than its position register (shifts would exceed the "
            "lattice period)");

    if (options.shared_controls) {
        if (options.swap_pairs != options.rot_axes)
            throw std::invalid_argument(
                "shared-control mode requires identical swap and rotation enables");
        for (int q : swap_controls)
            if (q >= 0)
                throw std::invalid_argument(
                    "shared-control layouts must not allocate separate swap controls");
    }
    for (int i = 0; i < 3; ++i) {
        bool want_swap = options.swap_pairs[i] && !options.shared_controls;
        if (want_swap != (swap_controls[i] >= 0))
            throw std::invalid_argument("swap control allocation does not match stage options");
        if (options.rot_axes[i] != (rot_controls[i] >= 0))
            throw std::invalid_argument("rotation control allocation does not match stage options");
    }

    // Swaps and rotations mix two position registers; both demand a square
    // plane. Swap pair order is (xy, yz, zx); rotation axis z acts in the
    // (x,y) plane, axis y in (z,x), axis x in (y,z).
    const std::array<std::pair<int, int>, 3> pair_planes{
        {{spec.bits_x, spec.bits_y}, {spec.bits_y, spec.bits_z}, {spec.bits_z, spec.bits_x}}};
    const std::array<std::pair<int, int>, 3> rot_planes{
        {{spec.bits_x, spec.bits_y}, {spec.bits_z, spec.bits_x}, {spec.bits_y, spec.bits_z}}};
    for (int i = 0; i < 3; ++i) {
        if (options.swap_pairs[i] && pair_planes[i].first != pair_planes[i].second)
            throw std::invalid_argument(std::string("swap stage '") +
                                        axis_pair_name(static_cast<AxisPair>(i)) +
                                        "' needs a square plane, but the register widths differ");
        if (options.rot_axes[i] && rot_planes[i].first != rot_planes[i].second)
            throw std::invalid_argument(std::string("rotation stage '") +
                                        axis_name(static_cast<Axis>(i)) +
                                        "' needs a square plane, but the register widths differ");
    }

    std::set<int> seen;
    auto check = [&](int q) {
        if (q < 0 || q >= total_qubits)
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        if (!seen.insert(q).second)
            throw std::invalid_argument("qubit index " + std::to_string(q) + " used twice");
    };
    for (const auto* reg : {&pos_z, &pos_y, &pos_x, &t_z, &t_y, &t_x})
        for (int q : *reg) check(q);
    for (int q : swap_controls)
        if (q >= 0) check(q);
    for (int q : rot_controls)
        if (q >= 0) check(q);
}

RegisterLayout make_layout(const GridSpec& spec, std::array<int, 3> t_bits,
                           const StageOptions& options) {
    spec.validate();
    for (int m : t_bits)
        if (m < 0) throw std::invalid_argument("translation register widths must be nonnegative");

    RegisterLayout layout;
    layout.spec = spec;
    layout.options = options;

    int next = 0;
    auto take = [&next](int width) {
        std::vector<int> reg(width);
        for (int& q : reg) q = next++;
        return reg;
    };
    layout.pos_z = take(spec.bits_z);
    layout.pos_y = take(spec.bits_y);
    layout.pos_x = take(spec.bits_x);
    layout.t_z = take(t_bits[0]);
    layout.t_y = take(t_bits[1]);
    layout.t_x = take(t_bits[2]);
    if (!options.shared_controls) {
        for (int i = 0; i < 3; ++i)
            if (options.swap_pairs[i]) layout.swap_controls[i] = next++;
    }
    for (int i = 0; i < 3; ++i)
        if (options.rot_axes[i]) layout.rot_controls[i] = next++;
    layout.total_qubits = next;

    layout.validate();
    return layout;
}

std::uint64_t extract_bits(std::uint64_t index, std::span<const int> qubits) {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k)
        value |= ((index >> qubits[k]) & 1) << k;
    return value;
}

std::uint64_t deposit_bits(std::uint64_t value, std::span<const int> qubits) {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k)
        index |= ((value >> k) & 1) << qubits[k];
    return index;
}

}  // namespace qpose
