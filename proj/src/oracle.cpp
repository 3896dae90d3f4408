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

#include "qpose/oracle.hpp"

#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpose/grid.hpp"
#include "text_io.hpp"

namespace qpose {

OccupancyGrid translate_grid(const OccupancyGrid& grid, std::uint32_t dz, std::uint32_t dy,
                             std::uint32_t dx) {
    const GridSpec& spec = grid.spec();
    OccupancyGrid out(spec);
    for (const auto& [c, w] : grid.cells()) {
        out.set(Cell{(c.z + dz) & (spec.size_z() - 1), (c.y + dy) & (spec.size_y() - 1),
                     (c.x + dx) & (spec.size_x() - 1)},
                w);
    }
    return out;
}

OccupancyGrid swap_axes(const OccupancyGrid& grid, AxisPair pair) {
    const GridSpec& spec = grid.spec();
    auto require_equal = [&](int a, int b) {
        if (a != b)
            throw std::invalid_argument(std::string("cannot swap axes '") +
                                        axis_pair_name(pair) + "': unequal register widths");
    };
    OccupancyGrid out(spec);
    switch (pair) {
        case AxisPair::XY:
            require_equal(spec.bits_x, spec.bits_y);
            for (const auto& [c, w] : grid.cells()) out.set(Cell{c.z, c.x, c.y}, w);
            break;
        case AxisPair::YZ:
            require_equal(spec.bits_y, spec.bits_z);
            for (const auto& [c, w] : grid.cells()) out.set(Cell{c.y, c.z, c.x}, w);
            break;
        case AxisPair::ZX:
            require_equal(spec.bits_z, spec.bits_x);
            for (const auto& [c, w] : grid.cells()) out.set(Cell{c.x, c.y, c.z}, w);
            break;
    }
    return out;
}

OccupancyGrid rotate90(const OccupancyGrid& grid, Axis axis) {
    const GridSpec& spec = grid.spec();
    auto require_equal = [&](int a, int b) {
        if (a != b)
            throw std::invalid_argument(std::string("cannot rotate about '") + axis_name(axis) +
                                        "': in-plane register widths differ");
    };
    OccupancyGrid out(spec);
    switch (axis) {
        case Axis::Z: {
            require_equal(spec.bits_x, spec.bits_y);
            const std::uint32_t L = spec.size_x();
            // (x, y) -> (L-1-y, x)
            for (const auto& [c, w] : grid.cells()) out.set(Cell{c.z, c.x, L - 1 - c.y}, w);
            break;
        }
        case Axis::Y: {
            require_equal(spec.bits_z, spec.bits_x);
            const std::uint32_t L = spec.size_z();
            // (z, x) -> (L-1-x, z)
            for (const auto& [c, w] : grid.cells()) out.set(Cell{L - 1 - c.x, c.y, c.z}, w);
            break;
        }
        case Axis::X: {
            require_equal(spec.bits_y, spec.bits_z);
            const std::uint32_t L = spec.size_y();
            // (y, z) -> (L-1-z, y)
            for (const auto& [c, w] : grid.cells()) out.set(Cell{c.y, L - 1 - c.z, c.x}, w);
            break;
        }
    }
    return out;
}

std::size_t PoseSet::distinct_pose_count() const {
    std::set<std::string> seen;
    for (const auto& [setting, grid] : poses) {
        std::ostringstream key;
        write_grid(key, grid);
        seen.insert(key.str());
    }
    return seen.size();
}

PoseSet enumerate_poses(const OccupancyGrid& grid, const RegisterLayout& layout) {
    layout.validate();
    if (grid.spec().bits_z != layout.spec.bits_z || grid.spec().bits_y != layout.spec.bits_y ||
        grid.spec().bits_x != layout.spec.bits_x)
        throw std::invalid_argument("grid dimensions do not match the register layout");

    const StageOptions& opt = layout.options;
    const int mz = static_cast<int>(layout.t_z.size());
    const int my = static_cast<int>(layout.t_y.size());
    const int mx = static_cast<int>(layout.t_x.size());

    // Symmetry bits: one per shared control, otherwise one per enabled swap
    // plus one per enabled rotation, matching the circuit's ancillas.
    std::vector<int> sym_slots;  // 0..2 swap (x,y),(y,z),(z,x); 3..5 rot z,y,x
    if (opt.shared_controls) {
        for (int i = 0; i < 3; ++i)
            if (opt.rot_axes[i]) sym_slots.push_back(i);  // drives swap i and rot i
    } else {
        for (int i = 0; i < 3; ++i)
            if (opt.swap_pairs[i]) sym_slots.push_back(i);
        for (int i = 0; i < 3; ++i)
            if (opt.rot_axes[i]) sym_slots.push_back(3 + i);
    }

    PoseSet set;
    set.source = grid.spec();

    for (std::uint32_t dz = 0; dz < (1u << mz); ++dz)
        for (std::uint32_t dy = 0; dy < (1u << my); ++dy)
            for (std::uint32_t dx = 0; dx < (1u << mx); ++dx)
                for (std::uint32_t sym = 0; sym < (1u << sym_slots.size()); ++sym) {
                    ControlSetting cs;
                    cs.dz = dz;
                    cs.dy = dy;
                    cs.dx = dx;
                    for (std::size_t b = 0; b < sym_slots.size(); ++b) {
                        if (!((sym >> b) & 1)) continue;
                        int slot = sym_slots[b];
                        if (opt.shared_controls) {
                            cs.swaps[slot] = true;
                            cs.rots[slot] = true;
                        } else if (slot < 3) {
                            cs.swaps[slot] = true;
                        } else {
                            cs.rots[slot - 3] = true;
                        }
                    }

                    // Frozen order: swaps (x,y),(y,z),(z,x), rotations z,y,x,
                    // then the translations.
                    OccupancyGrid pose = grid;
                    for (int i = 0; i < 3; ++i)
                        if (cs.swaps[i]) pose = swap_axes(pose, static_cast<AxisPair>(i));
                    for (int i = 0; i < 3; ++i)
                        if (cs.rots[i]) pose = rotate90(pose, static_cast<Axis>(i));
                    pose = translate_grid(pose, cs.dz, cs.dy, cs.dx);

                    set.poses.emplace(cs, std::move(pose));
                }
    return set;
}

BigInt count_configurations(std::span<const std::uint64_t> resolutions) {
    BigInt product = 1;
    for (std::uint64_t r : resolutions) {
        if (r == 0) throw std::invalid_argument("degree-of-freedom counts must be positive");
        product *= r;
    }
    return product;
}

void write_poses(std::ostream& out, const PoseSet& set) {
    out << "grid " << set.source.bits_z << ' ' << set.source.bits_y << ' ' << set.source.bits_x
        << ' ' << detail::format_double(set.source.cell_length) << '\n';
    for (const auto& [setting, grid] : set.poses) {
        out << "pose " << setting.to_string() << '\n';
        for (const auto& [cell, w] : grid.cells())
            out << cell.z << ' ' << cell.y << ' ' << cell.x << ' ' << detail::format_double(w)
                << '\n';
    }
}

}  // namespace qpose
