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
#include <iosfwd>
#include <map>
#include <string>

namespace qpose {

/// Dimensions and physical scale of a power-of-two voxel lattice.
///
/// Side lengths are 2^bits_z x 2^bits_y x 2^bits_x cells. `cell_length` and
/// `origin` are only consumed by rasterization; the quantum encoding works
/// purely on integer cell coordinates.
struct GridSpec {
    int bits_z = 0;
    int bits_y = 0;
    int bits_x = 0;
    double cell_length = 1.0;
    std::array<double, 3> origin{0.0, 0.0, 0.0};  // x, y, z components

    std::uint32_t size_z() const { return 1u << bits_z; }
    std::uint32_t size_y() const { return 1u << bits_y; }
    std::uint32_t size_x() const { return 1u << bits_x; }

    int bits(int axis_zyx) const;  // 0 -> z, 1 -> y, 2 -> x

    /// Throws std::invalid_argument unless 0 <= bits <= 16 per axis and
    /// cell_length > 0.
    void validate() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Integer cell coordinate, ordered lexicographically by (z, y, x).
struct Cell {
    std::uint32_t z = 0;
    std::uint32_t y = 0;
    std::uint32_t x = 0;

    auto operator<=>(const Cell&) const = default;
};

/// Weighted voxel map of ligand occupancy or charge on a GridSpec lattice.
///
/// Weights are signed reals; a cell appears at most once. Immutable by
/// convention after construction code finishes populating it.
class OccupancyGrid {
  public:
    OccupancyGrid() = default;
    explicit OccupancyGrid(GridSpec spec);

    const GridSpec& spec() const { return spec_; }
    const std::map<Cell, double>& cells() const { return cells_; }

    /// Overwrites the weight at `c`. Throws std::out_of_range if the
    /// coordinate does not fit the lattice.
    void set(Cell c, double weight);

    /// Accumulates `weight` onto the existing value at `c`.
    void add(Cell c, double weight);

    /// Weight at `c`, zero when the cell is not stored.
    double weight(Cell c) const;

    bool contains(Cell c) const { return cells_.count(c) != 0; }

    std::size_t nonzero_count() const;
    double max_abs_weight() const;
    double l2_norm() const;

    friend bool operator==(const OccupancyGrid&, const OccupancyGrid&) = default;

  private:
    GridSpec spec_;
    std::map<Cell, double> cells_;
};

// Line-based text format. Header `grid <bits_z> <bits_y> <bits_x>
// <cell_length>`, then one `<z> <y> <x> <weight>` line per occupied cell.
// `#` starts a comment.
void write_grid(std::ostream& out, const OccupancyGrid& grid);
OccupancyGrid read_grid(std::istream& in);

void save_grid_file(const std::string& path, const OccupancyGrid& grid);
OccupancyGrid load_grid_file(const std::string& path);

}  // namespace qpose
