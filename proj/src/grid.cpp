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

#include "qpose/grid.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "text_io.hpp"

namespace qpose {

int GridSpec::bits(int axis_zyx) const {
    switch (axis_zyx) {
        case 0: return bits_z;
        case 1: return bits_y;
        case 2: return bits_x;
        default: throw std::invalid_argument("axis index must be 0, 1 or 2");
    }
}

void GridSpec::validate() const {
    for (int b : {bits_z, bits_y, bits_x}) {
        if (b < 0 || b > 16)
            throw std::invalid_argument("register width must be between 0 and 16 bits, got " +
                                        std::to_string(b));
    }
    if (!(cell_length > 0.0))
        throw std::invalid_argument("cell_length must be positive");
}

OccupancyGrid::OccupancyGrid(GridSpec spec) : spec_(spec) { spec_.validate(); }

namespace {
void check_in_range(const GridSpec& spec, Cell c) {
    if (c.z >= spec.size_z() || c.y >= spec.size_y() || c.x >= spec.size_x())
        throw std::out_of_range("cell (" + std::to_string(c.z) + ", " + std::to_string(c.y) +
                                ", " + std::to_string(c.x) + ") outside " +
                                std::to_string(spec.size_z()) + "x" + std::to_string(spec.size_y()) +
                                "x" + std::to_string(spec.size_x()) + " grid");
}
}  // namespace

void OccupancyGrid::set(Cell c, double weight) {
    check_in_range(spec_, c);
    cells_[c] = weight;
}

void OccupancyGrid::add(Cell c, double weight) {
    check_in_range(spec_, c);
    cells_[c] += weight;
}

double OccupancyGrid::weight(Cell c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? 0.0 : it->second;
}

std::size_t OccupancyGrid::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& [cell, w] : cells_)
        if (w != 0.0) ++n;
    return n;
}

double OccupancyGrid::max_abs_weight() const {
    double m = 0.0;
    for (const auto& [cell, w] : cells_) m = std::max(m, std::abs(w));
    return m;
}

double OccupancyGrid::l2_norm() const {
    double s = 0.0;
    for (const auto& [cell, w] : cells_) s += w * w;
    return std::sqrt(s);
}

void write_grid(std::ostream& out, const OccupancyGrid& grid) {
    const GridSpec& spec = grid.spec();
    out << "grid " << spec.bits_z << ' ' << spec.bits_y << ' ' << spec.bits_x << ' '
        << detail::format_double(spec.cell_length) << '\n';
    for (const auto& [cell, w] : grid.cells()) {
        out << cell.z << ' ' << cell.y << ' ' << cell.x << ' ' << detail::format_double(w)
            << '\n';
    }
}

OccupancyGrid read_grid(std::istream& in) {
    std::vector<std::string> tok;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, tok, line_no))
        throw std::runtime_error("grid file is empty");
    if (tok.size() != 5 || tok[0] != "grid")
        detail::parse_fail(line_no, "expected header 'grid <bits_z> <bits_y> <bits_x> <cell_length>'");

    GridSpec spec;
    spec.bits_z = detail::parse_int(tok[1], line_no);
    spec.bits_y = detail::parse_int(tok[2], line_no);
    spec.bits_x = detail::parse_int(tok[3], line_no);
    spec.cell_length = detail::parse_double(tok[4], line_no);
    spec.validate();

    OccupancyGrid grid(spec);
    while (detail::next_content_line(in, tok, line_no)) {
        if (tok.size() != 4)
            detail::parse_fail(line_no, "expected '<z> <y> <x> <weight>'");
        Cell c{static_cast<std::uint32_t>(detail::parse_u64(tok[0], line_no)),
               static_cast<std::uint32_t>(detail::parse_u64(tok[1], line_no)),
               static_cast<std::uint32_t>(detail::parse_u64(tok[2], line_no))};
        double w = detail::parse_double(tok[3], line_no);
        if (grid.contains(c))
            detail::parse_fail(line_no, "duplicate cell coordinate");
        try {
            grid.set(c, w);
        } catch (const std::out_of_range& e) {
            detail::parse_fail(line_no, e.what());
        }
    }
    return grid;
}

void save_grid_file(const std::string& path, const OccupancyGrid& grid) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_grid(out, grid);
}

OccupancyGrid load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_grid(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace qpose
