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

#include "qpose/rasterize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "text_io.hpp"

namespace qpose {

namespace {

/// Nearest cell index along one axis, ties toward the lower index. `u` is the
/// position in cell units relative to the axis origin; centers sit at k+0.5.
long nearest_cell(double u) {
    return static_cast<long>(std::ceil(u - 1.0));
}

}  // namespace

OccupancyGrid rasterize(std::span<const AtomRecord> atoms, const GridSpec& spec) {
    spec.validate();
    if (atoms.empty()) throw std::invalid_argument("atom list is empty");

    for (const AtomRecord& a : atoms)
        if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z))
            throw std::invalid_argument("atom '" + a.element + "' has a non-finite coordinate");

    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x, min_z = min_x;
    for (const AtomRecord& a : atoms) {
        min_x = std::min(min_x, a.x);
        min_y = std::min(min_y, a.y);
        min_z = std::min(min_z, a.z);
    }

    // Align the bounding-box minimum with the center of cell 0 (origin plus
    // half a cell), then bin each atom to its nearest cell center.
    const double half = 0.5 * spec.cell_length;
    OccupancyGrid grid(spec);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const AtomRecord& a = atoms[i];
        const double ux = (a.x - min_x + half) / spec.cell_length;
        const double uy = (a.y - min_y + half) / spec.cell_length;
        const double uz = (a.z - min_z + half) / spec.cell_length;
        const long cx = nearest_cell(ux);
        const long cy = nearest_cell(uy);
        const long cz = nearest_cell(uz);
        if (cz < 0 || cy < 0 || cx < 0 || cz >= static_cast<long>(spec.size_z()) ||
            cy >= static_cast<long>(spec.size_y()) || cx >= static_cast<long>(spec.size_x()))
            throw std::invalid_argument(
                "atom " + std::to_string(i) + " ('" + a.element + "' at " +
                detail::format_double(a.x) + ", " + detail::format_double(a.y) + ", " +
                detail::format_double(a.z) + ") falls outside the grid after alignment");
        grid.add(Cell{static_cast<std::uint32_t>(cz), static_cast<std::uint32_t>(cy),
                      static_cast<std::uint32_t>(cx)},
                 a.weight);
    }
    return grid;
}

std::vector<AtomRecord> read_atoms(std::istream& in) {
    std::vector<AtomRecord> atoms;
    std::vector<std::string> tok;
    std::size_t line_no = 0;
    while (detail::next_content_line(in, tok, line_no)) {
        if (tok.size() != 4 && tok.size() != 5)
            detail::parse_fail(line_no, "expected 'element x y z [weight]'");
        AtomRecord a;
        a.element = tok[0];
        a.x = detail::parse_double(tok[1], line_no);
        a.y = detail::parse_double(tok[2], line_no);
        a.z = detail::parse_double(tok[3], line_no);
        if (tok.size() == 5) a.weight = detail::parse_double(tok[4], line_no);
        atoms.push_back(std::move(a));
    }
    return atoms;
}

std::vector<AtomRecord> load_atoms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_atoms(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace qpose
