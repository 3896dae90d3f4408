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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qpose/grid.hpp"

namespace qpose {

/// One ligand atom: element label, position in distance units and a weight
/// (partial charge or unit occupancy).
struct AtomRecord {
    std::string element;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double weight = 1.0;

    friend bool operator==(const AtomRecord&, const AtomRecord&) = default;
};

/// Classical preprocessing step: bins atoms onto the lattice. Atoms are first
/// translated so the bounding-box minimum sits at the grid origin plus half a
/// cell, then each atom's weight is deposited into the nearest cell (ties
/// broken toward the lower index); weights landing on the same cell
/// accumulate. Throws std::invalid_argument, naming the offending atom, if
/// one falls outside the lattice after alignment.
OccupancyGrid rasterize(std::span<const AtomRecord> atoms, const GridSpec& spec);

// Atom list format: one `element x y z [weight]` line per atom, weight
// defaulting to 1.0; `#` starts a comment.
std::vector<AtomRecord> read_atoms(std::istream& in);
std::vector<AtomRecord> load_atoms_file(const std::string& path);

}  // namespace qpose
