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

#include "qpose/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qpose {

SparseState encode_state(const OccupancyGrid& grid, const RegisterLayout& layout) {
    layout.validate();
    if (grid.spec().bits_z != layout.spec.bits_z || grid.spec().bits_y != layout.spec.bits_y ||
        grid.spec().bits_x != layout.spec.bits_x)
        throw std::invalid_argument("grid dimensions do not match the register layout");

    const double norm = grid.l2_norm();
    if (norm == 0.0)
        throw std::invalid_argument("cannot encode a grid with no nonzero weights");

    SparseState state;
    state.num_qubits = layout.total_qubits;
    state.terms.reserve(grid.cells().size());
    for (const auto& [cell, w] : grid.cells()) {
        const double amp = w / norm;
        if (std::abs(amp) < kAmplitudePrune) continue;
        state.terms.emplace_back(layout.position_index(cell), Amplitude{amp, 0.0});
    }
    std::sort(state.terms.begin(), state.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    state.validate();
    return state;
}

std::map<ControlSetting, OccupancyGrid> decode_state(const SparseState& state,
                                                     const RegisterLayout& layout,
                                                     double rescale_to) {
    layout.validate();
    if (state.num_qubits != layout.total_qubits)
        throw std::invalid_argument("state width does not match the register layout");

    const std::uint64_t amask = layout.ancilla_mask();
    const std::uint64_t pmask =
        deposit_bits(~std::uint64_t{0}, layout.pos_z) |
        deposit_bits(~std::uint64_t{0}, layout.pos_y) |
        deposit_bits(~std::uint64_t{0}, layout.pos_x);

    struct Branch {
        std::vector<std::pair<Cell, double>> cells;
        double norm_sq = 0.0;
        double max_abs = 0.0;
    };
    std::map<std::uint64_t, Branch> branches;

    for (const auto& [idx, amp] : state.terms) {
        if (std::abs(amp) < 1e-12) continue;  // treated as exactly zero
        if (std::abs(amp.imag()) > 1e-12)
            throw std::runtime_error("state has complex amplitudes; pose decoding expects the "
                                     "real-amplitude encoding");
        if ((idx & ~(amask | pmask)) != 0)
            throw std::runtime_error("state populates qubits outside the layout registers");
        Branch& br = branches[idx & amask];
        br.cells.emplace_back(layout.position_cell(idx), amp.real());
        br.norm_sq += amp.real() * amp.real();
        br.max_abs = std::max(br.max_abs, std::abs(amp.real()));
    }
    if (branches.empty()) throw std::runtime_error("cannot decode an empty state");

    // A circuit made of H-launched permutation stages spreads probability
    // mass uniformly; unequal branch norms mean the state was not produced
    // by such a circuit.
    double norm_lo = std::sqrt(branches.begin()->second.norm_sq);
    double norm_hi = norm_lo;
    for (const auto& [pattern, br] : branches) {
        const double n = std::sqrt(br.norm_sq);
        norm_lo = std::min(norm_lo, n);
        norm_hi = std::max(norm_hi, n);
    }
    if (norm_hi - norm_lo > 1e-9)
        throw std::runtime_error("branch norms differ by " + std::to_string(norm_hi - norm_lo) +
                                 "; the state is not a uniform pose superposition");

    std::map<ControlSetting, OccupancyGrid> poses;
    for (const auto& [pattern, br] : branches) {
        const double scale = rescale_to / br.max_abs;
        OccupancyGrid grid(layout.spec);
        for (const auto& [cell, w] : br.cells) grid.set(cell, w * scale);
        poses.emplace(layout.control_setting(pattern), std::move(grid));
    }
    return poses;
}

}  // namespace qpose
