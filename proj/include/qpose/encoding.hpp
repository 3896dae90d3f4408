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

#include "qpose/grid.hpp"
#include "qpose/layout.hpp"
#include "qpose/sparse_state.hpp"

namespace qpose {

/// Direct real-amplitude encoding of an occupancy grid: the basis state whose
/// position registers hold (z, y, x) receives amplitude w(z,y,x) / ||w||_2,
/// preserving weight signs; all ancilla qubits are 0. Throws
/// std::invalid_argument for an all-zero grid or a grid/layout width
/// mismatch.
SparseState encode_state(const OccupancyGrid& grid, const RegisterLayout& layout);

/// Splits a simulated state into one grid per ancilla assignment. Each
/// distinct ancilla pattern becomes a ControlSetting key; the conditional
/// position amplitudes become cell weights, rescaled so the largest absolute
/// weight equals `rescale_to` (pass the source grid's max_abs_weight() to
/// recover its scale). Amplitudes below 1e-12 are treated as zero. Throws
/// std::runtime_error when branch norms differ by more than 1e-9 (a
/// non-uniform superposition) or when amplitudes are not real.
std::map<ControlSetting, OccupancyGrid> decode_state(const SparseState& state,
                                                     const RegisterLayout& layout,
                                                     double rescale_to = 1.0);

}  // namespace qpose
