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

#include <optional>
#include <span>
#include <vector>

#include "qpose/circuit.hpp"
#include "qpose/layout.hpp"

namespace qpose {

/// Carry-cascade incrementer: maps |v> to |v + 2^power mod 2^width> on the
/// LSB-first register `reg` whenever all `extra_controls` are 1 (identity
/// otherwise). Emits width - power X/CX/MCX gates, highest carry first.
/// Throws std::invalid_argument if power >= width.
std::vector<Gate> build_increment(std::span<const int> reg, int power,
                                  std::span<const int> extra_controls = {});

/// Hadamards the translation register of `axis`, then applies one controlled
/// increment per translation qubit: |0..0>|v> becomes the uniform
/// superposition over |d>|v + d mod side> for all d. Empty when the
/// translation register has width zero.
std::vector<Gate> build_translation_stage(const RegisterLayout& layout, Axis axis);

/// Pairwise (C)SWAP network exchanging two equally sized registers. With a
/// control qubit every SWAP becomes a CSWAP. Throws std::invalid_argument on
/// unequal widths.
std::vector<Gate> build_coord_swap(std::span<const int> reg_a,
                                   std::span<const int> reg_b,
                                   std::optional<int> control = std::nullopt);

/// Discrete 90-degree rotation about `axis`: the in-plane register pair is
/// swapped qubit-wise, then the register listed first in the coordinate map
/// is complemented. Conventions, with L the plane side length:
///   z: (x, y) -> (L-1-y, x)    y: (z, x) -> (L-1-x, z)    x: (y, z) -> (L-1-z, y)
/// Applying the returned gates four times is the identity. Throws
/// std::invalid_argument when the in-plane registers differ in width.
std::vector<Gate> build_rotation(const RegisterLayout& layout, Axis axis,
                                 std::optional<int> control = std::nullopt);

/// The full pose-enumeration circuit, in the frozen stage order:
///   1. H on every enabled swap-control qubit, then the controlled coordinate
///      swaps (x,y), (y,z), (z,x);
///   2. H on every enabled rotation-control qubit, then the controlled
///      rotations about z, y, x;
///   3. the translation stages for z, y, x.
/// In shared-control mode the rotation controls are Hadamarded once and drive
/// both their swap and their rotation. The final state carries one branch per
/// assignment of the Hadamard-initialized ancillas.
Circuit build_unified(const RegisterLayout& layout);

}  // namespace qpose
