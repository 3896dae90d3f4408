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

#include "qpose/builders.hpp"

#include <stdexcept>
#include <string>

namespace qpose {

std::vector<Gate> build_increment(std::span<const int> reg, int power,
                                  std::span<const int> extra_controls) {
    const int width = static_cast<int>(reg.size());
    if (power < 0 || power >= width)
        throw std::invalid_argument("increment power " + std::to_string(power) +
                                    " must be below the register width " +
                                    std::to_string(width));

    // Carry cascade for |v> -> |v + 2^power mod 2^width>: the bit at k flips
    // when bits power..k-1 are all 1, so flip from the top down to keep the
    // controls reading pre-increment values.
    std::vector<Gate> gates;
    gates.reserve(width - power);
    for (int k = width - 1; k >= power; --k) {
        std::vector<int> controls(extra_controls.begin(), extra_controls.end());
        for (int j = power; j < k; ++j) controls.push_back(reg[j]);
        gates.push_back(make_controlled_x(std::move(controls), reg[k]));
    }
    return gates;
}

std::vector<Gate> build_translation_stage(const RegisterLayout& layout, Axis axis) {
    const std::vector<int>& pos = layout.pos(axis);
    const std::vector<int>& shift = layout.shift(axis);

    std::vector<Gate> gates;
    for (int t : shift) gates.push_back(make_h(t));
    for (std::size_t q = 0; q < shift.size(); ++q) {
        const int control[] = {shift[q]};
        auto inc = build_increment(pos, static_cast<int>(q), control);
        gates.insert(gates.end(), inc.begin(), inc.end());
    }
    return gates;
}

std::vector<Gate> build_coord_swap(std::span<const int> reg_a, std::span<const int> reg_b,
                                   std::optional<int> control) {
    if (reg_a.size() != reg_b.size())
        throw std::invalid_argument("coordinate swap needs equally wide registers, got " +
                                    std::to_string(reg_a.size()) + " and " +
                                    std::to_string(reg_b.size()));
    std::vector<Gate> gates;
    gates.reserve(reg_a.size());
    for (std::size_t k = 0; k < reg_a.size(); ++k)
        gates.push_back(make_controlled_swap(control.value_or(-1), reg_a[k], reg_b[k]));
    return gates;
}

std::vector<Gate> build_rotation(const RegisterLayout& layout, Axis axis,
                                 std::optional<int> control) {
    // In-plane register pair and the register that is complemented after the
    // exchange; L-1-v is the bitwise complement on a power-of-two side.
    //   z: (x,y) -> (L-1-y, x)   swap x,y then complement x
    //   y: (z,x) -> (L-1-x, z)   swap z,x then complement z
    //   x: (y,z) -> (L-1-z, y)   swap y,z then complement y
    const std::vector<int>* first = nullptr;
    const std::vector<int>* second = nullptr;
    switch (axis) {
        case Axis::Z: first = &layout.pos_x; second = &layout.pos_y; break;
        case Axis::Y: first = &layout.pos_z; second = &layout.pos_x; break;
        case Axis::X: first = &layout.pos_y; second = &layout.pos_z; break;
    }
    if (first->size() != second->size())
        throw std::invalid_argument(std::string("rotation about ") + axis_name(axis) +
                                    " needs a square plane, but the register widths differ");

    std::vector<Gate> gates = build_coord_swap(*first, *second, control);
    for (int q : *first)
        gates.push_back(control ? make_cx(*control, q) : make_x(q));
    return gates;
}

Circuit build_unified(const RegisterLayout& layout) {
    layout.validate();
    const StageOptions& opt = layout.options;
    Circuit circuit(layout.total_qubits);

    // Stage 1: coordinate swaps. Every participating control qubit gets its
    // Hadamard here, including shared controls that later drive a rotation.
    for (int i = 0; i < 3; ++i) {
        int c = layout.swap_control(static_cast<AxisPair>(i));
        if (c >= 0) circuit.append(make_h(c));
    }
    const std::array<std::pair<const std::vector<int>*, const std::vector<int>*>, 3> pairs{
        {{&layout.pos_x, &layout.pos_y},
         {&layout.pos_y, &layout.pos_z},
         {&layout.pos_z, &layout.pos_x}}};
    for (int i = 0; i < 3; ++i) {
        if (!opt.swap_pairs[i]) continue;
        int c = layout.swap_control(static_cast<AxisPair>(i));
        circuit.append(build_coord_swap(*pairs[i].first, *pairs[i].second, c));
    }

    // Stage 2: rotations. Shared controls were already Hadamarded above.
    for (int i = 0; i < 3; ++i) {
        if (!opt.rot_axes[i]) continue;
        if (!opt.shared_controls) circuit.append(make_h(layout.rot_controls[i]));
    }
    for (int i = 0; i < 3; ++i) {
        if (!opt.rot_axes[i]) continue;
        circuit.append(build_rotation(layout, static_cast<Axis>(i), layout.rot_controls[i]));
    }

    // Stage 3: translations.
    for (Axis axis : {Axis::Z, Axis::Y, Axis::X})
        circuit.append(build_translation_stage(layout, axis));

    return circuit;
}

}  // namespace qpose
