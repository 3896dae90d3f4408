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

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>
#include <set>

#include "qpose/builders.hpp"
#include "qpose/encoding.hpp"
#include "qpose/simulate.hpp"
#include "test_support.hpp"

using namespace qpose;
using qpose::testing::branch_patterns;
using qpose::testing::permute_basis;
using qpose::testing::run_gates;

namespace {

std::vector<int> iota_reg(int width, int start = 0) {
    std::vector<int> reg(width);
    std::iota(reg.begin(), reg.end(), start);
    return reg;
}

}  // namespace

TEST_CASE("increment: two-qubit counter") {
    const auto reg = iota_reg(2);
    auto gates = build_increment(reg, 0);
    REQUIRE(gates.size() == 2);
    CHECK(gates[0] == make_cx(0, 1));
    CHECK(gates[1] == make_x(0));

    // full cycle 0 -> 1 -> 2 -> 3 -> 0
    std::uint64_t v = 0;
    std::vector<std::uint64_t> seen;
    for (int i = 0; i < 4; ++i) {
        v = permute_basis(gates, 2, v);
        seen.push_back(v);
    }
    CHECK(seen == std::vector<std::uint64_t>{1, 2, 3, 0});
}

TEST_CASE("increment: width 4 with p=1 adds 2 modulo 16") {
    const auto reg = iota_reg(4);
    auto gates = build_increment(reg, 1);
    for (std::uint64_t v = 0; v < 16; ++v)
        CHECK(permute_basis(gates, 4, v) == (v + 2) % 16);
}

TEST_CASE("increment: extra control gates the shift") {
    const auto reg = iota_reg(3);
    const std::vector<int> control{3};
    auto gates = build_increment(reg, 0, control);
    for (std::uint64_t v = 0; v < 8; ++v) {
        CHECK(permute_basis(gates, 4, v) == v);                          // control off
        CHECK(permute_basis(gates, 4, v | 8) == (((v + 1) % 8) | 8));    // control on
    }
}

TEST_CASE("increment: exhaustive truth tables up to width 4") {
    for (int n = 1; n <= 4; ++n) {
        const auto reg = iota_reg(n);
        const std::uint64_t side = std::uint64_t{1} << n;
        for (int p = 0; p < n; ++p) {
            auto gates = build_increment(reg, p);
            CHECK(gates.size() == static_cast<std::size_t>(n - p));
            for (std::uint64_t v = 0; v < side; ++v)
                CHECK(permute_basis(gates, n, v) == (v + (std::uint64_t{1} << p)) % side);
        }
    }
}

TEST_CASE("increment: composing powers is additive") {
    for (int n = 2; n <= 5; ++n) {
        const auto reg = iota_reg(n);
        const std::uint64_t side = std::uint64_t{1} << n;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto gates = build_increment(reg, a);
                auto second = build_increment(reg, b);
                gates.insert(gates.end(), second.begin(), second.end());
                const std::uint64_t shift = (std::uint64_t{1} << a) + (std::uint64_t{1} << b);
                for (std::uint64_t v = 0; v < side; ++v)
                    CHECK(permute_basis(gates, n, v) == (v + shift) % side);
            }
    }
}

TEST_CASE("increment rejects powers at or above the width") {
    const auto reg = iota_reg(3);
    CHECK_THROWS_AS(build_increment(reg, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_increment(reg, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_increment(std::vector<int>{}, 0), std::invalid_argument);
}

TEST_CASE("translation stage: no ancillas means no gates") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0});
    CHECK(build_translation_stage(layout, Axis::Z).empty());
}

TEST_CASE("translation stage: m=2 on width 4 spreads over four shifts") {
    RegisterLayout layout = make_layout(GridSpec{4, 0, 0, 1.0}, {2, 0, 0});
    auto gates = build_translation_stage(layout, Axis::Z);
    SparseState state = run_gates(gates, layout.total_qubits, 0);

    REQUIRE(state.terms.size() == 4);
    std::set<std::uint64_t> positions;
    for (const auto& [idx, amp] : state.terms) {
        CHECK(std::abs(std::abs(amp) - 0.5) < 1e-12);
        const std::uint64_t d = extract_bits(idx, layout.t_z);
        const std::uint64_t pos = extract_bits(idx, layout.pos_z);
        CHECK(pos == d);  // started from v = 0
        positions.insert(pos);
    }
    CHECK(positions == std::set<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("translation stage: wraparound from a nonzero start") {
    RegisterLayout layout = make_layout(GridSpec{2, 0, 0, 1.0}, {2, 0, 0});
    auto gates = build_translation_stage(layout, Axis::Z);
    const std::uint64_t start = 3;
    SparseState state = run_gates(gates, layout.total_qubits, start);

    REQUIRE(state.terms.size() == 4);
    for (const auto& [idx, amp] : state.terms) {
        const std::uint64_t d = extract_bits(idx, layout.t_z);
        CHECK(extract_bits(idx, layout.pos_z) == (start + d) % 4);
    }
}

TEST_CASE("translation stages on three axes: 2^(mz+my+mx) branches") {
    RegisterLayout layout = make_layout(GridSpec{3, 3, 3, 1.0}, {3, 3, 3});
    Circuit circuit(layout.total_qubits);
    for (Axis axis : {Axis::Z, Axis::Y, Axis::X})
        circuit.append(build_translation_stage(layout, axis));
    SparseState state = run(circuit, basis_state(layout.total_qubits, 0));
    CHECK(state.terms.size() == 512);
    CHECK(branch_patterns(state, layout.ancilla_mask()).size() == 512);
}

TEST_CASE("coordinate swap: basis action and inactive control") {
    // bits (0, 2, 2): y occupies qubits 0..1, x occupies 2..3
    RegisterLayout layout = make_layout(GridSpec{0, 2, 2, 1.0}, {0, 0, 0});
    auto gates = build_coord_swap(layout.pos_x, layout.pos_y);
    REQUIRE(gates.size() == 2);

    const std::uint64_t in = layout.position_index({0, 2, 1});   // y=2, x=1
    CHECK(permute_basis(gates, layout.total_qubits, in) ==
          layout.position_index({0, 1, 2}));                     // y=1, x=2

    // controlled variant, control stuck at 0: identity on every basis state
    Circuit controlled(layout.total_qubits + 1);
    controlled.append(build_coord_swap(layout.pos_x, layout.pos_y, layout.total_qubits));
    for (std::uint64_t v = 0; v < 16; ++v)
        CHECK(permute_basis(controlled.gates, controlled.num_qubits, v) == v);
}

TEST_CASE("coordinate swap: superposed control splits the pose") {
    // width-3 registers, single cell (x=5, y=1)
    RegisterLayout layout = make_layout(GridSpec{0, 3, 3, 1.0}, {0, 0, 0});
    const int control = layout.total_qubits;

    Circuit circuit(layout.total_qubits + 1);
    circuit.append(make_h(control));
    circuit.append(build_coord_swap(layout.pos_x, layout.pos_y, control));

    SparseState state =
        run(circuit, basis_state(circuit.num_qubits, layout.position_index({0, 1, 5})));
    REQUIRE(state.terms.size() == 2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(state.amplitude(layout.position_index({0, 1, 5})).real() - inv_sqrt2) < 1e-12);
    CHECK(std::abs(state.amplitude(layout.position_index({0, 5, 1}) |
                                   (std::uint64_t{1} << control))
                       .real() -
                   inv_sqrt2) < 1e-12);
}

TEST_CASE("coordinate swap: applying twice is the identity") {
    RegisterLayout layout = make_layout(GridSpec{0, 3, 3, 1.0}, {0, 0, 0});
    auto gates = build_coord_swap(layout.pos_x, layout.pos_y);
    auto twice = gates;
    twice.insert(twice.end(), gates.begin(), gates.end());
    for (std::uint64_t v = 0; v < 64; ++v)
        CHECK(permute_basis(twice, layout.total_qubits, v) == v);
}

TEST_CASE("coordinate swap rejects unequal widths") {
    CHECK_THROWS_AS(build_coord_swap(iota_reg(2), iota_reg(3, 2)), std::invalid_argument);
}

TEST_CASE("rotation: convention on the 4x4 plane") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0});

    SUBCASE("z: (x=0, y=0) -> (x=3, y=0)") {
        auto gates = build_rotation(layout, Axis::Z);
        CHECK(permute_basis(gates, layout.total_qubits, layout.position_index({1, 0, 0})) ==
              layout.position_index({1, 0, 3}));
    }
    SUBCASE("y: (z=1, x=2) -> (z=1, x=1)") {
        auto gates = build_rotation(layout, Axis::Y);
        CHECK(permute_basis(gates, layout.total_qubits, layout.position_index({1, 3, 2})) ==
              layout.position_index({1, 3, 1}));
    }
    SUBCASE("x: (y=0, z=3) -> (y=0, z=0)") {
        auto gates = build_rotation(layout, Axis::X);
        CHECK(permute_basis(gates, layout.total_qubits, layout.position_index({3, 0, 2})) ==
              layout.position_index({0, 0, 2}));
    }
}

TEST_CASE("rotation: order four on every basis state") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0});
    for (Axis axis : {Axis::Z, Axis::Y, Axis::X}) {
        auto once = build_rotation(layout, axis);
        std::vector<Gate> four;
        for (int i = 0; i < 4; ++i) four.insert(four.end(), once.begin(), once.end());
        bool moved_something = false;
        for (std::uint64_t v = 0; v < 64; ++v) {
            CHECK(permute_basis(four, layout.total_qubits, v) == v);
            moved_something |= permute_basis(once, layout.total_qubits, v) != v;
        }
        CHECK(moved_something);  // a rotation is not the identity
    }
}

TEST_CASE("rotation: inactive control leaves every basis state alone") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0});
    Circuit circuit(layout.total_qubits + 1);
    circuit.append(build_rotation(layout, Axis::Z, layout.total_qubits));
    for (std::uint64_t v = 0; v < 64; ++v)
        CHECK(permute_basis(circuit.gates, circuit.num_qubits, v) == v);
}

TEST_CASE("rotation rejects non-square planes") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 1, 1.0}, {0, 0, 0});
    CHECK_THROWS_AS(build_rotation(layout, Axis::Z), std::invalid_argument);   // (x,y) plane
    CHECK_THROWS_AS(build_rotation(layout, Axis::Y), std::invalid_argument);   // (z,x) plane
    CHECK_NOTHROW(build_rotation(layout, Axis::X));                            // (y,z) square
}

TEST_CASE("every construction is a basis permutation") {
    // apply each gate list to all basis states of its system and check
    // bijectivity
    auto check_bijective = [](const std::vector<Gate>& gates, int num_qubits) {
        std::set<std::uint64_t> images;
        const std::uint64_t dim = std::uint64_t{1} << num_qubits;
        for (std::uint64_t v = 0; v < dim; ++v)
            CHECK(images.insert(permute_basis(gates, num_qubits, v)).second);
        CHECK(images.size() == dim);
    };

    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0});
    check_bijective(build_increment(iota_reg(6), 2), 6);
    check_bijective(build_increment(iota_reg(5), 0, std::vector<int>{5}), 6);
    check_bijective(build_coord_swap(layout.pos_x, layout.pos_y), 6);
    for (Axis axis : {Axis::Z, Axis::Y, Axis::X})
        check_bijective(build_rotation(layout, axis), 6);
}

TEST_CASE("unified circuit: all stages disabled is the empty circuit") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0});
    Circuit circuit = build_unified(layout);
    CHECK(circuit.gates.empty());

    SparseState state = run(circuit, basis_state(layout.total_qubits, 9));
    REQUIRE(state.terms.size() == 1);
    CHECK(state.terms[0].first == 9);
}

TEST_CASE("unified circuit: swaps only yields eight branches") {
    RegisterLayout layout =
        make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0}, StageOptions::all_swaps());
    Circuit circuit = build_unified(layout);
    SparseState state =
        run(circuit, basis_state(layout.total_qubits, layout.position_index({1, 2, 3})));
    CHECK(branch_patterns(state, layout.ancilla_mask()).size() == 8);
}

TEST_CASE("unified circuit: rotations only yields eight branches") {
    RegisterLayout layout =
        make_layout(GridSpec{2, 2, 2, 1.0}, {0, 0, 0}, StageOptions::all_rotations());
    Circuit circuit = build_unified(layout);
    SparseState state =
        run(circuit, basis_state(layout.total_qubits, layout.position_index({1, 2, 3})));
    CHECK(branch_patterns(state, layout.ancilla_mask()).size() == 8);
}

TEST_CASE("unified circuit: translations plus all six controls give 4096 branches") {
    RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, {2, 2, 2}, StageOptions::all());
    Circuit circuit = build_unified(layout);

    const std::size_t h_gates = resource_counts(circuit).h;
    CHECK(h_gates == 12);  // 6 translation + 6 symmetry controls

    SparseState state = run(circuit, basis_state(layout.total_qubits, 0));
    CHECK(branch_patterns(state, layout.ancilla_mask()).size() == 4096);
    CHECK(state.terms.size() == 4096);

    // uniformity: single-cell input, so every amplitude is 2^(-h/2)
    const double expect = std::pow(2.0, -static_cast<double>(h_gates) / 2.0);
    for (const auto& [idx, amp] : state.terms)
        CHECK(std::abs(std::abs(amp) - expect) < 1e-12);
}

TEST_CASE("unified circuit: shared controls drive swap and rotation together") {
    StageOptions shared = StageOptions::all();
    shared.shared_controls = true;
    RegisterLayout layout = make_layout(GridSpec{1, 1, 1, 1.0}, {0, 0, 0}, shared);

    Circuit circuit = build_unified(layout);
    CHECK(resource_counts(circuit).h == 3);  // one Hadamard per shared control

    OccupancyGrid grid(layout.spec);
    grid.set({0, 0, 1}, 1.0);
    SparseState state = run(circuit, encode_state(grid, layout));
    auto poses = decode_state(state, layout, 1.0);
    CHECK(poses.size() == 8);
    for (const auto& [setting, pose] : poses)
        CHECK(setting.swaps == setting.rots);
}

TEST_CASE("unified circuit: branch count is 2^(hadamard count)") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        StageOptions opt;
        for (int i = 0; i < 3; ++i) {
            opt.swap_pairs[i] = rng() & 1;
            opt.rot_axes[i] = rng() & 1;
        }
        std::array<int, 3> t{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                             static_cast<int>(rng() % 3)};
        RegisterLayout layout = make_layout(GridSpec{2, 2, 2, 1.0}, t, opt);
        Circuit circuit = build_unified(layout);
        SparseState state = run(circuit, basis_state(layout.total_qubits, 0));
        CHECK(branch_patterns(state, layout.ancilla_mask()).size() ==
              std::uint64_t{1} << resource_counts(circuit).h);
    }
}
