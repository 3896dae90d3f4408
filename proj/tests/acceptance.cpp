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

// Acceptance suite: one self-contained check per release criterion, each
// printed as a single pass/fail line. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qpose/builders.hpp"
#include "qpose/encoding.hpp"
#include "qpose/oracle.hpp"
#include "qpose/simulate.hpp"
#include "qpose/verify.hpp"
#include "test_support.hpp"

using namespace qpose;
using qpose::testing::Rng;

namespace {

std::vector<int> iota_reg(int width) {
    std::vector<int> reg(width);
    for (int i = 0; i < width; ++i) reg[i] = i;
    return reg;
}

std::uint64_t permute(const std::vector<Gate>& gates, int n, std::uint64_t v) {
    return qpose::testing::permute_basis(gates, n, v);
}

// 1. Incrementer truth tables: every width n <= 6, every p < n, with and
//    without one extra control, maps each v to (v + 2^p) mod 2^n exactly.
bool criterion_increment_truth_tables(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        const auto reg = iota_reg(n);
        const std::uint64_t side = std::uint64_t{1} << n;
        for (int p = 0; p < n; ++p) {
            const std::uint64_t shift = std::uint64_t{1} << p;

            const auto plain = build_increment(reg, p);
            for (std::uint64_t v = 0; v < side; ++v) {
                if (permute(plain, n, v) != (v + shift) % side) {
                    detail = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " v=" + std::to_string(v);
                    return false;
                }
            }

            const std::vector<int> control{n};
            const auto gated = build_increment(reg, p, control);
            const std::uint64_t cbit = side;
            for (std::uint64_t v = 0; v < side; ++v) {
                if (permute(gated, n + 1, v) != v) {
                    detail = "control off must be identity, n=" + std::to_string(n);
                    return false;
                }
                if (permute(gated, n + 1, v | cbit) != (((v + shift) % side) | cbit)) {
                    detail = "control on failed, n=" + std::to_string(n) +
                             " p=" + std::to_string(p) + " v=" + std::to_string(v);
                    return false;
                }
            }
        }
    }
    return true;
}

// 2. Translation-stage branch law: 16x16x16 grid with mz=my=mx=2 produces
//    exactly 2^6 = 64 branches of probability mass 1/64 within 1e-12.
bool criterion_translation_branch_law(std::string& detail) {
    OccupancyGrid grid(GridSpec{4, 4, 4, 1.0});
    grid.set({3, 7, 11}, 1.0);
    grid.set({0, 2, 5}, -2.0);
    grid.set({9, 1, 14}, 0.5);
    RegisterLayout layout = make_layout(grid.spec(), {2, 2, 2});

    SparseState state = run(build_unified(layout), encode_state(grid, layout));

    std::map<std::uint64_t, double> mass;
    for (const auto& [idx, amp] : state.terms) mass[idx & layout.ancilla_mask()] += std::norm(amp);

    if (mass.size() != 64) {
        detail = "expected 64 branches, got " + std::to_string(mass.size());
        return false;
    }
    for (const auto& [pattern, m] : mass) {
        if (std::abs(m - 1.0 / 64.0) > 1e-12) {
            detail = "branch mass " + std::to_string(m) + " deviates from 1/64";
            return false;
        }
    }
    return true;
}

// 3. Eight-fold symmetry ensembles: swap-only and rotation-only circuits
//    yield exactly 8 branches whose grids match the classical oracle.
bool criterion_eightfold_ensembles(std::string& detail) {
    OccupancyGrid grid(GridSpec{2, 2, 2, 1.0});
    grid.set({0, 1, 2}, 1.0);
    grid.set({1, 3, 0}, -2.0);
    grid.set({2, 0, 3}, 4.0);

    for (const StageOptions& opt : {StageOptions::all_swaps(), StageOptions::all_rotations()}) {
        RegisterLayout layout = make_layout(grid.spec(), {0, 0, 0}, opt);
        SparseState state = run(build_unified(layout), encode_state(grid, layout));
        const auto decoded = decode_state(state, layout, grid.max_abs_weight());
        const PoseSet oracle = enumerate_poses(grid, layout);

        const char* stage = opt.swap_pairs[0] ? "swap-only" : "rotation-only";
        if (decoded.size() != 8 || oracle.size() != 8) {
            detail = std::string(stage) + ": expected 8 branches, got " +
                     std::to_string(decoded.size()) + " simulated / " +
                     std::to_string(oracle.size()) + " enumerated";
            return false;
        }
        const VerificationReport report = compare_ensembles(decoded, oracle, 1e-12);
        if (!report.passed) {
            detail = std::string(stage) + ": " + report.summary_line();
            return false;
        }
    }
    return true;
}

// 4. End-to-end equivalence on 200 randomized cases: grids up to 8x8x8 with
//    up to 16 occupied cells and up to 12 ancilla qubits, random stage
//    enables; every verification passes within 1e-9.
bool criterion_randomized_equivalence(std::string& detail) {
    Rng rng(0x9E3779B97F4A7C15ull);
    int cases = 0;
    while (cases < 200) {
        GridSpec spec{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                      1 + static_cast<int>(rng() % 3), 1.0};

        StageOptions opt;
        opt.shared_controls = (rng() % 8) == 0;
        auto square = [&](int a, int b) { return spec.bits(a) == spec.bits(b); };
        const bool planes[3] = {square(2, 1), square(1, 0), square(0, 2)};  // xy, yz, zx
        const bool rot_planes[3] = {planes[0], planes[2], planes[1]};       // z, y, x
        for (int i = 0; i < 3; ++i) {
            if (opt.shared_controls) {
                // a shared control drives swap pair i and rotation axis i
                const bool ok = planes[i] && rot_planes[i];
                opt.swap_pairs[i] = opt.rot_axes[i] = ok && (rng() & 1);
            } else {
                opt.swap_pairs[i] = planes[i] && (rng() & 1);
                opt.rot_axes[i] = rot_planes[i] && (rng() & 1);
            }
        }

        std::array<int, 3> t{};
        for (int i = 0; i < 3; ++i) t[i] = static_cast<int>(rng() % (spec.bits(i) + 1));

        // stay within the 12-ancilla budget by shrinking translation registers
        auto ancillas = [&]() {
            int n = t[0] + t[1] + t[2];
            for (int i = 0; i < 3; ++i) {
                if (opt.rot_axes[i]) ++n;
                if (opt.swap_pairs[i] && !opt.shared_controls) ++n;
            }
            return n;
        };
        for (int i = 0; ancillas() > 12 && i < 3; ++i) t[i] = 0;

        OccupancyGrid grid = qpose::testing::random_grid(rng, spec, 16);
        RegisterLayout layout = make_layout(spec, t, opt);

        const VerificationReport report = verify(grid, layout);
        if (!report.passed || report.max_weight_deviation >= 1e-9) {
            detail = "case " + std::to_string(cases) + ": " + report.summary_line();
            return false;
        }
        ++cases;
    }
    return true;
}

// 5. Group laws at the circuit level, exhaustive over all basis states for
//    per-axis widths up to 3: rotations have order 4, swaps order 2, and
//    translation circuits compose additively modulo the side length.
bool criterion_group_laws(std::string& detail) {
    for (int bits = 1; bits <= 3; ++bits) {
        RegisterLayout layout = make_layout(GridSpec{bits, bits, bits, 1.0}, {0, 0, 0});
        const std::uint64_t dim = std::uint64_t{1} << layout.total_qubits;

        for (Axis axis : {Axis::Z, Axis::Y, Axis::X}) {
            const auto once = build_rotation(layout, axis);
            std::vector<Gate> four;
            for (int i = 0; i < 4; ++i) four.insert(four.end(), once.begin(), once.end());
            for (std::uint64_t v = 0; v < dim; ++v) {
                if (permute(four, layout.total_qubits, v) != v) {
                    detail = "rotation order 4 failed, bits=" + std::to_string(bits);
                    return false;
                }
            }
        }

        const std::array<std::pair<const std::vector<int>*, const std::vector<int>*>, 3> pairs{
            {{&layout.pos_x, &layout.pos_y},
             {&layout.pos_y, &layout.pos_z},
             {&layout.pos_z, &layout.pos_x}}};
        for (const auto& [a, b] : pairs) {
            auto twice = build_coord_swap(*a, *b);
            const auto once = twice;
            twice.insert(twice.end(), once.begin(), once.end());
            for (std::uint64_t v = 0; v < dim; ++v) {
                if (permute(twice, layout.total_qubits, v) != v) {
                    detail = "swap order 2 failed, bits=" + std::to_string(bits);
                    return false;
                }
            }
        }

        const auto reg = iota_reg(bits);
        const std::uint64_t side = std::uint64_t{1} << bits;
        for (int a = 0; a < bits; ++a)
            for (int b = 0; b < bits; ++b) {
                auto composed = build_increment(reg, a);
                const auto second = build_increment(reg, b);
                composed.insert(composed.end(), second.begin(), second.end());
                const std::uint64_t shift = (std::uint64_t{1} << a) + (std::uint64_t{1} << b);
                for (std::uint64_t v = 0; v < side; ++v) {
                    if (permute(composed, bits, v) != (v + shift) % side) {
                        detail = "translation additivity failed, bits=" + std::to_string(bits);
                        return false;
                    }
                }
            }
    }
    return true;
}

// 6. Sparse/dense simulator agreement on 100 random circuits of up to 16
//    qubits and 200 gates: per-amplitude deviation below 1e-10.
bool criterion_sparse_dense_agreement(std::string& detail) {
    Rng rng(0xC0FFEE123456789ull);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 13);
        const int gates = 100 + static_cast<int>(rng() % 101);
        const Circuit circuit = qpose::testing::random_circuit(rng, n, gates);
        const SparseState initial = basis_state(n, rng() % (std::uint64_t{1} << n));

        const double dev = max_amplitude_delta(run(circuit, initial), dense_check(circuit, initial));
        if (dev >= 1e-10) {
            detail = "trial " + std::to_string(trial) + ": deviation " + std::to_string(dev);
            return false;
        }
    }
    return true;
}

// 7. Configuration counting: six degrees of freedom at one hundred values
//    each give exactly 10^12.
bool criterion_configuration_count(std::string& detail) {
    const std::vector<std::uint64_t> dof{100, 100, 100, 100, 100, 100};
    const BigInt expect("1000000000000");
    if (count_configurations(dof) != expect) {
        detail = "got " + count_configurations(dof).str();
        return false;
    }
    return true;
}

// 8. Resource formula: the incrementer emits exactly width - p gates, all of
//    them X/CX/MCX, for 1000 random (width, p) pairs.
bool criterion_resource_formula(std::string& detail) {
    Rng rng(0xDEADBEEFull);
    for (int trial = 0; trial < 1000; ++trial) {
        const int width = 1 + static_cast<int>(rng() % 16);
        const int p = static_cast<int>(rng() % width);
        const auto gates = build_increment(iota_reg(width), p);
        if (gates.size() != static_cast<std::size_t>(width - p)) {
            detail = "width=" + std::to_string(width) + " p=" + std::to_string(p) + " emitted " +
                     std::to_string(gates.size()) + " gates";
            return false;
        }
        for (const Gate& g : gates) {
            if (g.kind != GateKind::X && g.kind != GateKind::CX && g.kind != GateKind::MCX) {
                detail = "non-MCX-family gate in the cascade";
                return false;
            }
        }
    }
    return true;
}

struct Criterion {
    const char* label;
    std::function<bool(std::string&)> check;
    double budget_seconds;  // 0 = no runtime requirement
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"incrementer truth tables exact for all n<=6, p<n, with/without control",
         criterion_increment_truth_tables, 1.0},
        {"translation stage on 16x16x16, m=2 per axis: 64 branches of mass 1/64 (1e-12)",
         criterion_translation_branch_law, 1.0},
        {"swap-only and rotation-only ensembles: 8 branches matching the oracle",
         criterion_eightfold_ensembles, 0.0},
        {"200 randomized end-to-end equivalence cases within 1e-9",
         criterion_randomized_equivalence, 60.0},
        {"group laws: rotation order 4, swap order 2, additive translations",
         criterion_group_laws, 0.0},
        {"sparse/dense agreement on 100 random circuits within 1e-10",
         criterion_sparse_dense_agreement, 0.0},
        {"configuration count: six DOF at 100 values each equals 10^12",
         criterion_configuration_count, 0.0},
        {"resource formula: increment emits width-p MCX-family gates (1000 samples)",
         criterion_resource_formula, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& criterion = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        if (ok && criterion.budget_seconds > 0.0 && seconds > criterion.budget_seconds) {
            ok = false;
            detail = "exceeded the " + std::to_string(criterion.budget_seconds) + " s budget";
        }

        std::printf("[%s] %zu. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criterion.label,
                    seconds, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }

    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
