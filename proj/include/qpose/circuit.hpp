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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qpose {

/// The fixed gate set. Everything except H maps computational basis states
/// to computational basis states.
enum class GateKind { H, X, CX, MCX, SWAP, CSWAP };

const char* gate_name(GateKind kind);

/// One gate application. Controls are empty for H/X/SWAP, exactly one for
/// CX/CSWAP and at least two for MCX; targets hold one qubit (H/X/CX/MCX) or
/// the swapped pair (SWAP/CSWAP). Use the factory functions below, which
/// enforce those shapes.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> controls;
    std::vector<int> targets;

    friend bool operator==(const Gate&, const Gate&) = default;
};

Gate make_h(int target);
Gate make_x(int target);
Gate make_cx(int control, int target);
Gate make_mcx(std::vector<int> controls, int target);
Gate make_swap(int a, int b);
Gate make_cswap(int control, int a, int b);

/// X, CX or MCX depending on how many controls are supplied.
Gate make_controlled_x(std::vector<int> controls, int target);

/// SWAP or CSWAP depending on whether a control is supplied (-1 = none).
Gate make_controlled_swap(int control, int a, int b);

/// Ordered gate list over a fixed number of qubit wires.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : num_qubits(n) {}

    /// Appends after checking every index against num_qubits.
    void append(Gate gate);
    void append(std::vector<Gate> more);
};

struct ResourceCounts {
    int num_qubits = 0;
    std::size_t total = 0;
    std::size_t h = 0;
    std::size_t x = 0;
    std::size_t cx = 0;
    std::size_t mcx = 0;
    std::size_t swap = 0;
    std::size_t cswap = 0;
    std::size_t max_mcx_controls = 0;

    friend bool operator==(const ResourceCounts&, const ResourceCounts&) = default;
};

ResourceCounts resource_counts(const Circuit& circuit);

/// Renders the counts one `<name> <value>` per line, matching `qpose stats`.
std::string format_resource_counts(const ResourceCounts& counts);

// Line-based text format: header `qubits <n>`, then one gate per line using
// lowercase mnemonics (`h`, `x`, `cx`, `mcx`, `swap`, `cswap`) and decimal
// qubit indices; for mcx the target comes last. `#` starts a comment.
void write_circuit(std::ostream& out, const Circuit& circuit);
Circuit read_circuit(std::istream& in);

void save_circuit_file(const std::string& path, const Circuit& circuit);
Circuit load_circuit_file(const std::string& path);

/// OpenQASM 2.0 export. MCX with two controls becomes `ccx`; wider MCX gates
/// are emitted as comment-annotated `// mcx ...` lines since qelib1 has no
/// multi-controlled X, so such files are not executable on backends lacking
/// that gate.
void write_qasm(std::ostream& out, const Circuit& circuit);

}  // namespace qpose
