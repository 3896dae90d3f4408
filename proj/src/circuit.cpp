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

#include "qpose/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "text_io.hpp"

namespace qpose {

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::CX: return "cx";
        case GateKind::MCX: return "mcx";
        case GateKind::SWAP: return "swap";
        case GateKind::CSWAP: return "cswap";
    }
    return "?";
}

namespace {

Gate checked(Gate g) {
    std::set<int> seen;
    for (int q : g.controls) {
        if (q < 0) throw std::invalid_argument("negative qubit index");
        if (!seen.insert(q).second)
            throw std::invalid_argument("duplicate qubit in gate operands");
    }
    for (int q : g.targets) {
        if (q < 0) throw std::invalid_argument("negative qubit index");
        if (!seen.insert(q).second)
            throw std::invalid_argument("controls and targets must be disjoint");
    }
    return g;
}

}  // namespace

Gate make_h(int target) { return checked({GateKind::H, {}, {target}}); }

Gate make_x(int target) { return checked({GateKind::X, {}, {target}}); }

Gate make_cx(int control, int target) {
    return checked({GateKind::CX, {control}, {target}});
}

Gate make_mcx(std::vector<int> controls, int target) {
    if (controls.size() < 2)
        throw std::invalid_argument("mcx needs at least two controls");
    return checked({GateKind::MCX, std::move(controls), {target}});
}

Gate make_swap(int a, int b) { return checked({GateKind::SWAP, {}, {a, b}}); }

Gate make_cswap(int control, int a, int b) {
    return checked({GateKind::CSWAP, {control}, {a, b}});
}

Gate make_controlled_x(std::vector<int> controls, int target) {
    if (controls.empty()) return make_x(target);
    if (controls.size() == 1) return make_cx(controls[0], target);
    return make_mcx(std::move(controls), target);
}

Gate make_controlled_swap(int control, int a, int b) {
    return control < 0 ? make_swap(a, b) : make_cswap(control, a, b);
}

void Circuit::append(Gate gate) {
    for (int q : gate.controls)
        if (q >= num_qubits)
            throw std::invalid_argument("gate control " + std::to_string(q) +
                                        " exceeds circuit width " + std::to_string(num_qubits));
    for (int q : gate.targets)
        if (q >= num_qubits)
            throw std::invalid_argument("gate target " + std::to_string(q) +
                                        " exceeds circuit width " + std::to_string(num_qubits));
    gates.push_back(std::move(gate));
}

void Circuit::append(std::vector<Gate> more) {
    for (Gate& g : more) append(std::move(g));
}

ResourceCounts resource_counts(const Circuit& circuit) {
    ResourceCounts rc;
    rc.num_qubits = circuit.num_qubits;
    rc.total = circuit.gates.size();
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H: ++rc.h; break;
            case GateKind::X: ++rc.x; break;
            case GateKind::CX: ++rc.cx; break;
            case GateKind::MCX:
                ++rc.mcx;
                rc.max_mcx_controls = std::max(rc.max_mcx_controls, g.controls.size());
                break;
            case GateKind::SWAP: ++rc.swap; break;
            case GateKind::CSWAP: ++rc.cswap; break;
        }
    }
    return rc;
}

std::string format_resource_counts(const ResourceCounts& rc) {
    std::string s;
    s += "qubits " + std::to_string(rc.num_qubits) + "\n";
    s += "gates " + std::to_string(rc.total) + "\n";
    s += "h " + std::to_string(rc.h) + "\n";
    s += "x " + std::to_string(rc.x) + "\n";
    s += "cx " + std::to_string(rc.cx) + "\n";
    s += "mcx " + std::to_string(rc.mcx) + "\n";
    s += "swap " + std::to_string(rc.swap) + "\n";
    s += "cswap " + std::to_string(rc.cswap) + "\n";
    s += "max_mcx_controls " + std::to_string(rc.max_mcx_controls) + "\n";
    return s;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
    out << "qubits " << circuit.num_qubits << '\n';
    for (const Gate& g : circuit.gates) {
        out << gate_name(g.kind);
        for (int q : g.controls) out << ' ' << q;
        for (int q : g.targets) out << ' ' << q;
        out << '\n';
    }
}

Circuit read_circuit(std::istream& in) {
    std::vector<std::string> tok;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, tok, line_no))
        throw std::runtime_error("circuit file is empty");
    if (tok.size() != 2 || tok[0] != "qubits")
        detail::parse_fail(line_no, "expected header 'qubits <n>'");

    Circuit circuit(detail::parse_int(tok[1], line_no));
    if (circuit.num_qubits < 0)
        detail::parse_fail(line_no, "qubit count must be nonnegative");

    while (detail::next_content_line(in, tok, line_no)) {
        const std::string& op = tok[0];
        std::vector<int> idx;
        for (std::size_t i = 1; i < tok.size(); ++i)
            idx.push_back(detail::parse_int(tok[i], line_no));
        try {
            if (op == "h" && idx.size() == 1) {
                circuit.append(make_h(idx[0]));
            } else if (op == "x" && idx.size() == 1) {
                circuit.append(make_x(idx[0]));
            } else if (op == "cx" && idx.size() == 2) {
                circuit.append(make_cx(idx[0], idx[1]));
            } else if (op == "mcx" && idx.size() >= 3) {
                int target = idx.back();
                idx.pop_back();
                circuit.append(make_mcx(std::move(idx), target));
            } else if (op == "swap" && idx.size() == 2) {
                circuit.append(make_swap(idx[0], idx[1]));
            } else if (op == "cswap" && idx.size() == 3) {
                circuit.append(make_cswap(idx[0], idx[1], idx[2]));
            } else {
                detail::parse_fail(line_no, "unknown gate line '" + op + "' with " +
                                                std::to_string(idx.size()) + " operands");
            }
        } catch (const std::invalid_argument& e) {
            detail::parse_fail(line_no, e.what());
        }
    }
    return circuit;
}

void save_circuit_file(const std::string& path, const Circuit& circuit) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_circuit(out, circuit);
}

Circuit load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_circuit(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_qasm(std::ostream& out, const Circuit& circuit) {
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits << "];\n";
    auto wire = [](int q) { return "q[" + std::to_string(q) + "]"; };
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
                out << "h " << wire(g.targets[0]) << ";\n";
                break;
            case GateKind::X:
                out << "x " << wire(g.targets[0]) << ";\n";
                break;
            case GateKind::CX:
                out << "cx " << wire(g.controls[0]) << "," << wire(g.targets[0]) << ";\n";
                break;
            case GateKind::MCX:
                if (g.controls.size() == 2) {
                    out << "ccx " << wire(g.controls[0]) << "," << wire(g.controls[1]) << ","
                        << wire(g.targets[0]) << ";\n";
                } else {
                    // qelib1 has no X with more than two controls; keep the
                    // abstract mnemonic as an annotation.
                    out << "// mcx";
                    for (int q : g.controls) out << ' ' << wire(q);
                    out << ' ' << wire(g.targets[0]) << '\n';
                }
                break;
            case GateKind::SWAP:
                out << "swap " << wire(g.targets[0]) << "," << wire(g.targets[1]) << ";\n";
                break;
            case GateKind::CSWAP:
                out << "cswap " << wire(g.controls[0]) << "," << wire(g.targets[0]) << ","
                    << wire(g.targets[1]) << ";\n";
                break;
        }
    }
}

}  // namespace qpose
