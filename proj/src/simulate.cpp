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

#include "qpose/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpose {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_width(const SparseState& state, const Gate& gate) {
    for (int q : gate.controls)
        if (q >= state.num_qubits)
            throw std::invalid_argument("gate control exceeds the state width");
    for (int q : gate.targets)
        if (q >= state.num_qubits)
            throw std::invalid_argument("gate target exceeds the state width");
}

std::uint64_t control_mask(const Gate& gate) {
    std::uint64_t mask = 0;
    for (int q : gate.controls) mask |= std::uint64_t{1} << q;
    return mask;
}

/// Basis-index image under a permutation gate.
std::uint64_t permute_index(std::uint64_t idx, const Gate& gate, std::uint64_t cmask) {
    if ((idx & cmask) != cmask) return idx;
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::MCX:
            return idx ^ (std::uint64_t{1} << gate.targets[0]);
        case GateKind::SWAP:
        case GateKind::CSWAP: {
            const std::uint64_t a = (idx >> gate.targets[0]) & 1;
            const std::uint64_t b = (idx >> gate.targets[1]) & 1;
            if (a == b) return idx;
            return idx ^ (std::uint64_t{1} << gate.targets[0]) ^
                   (std::uint64_t{1} << gate.targets[1]);
        }
        case GateKind::H: break;
    }
    throw std::logic_error("permute_index called with a non-permutation gate");
}

void sort_merge_prune(std::vector<std::pair<std::uint64_t, Amplitude>>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::uint64_t idx = terms[i].first;
        Amplitude sum = terms[i].second;
        for (++i; i < terms.size() && terms[i].first == idx; ++i) sum += terms[i].second;
        if (std::abs(sum) >= kAmplitudePrune) terms[out++] = {idx, sum};
    }
    terms.resize(out);
}

}  // namespace

SparseState apply_gate(const SparseState& state, const Gate& gate) {
    check_width(state, gate);
    SparseState next;
    next.num_qubits = state.num_qubits;

    if (gate.kind == GateKind::H) {
        const std::uint64_t m = std::uint64_t{1} << gate.targets[0];
        next.terms.reserve(state.terms.size() * 2);
        for (const auto& [idx, amp] : state.terms) {
            const Amplitude half = amp * kInvSqrt2;
            // H|0> = (|0>+|1>)/sqrt2, H|1> = (|0>-|1>)/sqrt2
            next.terms.emplace_back(idx & ~m, half);
            next.terms.emplace_back(idx | m, (idx & m) ? -half : half);
        }
        sort_merge_prune(next.terms);
        return next;
    }

    const std::uint64_t cmask = control_mask(gate);
    next.terms.reserve(state.terms.size());
    for (const auto& [idx, amp] : state.terms)
        next.terms.emplace_back(permute_index(idx, gate, cmask), amp);
    // A permutation cannot merge terms, but it can break the ordering.
    if (!std::is_sorted(next.terms.begin(), next.terms.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; }))
        std::sort(next.terms.begin(), next.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return next;
}

SparseState run(const Circuit& circuit, const SparseState& initial) {
    if (circuit.num_qubits != initial.num_qubits)
        throw std::invalid_argument("circuit width " + std::to_string(circuit.num_qubits) +
                                    " does not match state width " +
                                    std::to_string(initial.num_qubits));
    SparseState state = initial;
    for (const Gate& gate : circuit.gates) state = apply_gate(state, gate);
    return state;
}

// ---------------------------------------------------------------------------
// Dense cross-check. Deliberately a from-scratch implementation on a full
// 2^n vector; it shares no gate logic with the sparse path above.
// ---------------------------------------------------------------------------

namespace dense {

using Vector = std::vector<Amplitude>;

bool controls_set(std::uint64_t idx, const std::vector<int>& controls) {
    for (int c : controls)
        if (!((idx >> c) & 1)) return false;
    return true;
}

void apply_h(Vector& v, int q) {
    const std::uint64_t m = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (i & m) continue;
        const Amplitude a0 = v[i];
        const Amplitude a1 = v[i | m];
        v[i] = (a0 + a1) * kInvSqrt2;
        v[i | m] = (a0 - a1) * kInvSqrt2;
    }
}

void apply_flip(Vector& v, const std::vector<int>& controls, int target) {
    const std::uint64_t m = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (i & m) continue;
        if (!controls_set(i, controls)) continue;
        std::swap(v[i], v[i | m]);
    }
}

void apply_swap(Vector& v, const std::vector<int>& controls, int a, int b) {
    const std::uint64_t ma = std::uint64_t{1} << a;
    const std::uint64_t mb = std::uint64_t{1} << b;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (!(i & ma) || (i & mb)) continue;  // visit each pair once, from a=1,b=0
        if (!controls_set(i, controls)) continue;
        std::swap(v[i], v[(i ^ ma) | mb]);
    }
}

}  // namespace dense

SparseState dense_check(const Circuit& circuit, const SparseState& initial) {
    if (circuit.num_qubits != initial.num_qubits)
        throw std::invalid_argument("circuit width does not match state width");
    if (circuit.num_qubits > 20)
        throw std::invalid_argument("dense_check is limited to 20 qubits");

    dense::Vector v(std::uint64_t{1} << circuit.num_qubits);
    for (const auto& [idx, amp] : initial.terms) v[idx] = amp;

    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
                dense::apply_h(v, g.targets[0]);
                break;
            case GateKind::X:
            case GateKind::CX:
            case GateKind::MCX:
                dense::apply_flip(v, g.controls, g.targets[0]);
                break;
            case GateKind::SWAP:
            case GateKind::CSWAP:
                dense::apply_swap(v, g.controls, g.targets[0], g.targets[1]);
                break;
        }
    }

    SparseState out;
    out.num_qubits = circuit.num_qubits;
    for (std::uint64_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) >= kAmplitudePrune) out.terms.emplace_back(i, v[i]);
    return out;
}

}  // namespace qpose
