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

#include "qpose/circuit.hpp"
#include "qpose/sparse_state.hpp"

namespace qpose {

/// Applies one gate and returns the new state; the input is not modified.
/// Permutation gates remap basis indices, H splits each term in two and
/// merges collisions by amplitude addition (pruning below kAmplitudePrune).
SparseState apply_gate(const SparseState& state, const Gate& gate);

/// Left-to-right application of every gate in the circuit.
SparseState run(const Circuit& circuit, const SparseState& initial);

/// Independent dense state-vector execution of the same circuit, for
/// cross-validating the sparse path. Limited to 20 qubits; throws
/// std::invalid_argument beyond that. Shares no gate code with apply_gate.
SparseState dense_check(const Circuit& circuit, const SparseState& initial);

}  // namespace qpose
