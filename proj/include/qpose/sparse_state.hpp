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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qpose {

using Amplitude = std::complex<double>;

/// Stored amplitudes smaller than this are dropped. All constructions in this
/// toolkit produce dyadic-rational magnitudes far above the threshold.
inline constexpr double kAmplitudePrune = 1e-14;

/// Norm slack accepted by validation and the tests.
inline constexpr double kNormTolerance = 1e-12;

/// Sparse quantum state: the nonzero computational-basis amplitudes of up to
/// 48 qubits. `terms` is kept sorted by basis index with unique indices and
/// no entry below kAmplitudePrune; every producing operation in this library
/// maintains that representation.
struct SparseState {
    int num_qubits = 0;
    std::vector<std::pair<std::uint64_t, Amplitude>> terms;

    /// Amplitude at `index` (zero when absent). Binary search.
    Amplitude amplitude(std::uint64_t index) const;

    double norm() const;

    /// Checks sortedness, index range, pruning and unit norm; throws
    /// std::invalid_argument on violation.
    void validate() const;
};

/// |index> on `num_qubits` qubits.
SparseState basis_state(int num_qubits, std::uint64_t index);

/// Largest per-index amplitude difference between two states.
double max_amplitude_delta(const SparseState& a, const SparseState& b);

// Text dump: header `state <num_qubits>`, then `<basis-index> <re> <im>` per
// term, indices ascending, 17 significant digits.
void write_state(std::ostream& out, const SparseState& state);
SparseState read_state(std::istream& in);

void save_state_file(const std::string& path, const SparseState& state);
SparseState load_state_file(const std::string& path);

}  // namespace qpose
