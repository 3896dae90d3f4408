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

#include "qpose/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "text_io.hpp"

namespace qpose {

Amplitude SparseState::amplitude(std::uint64_t index) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), index,
                               [](const auto& term, std::uint64_t idx) { return term.first < idx; });
    if (it != terms.end() && it->first == index) return it->second;
    return {};
}

double SparseState::norm() const {
    double s = 0.0;
    for (const auto& [idx, amp] : terms) s += std::norm(amp);
    return std::sqrt(s);
}

void SparseState::validate() const {
    if (num_qubits < 0 || num_qubits > 48)
        throw std::invalid_argument("states are limited to 48 qubits");
    const std::uint64_t limit =
        num_qubits == 0 ? 1 : (std::uint64_t{1} << num_qubits);
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto& [idx, amp] : terms) {
        if (idx >= limit)
            throw std::invalid_argument("basis index " + std::to_string(idx) +
                                        " exceeds the qubit count");
        if (!first && idx <= prev)
            throw std::invalid_argument("terms must be strictly ascending by basis index");
        if (std::abs(amp) < kAmplitudePrune)
            throw std::invalid_argument("stored amplitude below the pruning threshold");
        prev = idx;
        first = false;
    }
    if (std::abs(norm() - 1.0) > kNormTolerance)
        throw std::invalid_argument("state is not normalized");
}

SparseState basis_state(int num_qubits, std::uint64_t index) {
    SparseState state;
    state.num_qubits = num_qubits;
    state.terms.emplace_back(index, Amplitude{1.0, 0.0});
    state.validate();
    return state;
}

double max_amplitude_delta(const SparseState& a, const SparseState& b) {
    double dev = 0.0;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
            dev = std::max(dev, std::abs(ia->second));
            ++ia;
        } else if (ia == a.terms.end() || ib->first < ia->first) {
            dev = std::max(dev, std::abs(ib->second));
            ++ib;
        } else {
            dev = std::max(dev, std::abs(ia->second - ib->second));
            ++ia;
            ++ib;
        }
    }
    return dev;
}

void write_state(std::ostream& out, const SparseState& state) {
    out << "state " << state.num_qubits << '\n';
    for (const auto& [idx, amp] : state.terms) {
        out << idx << ' ' << detail::format_double(amp.real()) << ' '
            << detail::format_double(amp.imag()) << '\n';
    }
}

SparseState read_state(std::istream& in) {
    std::vector<std::string> tok;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, tok, line_no))
        throw std::runtime_error("state file is empty");
    if (tok.size() != 2 || tok[0] != "state")
        detail::parse_fail(line_no, "expected header 'state <num_qubits>'");

    SparseState state;
    state.num_qubits = detail::parse_int(tok[1], line_no);
    while (detail::next_content_line(in, tok, line_no)) {
        if (tok.size() != 3)
            detail::parse_fail(line_no, "expected '<basis-index> <re> <im>'");
        std::uint64_t idx = detail::parse_u64(tok[0], line_no);
        double re = detail::parse_double(tok[1], line_no);
        double im = detail::parse_double(tok[2], line_no);
        state.terms.emplace_back(idx, Amplitude{re, im});
    }
    try {
        state.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid state dump: ") + e.what());
    }
    return state;
}

void save_state_file(const std::string& path, const SparseState& state) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_state(out, state);
}

SparseState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_state(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace qpose
