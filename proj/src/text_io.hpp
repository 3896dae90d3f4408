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

// Internal helpers for the line-based text formats. Not installed.

#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpose::detail {

/// Drops a trailing `#` comment and surrounding whitespace, then splits the
/// rest on whitespace. Empty result for blank/comment lines.
inline std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

inline std::uint64_t parse_u64(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        parse_fail(line_no, "expected unsigned integer, got '" + tok + "'");
    }
}

inline int parse_int(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        parse_fail(line_no, "expected integer, got '" + tok + "'");
    }
}

inline double parse_double(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        parse_fail(line_no, "expected real number, got '" + tok + "'");
    }
}

/// Shortest round-trip-safe decimal rendering (17 significant digits).
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// First non-blank, non-comment line; false at EOF.
inline bool next_content_line(std::istream& in, std::vector<std::string>& tokens,
                              std::size_t& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        tokens = tokenize(line);
        if (!tokens.empty()) return true;
    }
    return false;
}

}  // namespace qpose::detail
