// Copyright 2026 The Pentagram Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pentagram/error.hpp"

namespace pentagram {

/// (C-, O_A, O_B, O_C, F-, F+a, F+b, F+c): negative contexts, observable kinds,
/// and the classes of the five Fano planes the contexts extend to.
inline constexpr std::array<std::string_view, 8> kSignatureColumns{"C-", "O_A", "O_B", "O_C", "F-", "F+a", "F+b", "F+c"};

struct TypeSignature {
    int c_neg = 0;
    int o_a = 0;
    int o_b = 0;
    int o_c = 0;
    int f_neg = 0;
    int f_a = 0;
    int f_b = 0;
    int f_c = 0;

    constexpr std::array<int, 8> values() const {
        return {c_neg, o_a, o_b, o_c, f_neg, f_a, f_b, f_c};
    }

    std::string str() const {
        std::string out = "(";
        const auto v = values();
        for (std::size_t k = 0; k < v.size(); ++k) {
            out += (k ? "," : "") + std::to_string(v[k]);
        }
        return out + ")";
    }

    constexpr auto operator<=>(const TypeSignature &) const = default;
};

/// One row of the reference atlas: type index, signature, Klein count.
struct GoldenRow {
    int t = 0;
    TypeSignature signature;
    int k = 0;

    constexpr bool operator==(const GoldenRow &) const = default;
};

using GoldenTable = std::vector<GoldenRow>;

inline constexpr std::size_t kTypeCount = 45;

// Columns: T, C-, O_A, O_B, O_C, F-, F+a, F+b, F+c, K. Mirrors golden/table1.csv.
inline constexpr std::array<std::array<int, 10>, kTypeCount> kTable1Data{{
    {1, 5, 0, 0, 10, 5, 0, 0, 0, 2},  {2, 5, 1, 0, 9, 3, 2, 0, 0, 0},   {3, 3, 0, 5, 5, 4, 0, 1, 0, 0},
    {4, 3, 0, 4, 6, 5, 0, 0, 0, 0},   {5, 3, 0, 4, 6, 3, 2, 0, 0, 6},   {6, 3, 0, 4, 6, 3, 1, 1, 0, 0},
    {7, 3, 0, 4, 6, 3, 0, 2, 0, 6},   {8, 3, 1, 0, 9, 3, 0, 2, 0, 0},   {9, 3, 1, 4, 5, 3, 2, 0, 0, 0},
    {10, 3, 1, 4, 5, 3, 1, 0, 1, 12}, {11, 3, 1, 4, 5, 3, 0, 2, 0, 0},  {12, 3, 1, 4, 5, 3, 0, 1, 1, 6},
    {13, 3, 1, 4, 5, 3, 0, 0, 2, 6},  {14, 3, 1, 5, 4, 2, 2, 1, 0, 0},  {15, 3, 1, 5, 4, 2, 1, 1, 1, 12},
    {16, 3, 2, 5, 3, 2, 1, 0, 2, 12}, {17, 3, 2, 4, 4, 1, 2, 2, 0, 0},  {18, 3, 2, 4, 4, 1, 2, 1, 1, 12},
    {19, 3, 3, 0, 7, 1, 2, 1, 1, 6},  {20, 3, 3, 4, 3, 1, 2, 0, 2, 6},  {21, 1, 0, 5, 5, 4, 1, 0, 0, 0},
    {22, 1, 0, 5, 5, 2, 2, 1, 0, 12}, {23, 1, 0, 5, 5, 2, 1, 2, 0, 12}, {24, 1, 0, 4, 6, 3, 1, 1, 0, 12},
    {25, 1, 1, 4, 5, 3, 0, 2, 0, 1},  {26, 1, 1, 4, 5, 3, 0, 1, 1, 4},  {27, 1, 1, 4, 5, 3, 0, 0, 2, 7},
    {28, 1, 1, 4, 5, 1, 2, 1, 1, 19}, {29, 1, 1, 4, 5, 1, 0, 3, 1, 6},  {30, 1, 1, 5, 4, 2, 2, 0, 1, 12},
    {31, 1, 1, 5, 4, 2, 1, 2, 0, 0},  {32, 1, 1, 5, 4, 2, 1, 1, 1, 12}, {33, 1, 1, 5, 4, 2, 0, 2, 1, 11},
    {34, 1, 2, 5, 3, 2, 1, 0, 2, 12}, {35, 1, 2, 5, 3, 2, 0, 1, 2, 24}, {36, 1, 2, 4, 4, 1, 2, 1, 1, 11},
    {37, 1, 2, 4, 4, 1, 1, 2, 1, 25}, {38, 1, 3, 0, 7, 1, 0, 3, 1, 2},  {39, 1, 3, 4, 3, 1, 1, 1, 2, 12},
    {40, 1, 3, 4, 3, 1, 0, 2, 2, 6},  {41, 1, 3, 5, 2, 0, 2, 1, 2, 12}, {42, 1, 3, 5, 2, 0, 1, 2, 2, 12},
    {43, 1, 4, 4, 2, 1, 1, 0, 3, 12}, {44, 1, 4, 4, 2, 1, 0, 1, 3, 12}, {45, 1, 6, 0, 4, 1, 0, 0, 4, 2},
}};

inline GoldenRow golden_row_from(const std::array<int, 10> &v) {
    return GoldenRow{v[0], TypeSignature{v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]}, v[9]};
}

/// The built-in reference table, rows in type order.
inline GoldenTable table1() {
    GoldenTable out;
    for (const auto &row : kTable1Data) {
        out.push_back(golden_row_from(row));
    }
    return out;
}

inline constexpr const char *kTable1CsvHeader = "T,C-,O_A,O_B,O_C,F-,F+a,F+b,F+c,K";

/// Reads a table in the golden/table1.csv layout (header line, then 10 integer columns).
inline GoldenTable read_golden_table(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::BadGoldenTable, "empty golden table");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kTable1CsvHeader) {
        throw Error(ErrorCode::BadGoldenTable, "unexpected header '" + line + "'");
    }
    GoldenTable out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::array<int, 10> v{};
        std::stringstream ss(line);
        std::string cell;
        std::size_t n = 0;
        while (std::getline(ss, cell, ',')) {
            if (n == v.size()) {
                throw Error(ErrorCode::BadGoldenTable, "line " + std::to_string(line_no) + ": too many columns");
            }
            try {
                std::size_t used = 0;
                v[n] = std::stoi(cell, &used);
                if (used != cell.size() && !(used + 1 == cell.size() && cell.back() == '\r')) {
                    throw std::invalid_argument(cell);
                }
            } catch (const std::exception &) {
                throw Error(ErrorCode::BadGoldenTable, "line " + std::to_string(line_no) + ": bad integer '" + cell + "'");
            }
            ++n;
        }
        if (n != v.size()) {
            throw Error(ErrorCode::BadGoldenTable, "line " + std::to_string(line_no) + ": expected 10 columns");
        }
        out.push_back(golden_row_from(v));
    }
    return out;
}

}  // namespace pentagram
