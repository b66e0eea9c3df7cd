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

// Regression data produced by this code base and frozen after verification.
// None of these numbers come from the reference table; golden/derived.json
// carries the same values.

#pragma once

#include <array>

namespace pentagram::derived {

/// Fano planes per class over all 135: negative, a, b, c.
inline constexpr std::array<int, 4> kPlaneClassCensus{54, 27, 27, 27};

/// Contexts by sign over all 945: negative, positive.
inline constexpr int kNegativeContexts = 324;
inline constexpr int kPositiveContexts = 621;

/// Pentagrams per type (N column), index t - 1.
inline constexpr std::array<int, 45> kMultiplicity{
    54,  54,  324, 162, 162, 324, 162, 54,  324, 324, 162, 162, 162, 324, 324, 324, 162, 324, 162, 162, 324, 324, 324,
    648, 162, 162, 162, 486, 162, 324, 324, 324, 324, 324, 648, 324, 648, 54,  324, 162, 324, 324, 324, 324, 54,
};

/// Pentagrams per type on the symmetric Klein quadric as computed here, index t - 1.
/// Differs from the reference K column at types 25, 26, 27, 28, 33, 36 and 37.
inline constexpr std::array<int, 45> kComputedKlein{
    2, 0, 0, 0, 6, 0, 6, 0, 0, 12, 0, 6, 6, 0, 12, 12, 0, 12, 6, 6, 0, 12, 12,
    12, 0, 6, 6, 18, 6, 12, 0, 12, 12, 12, 24, 12, 24, 2, 12, 6, 12, 12, 12, 12, 2,
};

}  // namespace pentagram::derived
