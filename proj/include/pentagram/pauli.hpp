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
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "pentagram/error.hpp"

namespace pentagram {

/// Number of qubits; the whole library is specialised to three.
inline constexpr int kQubits = 3;
/// Number of nontrivial classes of the three-qubit Pauli group modulo phases.
inline constexpr int kPoints = 63;

/// Single-qubit Pauli letter, valued by its two-bit code (x, z) packed as 2x + z.
enum class Letter : std::uint8_t { I = 0, Z = 1, X = 2, Y = 3 };

constexpr char letter_char(Letter l) {
    constexpr std::array<char, 4> chars{'I', 'Z', 'X', 'Y'};
    return chars[static_cast<std::uint8_t>(l)];
}

constexpr std::optional<Letter> letter_from_char(char c) {
    switch (c) {
        case 'I': return Letter::I;
        case 'Z': return Letter::Z;
        case 'X': return Letter::X;
        case 'Y': return Letter::Y;
        default: return std::nullopt;
    }
}

/// Exponent k of the global phase i^k.
///
/// Products of pairwise commuting Hermitian representatives always land on
/// k = 0 or k = 2, which is what `sign()` reports.
class Phase {
   public:
    constexpr Phase() = default;
    constexpr explicit Phase(int exponent) : exponent_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {
    }

    constexpr int exponent() const {
        return exponent_;
    }
    constexpr bool is_real() const {
        return (exponent_ & 1) == 0;
    }
    /// +1 or -1; only meaningful when is_real().
    constexpr int sign() const {
        return exponent_ == 0 ? 1 : -1;
    }

    constexpr Phase operator*(Phase other) const {
        return Phase(exponent_ + other.exponent_);
    }
    constexpr bool operator==(const Phase &) const = default;

   private:
    std::uint8_t exponent_ = 0;
};

enum class ObservableKind : std::uint8_t { A, B, C };

constexpr char kind_char(ObservableKind k) {
    return "ABC"[static_cast<int>(k)];
}

/// A point of W(5,2): one of the 63 nontrivial three-qubit Pauli classes.
///
/// The id doubles as the GF(2)^6 vector. Each qubit occupies two bits holding
/// its letter code (I=0, Z=1, X=2, Y=3), with qubit 1 in the most significant
/// pair, so id = code(q1)*16 + code(q2)*4 + code(q3) and the GF(2) sum of two
/// observables is the XOR of their ids. The representative is the literal
/// tensor product of letters with phase +1.
class Observable {
   public:
    /// Defaults to the lowest point, IIZ (id 1); there is no identity value.
    constexpr Observable() = default;

    /// Validating constructor from the numeric id (1..63).
    static constexpr Observable from_id(int id) {
        if (id == 0) {
            throw Error(ErrorCode::IdentityNotAPoint, "id 0 is the identity III");
        }
        if (id < 0 || id > kPoints) {
            throw Error(ErrorCode::MalformedLabel, "observable id out of range 1..63: " + std::to_string(id));
        }
        return Observable(static_cast<std::uint8_t>(id));
    }

    /// From X-part and Z-part bit vectors, qubit 1 in bit 2.
    static constexpr Observable from_xz(unsigned x, unsigned z) {
        int id = 0;
        for (int q = kQubits - 1; q >= 0; --q) {
            id = id * 4 + static_cast<int>(2 * ((x >> q) & 1U) + ((z >> q) & 1U));
        }
        return from_id(id);
    }

    static constexpr Observable parse(std::string_view label) {
        if (label.size() != kQubits) {
            throw Error(ErrorCode::MalformedLabel, "expected 3 letters over {I,X,Y,Z}, got '" + std::string(label) + "'");
        }
        int id = 0;
        for (char c : label) {
            auto l = letter_from_char(c);
            if (!l) {
                throw Error(ErrorCode::MalformedLabel, "bad Pauli letter in '" + std::string(label) + "'");
            }
            id = id * 4 + static_cast<int>(*l);
        }
        if (id == 0) {
            throw Error(ErrorCode::IdentityNotAPoint, "III is not a point of the space");
        }
        return Observable(static_cast<std::uint8_t>(id));
    }

    constexpr int id() const {
        return bits_;
    }

    /// Letter on qubit q (0-based, q = 0 is the leftmost letter).
    constexpr Letter letter(int q) const {
        return static_cast<Letter>((bits_ >> (2 * (kQubits - 1 - q))) & 3U);
    }

    /// X-part as a 3-bit vector, qubit 1 in bit 2.
    constexpr unsigned x() const {
        return pick(1);
    }
    /// Z-part as a 3-bit vector, qubit 1 in bit 2.
    constexpr unsigned z() const {
        return pick(0);
    }

    std::string label() const {
        std::string out(kQubits, 'I');
        for (int q = 0; q < kQubits; ++q) {
            out[static_cast<std::size_t>(q)] = letter_char(letter(q));
        }
        return out;
    }

    constexpr int identity_count() const {
        int n = 0;
        for (int q = 0; q < kQubits; ++q) {
            n += letter(q) == Letter::I ? 1 : 0;
        }
        return n;
    }

    constexpr ObservableKind kind() const {
        switch (identity_count()) {
            case 2: return ObservableKind::A;
            case 1: return ObservableKind::B;
            default: return ObservableKind::C;
        }
    }

    /// The representative matrix is symmetric iff it has an even number of Y letters.
    constexpr bool is_symmetric() const {
        return (std::popcount(x() & z()) & 1) == 0;
    }

    constexpr Observable operator+(Observable other) const {
        return from_id(bits_ ^ other.bits_);
    }

    constexpr auto operator<=>(const Observable &) const = default;

   private:
    constexpr explicit Observable(std::uint8_t bits) : bits_(bits) {
    }

    constexpr unsigned pick(int offset) const {
        unsigned out = 0;
        for (int q = 0; q < kQubits; ++q) {
            out = (out << 1) | ((bits_ >> (2 * (kQubits - 1 - q) + offset)) & 1U);
        }
        return out;
    }

    std::uint8_t bits_ = 1;
};

inline constexpr std::uint8_t kXMask = 0b101010;
inline constexpr std::uint8_t kZMask = 0b010101;

/// Alternating form over GF(2); 0 iff the representatives commute.
constexpr int symplectic_form(Observable a, Observable b) {
    const unsigned ax = (static_cast<unsigned>(a.id()) & kXMask) >> 1;
    const unsigned az = static_cast<unsigned>(a.id()) & kZMask;
    const unsigned bx = (static_cast<unsigned>(b.id()) & kXMask) >> 1;
    const unsigned bz = static_cast<unsigned>(b.id()) & kZMask;
    return std::popcount((ax & bz) ^ (bx & az)) & 1;
}

constexpr bool commute(Observable a, Observable b) {
    return symplectic_form(a, b) == 0;
}

namespace detail {

// i-exponent of the single-qubit product P*Q, indexed [P][Q] by letter code.
// The result letter is always the XOR of the codes.
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kLetterPhase{{
    //   I  Z  X  Y
    {{0, 0, 0, 0}},  // I
    {{0, 0, 1, 3}},  // Z: ZX = iY, ZY = -iX
    {{0, 3, 0, 1}},  // X: XZ = -iY, XY = iZ
    {{0, 1, 3, 0}},  // Y: YZ = iX, YX = -iZ
}};

}  // namespace detail

/// Result of multiplying representatives: the GF(2) sum (nullopt when it is the
/// identity) and the accumulated phase relative to the +1 representative.
struct SignedProduct {
    std::optional<Observable> observable;
    Phase phase;

    bool is_identity() const {
        return !observable.has_value();
    }
    bool operator==(const SignedProduct &) const = default;
};

/// Multiplies the canonical representatives left to right.
constexpr SignedProduct signed_product(std::span<const Observable> observables) {
    unsigned acc = 0;
    int exponent = 0;
    for (Observable o : observables) {
        const unsigned next = static_cast<unsigned>(o.id());
        for (int q = 0; q < kQubits; ++q) {
            const unsigned shift = static_cast<unsigned>(2 * q);
            exponent += detail::kLetterPhase[(acc >> shift) & 3U][(next >> shift) & 3U];
        }
        acc ^= next;
    }
    SignedProduct out;
    out.phase = Phase(exponent);
    if (acc != 0) {
        out.observable = Observable::from_id(static_cast<int>(acc));
    }
    return out;
}

constexpr SignedProduct signed_product(std::initializer_list<Observable> observables) {
    return signed_product(std::span<const Observable>(observables.begin(), observables.size()));
}

namespace detail {

template <std::size_t... I>
constexpr std::array<Observable, sizeof...(I)> make_observables(std::index_sequence<I...>) {
    return {Observable::from_id(static_cast<int>(I) + 1)...};
}

}  // namespace detail

/// All 63 observables in ascending id order.
constexpr std::array<Observable, kPoints> all_observables() {
    return detail::make_observables(std::make_index_sequence<kPoints>{});
}

/// Bit `id` set for each observable.
using PointMask = std::uint64_t;

constexpr PointMask mask_of(Observable o) {
    return PointMask{1} << o.id();
}

template <class Range>
constexpr PointMask mask_of(const Range &points) {
    PointMask m = 0;
    for (Observable o : points) {
        m |= mask_of(o);
    }
    return m;
}

}  // namespace pentagram
