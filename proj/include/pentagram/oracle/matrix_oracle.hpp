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

// Dense 8x8 complex-matrix model of the three-qubit Pauli operators. It is an
// independent check of the bit-level arithmetic in pauli.hpp and is never
// included by the core headers. All entries are Gaussian integers, so double
// precision arithmetic is exact here.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>

#include "pentagram/pauli.hpp"

namespace pentagram::oracle {

using Complex = std::complex<double>;

template <std::size_t N>
using Matrix = std::array<std::array<Complex, N>, N>;

using Matrix2 = Matrix<2>;
using Matrix8 = Matrix<8>;

inline Matrix2 letter_matrix(char letter) {
    const Complex i{0, 1};
    switch (letter) {
        case 'X': return {{{0, 1}, {1, 0}}};
        case 'Y': return {{{0, -i}, {i, 0}}};
        case 'Z': return {{{1, 0}, {0, -1}}};
        default: return {{{1, 0}, {0, 1}}};
    }
}

template <std::size_t N, std::size_t M>
Matrix<N * M> kron(const Matrix<N> &a, const Matrix<M> &b) {
    Matrix<N * M> out{};
    for (std::size_t r1 = 0; r1 < N; ++r1) {
        for (std::size_t c1 = 0; c1 < N; ++c1) {
            for (std::size_t r2 = 0; r2 < M; ++r2) {
                for (std::size_t c2 = 0; c2 < M; ++c2) {
                    out[r1 * M + r2][c1 * M + c2] = a[r1][c1] * b[r2][c2];
                }
            }
        }
    }
    return out;
}

inline Matrix8 identity8() {
    Matrix8 out{};
    for (std::size_t k = 0; k < 8; ++k) {
        out[k][k] = 1;
    }
    return out;
}

/// Literal tensor product G1 (x) G2 (x) G3 of the letters, phase +1.
inline Matrix8 representative(Observable o) {
    const std::string l = o.label();
    return kron(kron(letter_matrix(l[0]), letter_matrix(l[1])), letter_matrix(l[2]));
}

inline Matrix8 multiply(const Matrix8 &a, const Matrix8 &b) {
    Matrix8 out{};
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t k = 0; k < 8; ++k) {
            if (a[r][k] == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < 8; ++c) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

inline bool equal(const Matrix8 &a, const Matrix8 &b) {
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (a[r][c] != b[r][c]) {
                return false;
            }
        }
    }
    return true;
}

inline Matrix8 scaled(const Matrix8 &m, Complex s) {
    Matrix8 out = m;
    for (auto &row : out) {
        for (auto &v : row) {
            v *= s;
        }
    }
    return out;
}

inline Matrix8 product(std::span<const Observable> observables) {
    Matrix8 acc = identity8();
    for (Observable o : observables) {
        acc = multiply(acc, representative(o));
    }
    return acc;
}

/// Decomposes a matrix as i^k times the representative of `observable` (or of
/// the identity when nullopt). Returns nullopt if no such k exists.
inline std::optional<int> phase_exponent_against(const Matrix8 &m, std::optional<Observable> observable) {
    const Matrix8 base = observable ? representative(*observable) : identity8();
    const std::array<Complex, 4> powers{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
    for (int k = 0; k < 4; ++k) {
        if (equal(m, scaled(base, powers[static_cast<std::size_t>(k)]))) {
            return k;
        }
    }
    return std::nullopt;
}

/// True iff the matrix product of the representatives equals i^k P for the
/// (P, k) reported by signed_product.
inline bool agrees_with_signed_product(std::span<const Observable> observables) {
    const SignedProduct fast = signed_product(observables);
    const auto k = phase_exponent_against(product(observables), fast.observable);
    return k && *k == fast.phase.exponent();
}

/// Sign of a product of pairwise-commuting observables equal to +-III, read
/// off the dense matrix; nullopt when the product is not a real scalar.
inline std::optional<int> scalar_sign(std::span<const Observable> observables) {
    const auto k = phase_exponent_against(product(observables), std::nullopt);
    if (!k || (*k & 1) != 0) {
        return std::nullopt;
    }
    return *k == 0 ? 1 : -1;
}

inline bool commute(Observable a, Observable b) {
    const Matrix8 ma = representative(a);
    const Matrix8 mb = representative(b);
    return equal(multiply(ma, mb), multiply(mb, ma));
}

inline bool is_symmetric(Observable o) {
    const Matrix8 m = representative(o);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (m[r][c] != m[c][r]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pentagram::oracle
