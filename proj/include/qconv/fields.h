// Copyright 2026 The qconv Authors
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

#ifndef QCONV_FIELDS_H
#define QCONV_FIELDS_H

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qconv {

enum class Field : uint8_t { F2, F4 };

inline int field_size(Field f) { return f == Field::F2 ? 2 : 4; }
std::string field_name(Field f);
Field parse_field(std::string_view text);

/// Element of GF(4).
///
/// The two stored bits are the (bit-flip, phase-flip) label of the element,
/// so that a = x*w + z*wbar.  Under this encoding addition is XOR and the
/// binary subfield is {00, 11}.
struct F4 {
    uint8_t v = 0;

    constexpr F4() = default;
    constexpr explicit F4(uint8_t bits) : v(bits & 3) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(3); }
    static constexpr F4 w() { return F4(1); }
    static constexpr F4 wbar() { return F4(2); }

    constexpr bool x() const { return v & 1; }
    constexpr bool z() const { return v & 2; }
    constexpr bool is_zero() const { return v == 0; }
    constexpr bool is_binary() const { return v == 0 || v == 3; }

    constexpr F4 operator+(F4 o) const { return F4(v ^ o.v); }
    constexpr F4 operator-(F4 o) const { return F4(v ^ o.v); }
    constexpr F4 &operator+=(F4 o) {
        v ^= o.v;
        return *this;
    }
    constexpr F4 operator*(F4 o) const {
        uint8_t ax = v & 1, az = v >> 1, bx = o.v & 1, bz = o.v >> 1;
        uint8_t rx = (ax & bz) ^ (az & bx) ^ (az & bz);
        uint8_t rz = (ax & bx) ^ (ax & bz) ^ (az & bx);
        return F4(rx | (rz << 1));
    }
    constexpr F4 &operator*=(F4 o) {
        *this = *this * o;
        return *this;
    }
    constexpr bool operator==(const F4 &o) const = default;

    /// Position in the textual order 0 < 1 < w < W.
    constexpr int rank() const {
        constexpr uint8_t r[4] = {0, 2, 3, 1};
        return r[v];
    }
};

constexpr F4 conj(F4 a) { return F4(((a.v & 1) << 1) | (a.v >> 1)); }
constexpr bool trace(F4 a) { return a.x() != a.z(); }
F4 inverse(F4 a);
/// a^k for any integer k (a nonzero).
F4 power(F4 a, int k);

/// All four elements, in textual order.
constexpr std::array<F4, 4> kF4Elements = {F4::zero(), F4::one(), F4::w(), F4::wbar()};
/// Nonzero scalars of the given field.
std::vector<F4> nonzero_scalars(Field f);

char to_char(F4 a);
F4 f4_from_char(char c);
std::string to_string(std::span<const F4> v);
std::vector<F4> parse_f4_vector(std::string_view text);

enum class Pauli : uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
/// L(I, X, Y, Z) = (0, w, 1, wbar).
F4 label(Pauli p);
Pauli pauli_of(F4 a);
/// The two-bit label l(P) = (bit flip, phase flip).
std::pair<bool, bool> ell(F4 a);
/// (Tr(w a), Tr(wbar a)); equals ell(a).
std::pair<bool, bool> f4_syndrome_bits(F4 a);

/// Projective product of single-qubit Paulis (phases dropped).
Pauli pauli_product(Pauli a, Pauli b);
/// Commutation read off the Pauli multiplication rules, independently of labels.
bool paulis_commute(Pauli a, Pauli b);

/// sum_i conj(a_i) b_i.
F4 hermitian_inner(std::span<const F4> a, std::span<const F4> b);
/// Tr(hermitian_inner(a, b)); zero iff the corresponding Pauli tuples commute.
bool trace_inner(std::span<const F4> a, std::span<const F4> b);
/// sum_i a_i b_i (no conjugation).
F4 euclidean_inner(std::span<const F4> a, std::span<const F4> b);

/// Hermitian inner product of two bit-plane packed vectors (x planes, z planes).
inline F4 hermitian_inner_planes(uint64_t ax, uint64_t az, uint64_t bx, uint64_t bz) {
    auto par = [](uint64_t w) { return (uint8_t)(__builtin_popcountll(w) & 1); };
    uint8_t rx = par(ax & bx) ^ par(az & bz) ^ par(ax & bz);
    uint8_t rz = par(ax & bx) ^ par(az & bz) ^ par(az & bx);
    return F4(rx | (rz << 1));
}

/// Scalar times a packed vector; returns (x, z) planes.
inline std::pair<uint64_t, uint64_t> scale_planes(F4 c, uint64_t x, uint64_t z) {
    switch (c.v) {
        case 0:
            return {0, 0};
        case 1:  // w
            return {z, x ^ z};
        case 2:  // wbar
            return {x ^ z, x};
        default:
            return {x, z};
    }
}

}  // namespace qconv

#endif
