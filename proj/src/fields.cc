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

#include "qconv/fields.h"

namespace qconv {

std::string field_name(Field f) { return f == Field::F2 ? "f2" : "f4"; }

Field parse_field(std::string_view text) {
    if (text == "f2" || text == "F2" || text == "2") {
        return Field::F2;
    }
    if (text == "f4" || text == "F4" || text == "4") {
        return Field::F4;
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected f2 or f4)");
}

F4 inverse(F4 a) {
    if (a.is_zero()) {
        throw std::domain_error("inverse of zero in GF(4)");
    }
    // w^-1 = wbar, 1^-1 = 1.
    return conj(a);
}

F4 power(F4 a, int k) {
    if (a.is_zero()) {
        if (k <= 0) {
            throw std::domain_error("non-positive power of zero");
        }
        return a;
    }
    int e = ((k % 3) + 3) % 3;
    F4 r = F4::one();
    for (int i = 0; i < e; i++) {
        r *= a;
    }
    return r;
}

std::vector<F4> nonzero_scalars(Field f) {
    if (f == Field::F2) {
        return {F4::one()};
    }
    return {F4::one(), F4::w(), F4::wbar()};
}

char to_char(F4 a) {
    constexpr char c[4] = {'0', 'w', 'W', '1'};
    return c[a.v];
}

F4 f4_from_char(char c) {
    switch (c) {
        case '0':
            return F4::zero();
        case '1':
            return F4::one();
        case 'w':
            return F4::w();
        case 'W':
            return F4::wbar();
    }
    throw std::invalid_argument(std::string("bad GF(4) symbol '") + c + "'");
}

std::string to_string(std::span<const F4> v) {
    std::string s;
    s.reserve(v.size());
    for (F4 a : v) {
        s.push_back(to_char(a));
    }
    return s;
}

std::vector<F4> parse_f4_vector(std::string_view text) {
    std::vector<F4> out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(f4_from_char(c));
    }
    return out;
}

char pauli_char(Pauli p) { return "IXYZ"[(int)p]; }

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
    }
    throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
}

F4 label(Pauli p) {
    constexpr F4 l[4] = {F4::zero(), F4::w(), F4::one(), F4::wbar()};
    return l[(int)p];
}

Pauli pauli_of(F4 a) {
    constexpr Pauli p[4] = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
    return p[a.v];
}

std::pair<bool, bool> ell(F4 a) { return {a.x(), a.z()}; }

std::pair<bool, bool> f4_syndrome_bits(F4 a) { return {trace(F4::w() * a), trace(F4::wbar() * a)}; }

Pauli pauli_product(Pauli a, Pauli b) {
    // XY ~ Z, YZ ~ X, ZX ~ Y up to phase.
    if (a == Pauli::I) {
        return b;
    }
    if (b == Pauli::I) {
        return a;
    }
    if (a == b) {
        return Pauli::I;
    }
    return (Pauli)(6 - (int)a - (int)b);
}

bool paulis_commute(Pauli a, Pauli b) { return a == Pauli::I || b == Pauli::I || a == b; }

static void check_lengths(size_t a, size_t b) {
    if (a != b) {
        throw std::invalid_argument(
            "inner product of vectors with different lengths (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

F4 hermitian_inner(std::span<const F4> a, std::span<const F4> b) {
    check_lengths(a.size(), b.size());
    F4 acc;
    for (size_t i = 0; i < a.size(); i++) {
        acc += conj(a[i]) * b[i];
    }
    return acc;
}

bool trace_inner(std::span<const F4> a, std::span<const F4> b) { return trace(hermitian_inner(a, b)); }

F4 euclidean_inner(std::span<const F4> a, std::span<const F4> b) {
    check_lengths(a.size(), b.size());
    F4 acc;
    for (size_t i = 0; i < a.size(); i++) {
        acc += a[i] * b[i];
    }
    return acc;
}

}  // namespace qconv
