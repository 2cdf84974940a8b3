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

#include <gtest/gtest.h>

using namespace qconv;

namespace {

const F4 O = F4::zero(), I = F4::one(), W = F4::w(), B = F4::wbar();

// GF(4) as polynomials over GF(2) modulo w^2 + w + 1, with elements a + b w
// packed as (a, b).  Independent of the bit-plane encoding under test.
struct Ref {
    int a, b;
};
Ref ref(F4 x) {
    if (x == O) return {0, 0};
    if (x == I) return {1, 0};
    if (x == W) return {0, 1};
    return {1, 1};  // wbar = 1 + w
}
F4 from_ref(Ref r) {
    if (r.a == 0 && r.b == 0) return O;
    if (r.a == 1 && r.b == 0) return I;
    if (r.a == 0 && r.b == 1) return W;
    return B;
}
F4 ref_mul(F4 x, F4 y) {
    Ref p = ref(x), q = ref(y);
    // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = w + 1
    int c0 = (p.a * q.a + p.b * q.b) & 1;
    int c1 = (p.a * q.b + p.b * q.a + p.b * q.b) & 1;
    return from_ref({c0, c1});
}

}  // namespace

TEST(F4, MultiplicationMatchesPolynomialModel) {
    for (F4 x : kF4Elements) {
        for (F4 y : kF4Elements) {
            EXPECT_EQ(x * y, ref_mul(x, y)) << to_char(x) << "*" << to_char(y);
            Ref p = ref(x), q = ref(y);
            EXPECT_EQ(x + y, from_ref({p.a ^ q.a, p.b ^ q.b}));
        }
    }
    EXPECT_EQ(W * W, B);
    EXPECT_EQ(W * B, I);
}

TEST(F4, InverseAndPower) {
    for (F4 x : {I, W, B}) {
        EXPECT_EQ(x * inverse(x), I);
        EXPECT_EQ(power(x, 3), I);
    }
    EXPECT_THROW(inverse(O), std::domain_error);
}

TEST(F4, TraceAndConjugate) {
    EXPECT_FALSE(trace(O));
    EXPECT_TRUE(trace(W));
    EXPECT_TRUE(trace(B));
    EXPECT_FALSE(trace(I));
    EXPECT_EQ(conj(I), I);
    EXPECT_EQ(conj(W), B);
    EXPECT_EQ(conj(O), O);
    for (F4 x : kF4Elements) {
        EXPECT_EQ(conj(x), x * x);  // Frobenius
    }
}

TEST(F4, TextRoundTrip) {
    EXPECT_EQ(to_string(parse_f4_vector("01wW")), "01wW");
    EXPECT_THROW(parse_f4_vector("01x"), std::invalid_argument);
}

TEST(Inner, HermitianExamples) {
    std::vector<F4> a = {W}, b = {I};
    EXPECT_EQ(hermitian_inner(a, b), B);
    std::vector<F4> z = {O, O, O}, v = {W, B, I};
    EXPECT_EQ(hermitian_inner(z, v), O);
    // (wbar w 1) with itself: 1 + 1 + 1 = 1.
    std::vector<F4> g = {B, W, I};
    EXPECT_EQ(hermitian_inner(g, g), I);
}

TEST(Inner, TraceExamples) {
    std::vector<F4> w = {W}, b = {B}, one = {I};
    EXPECT_TRUE(trace_inner(w, b));
    EXPECT_FALSE(trace_inner(one, one));
    for (F4 x : kF4Elements) {
        for (F4 y : kF4Elements) {
            std::vector<F4> v = {x, y};
            EXPECT_FALSE(trace_inner(v, v));
        }
    }
}

TEST(Pauli, LabelMapIsGroupIsomorphism) {
    for (Pauli a : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
        for (Pauli b : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
            EXPECT_EQ(label(a) + label(b), label(pauli_product(a, b)));
            std::vector<F4> la = {label(a)}, lb = {label(b)};
            EXPECT_EQ(paulis_commute(a, b), !trace_inner(la, lb));
        }
    }
    EXPECT_EQ(label(Pauli::X), W);
    EXPECT_EQ(label(Pauli::Y), I);
    EXPECT_EQ(label(Pauli::Z), B);
}

TEST(Pauli, SyndromeBits) {
    EXPECT_EQ(f4_syndrome_bits(O), std::make_pair(false, false));
    EXPECT_EQ(f4_syndrome_bits(W), std::make_pair(true, false));
    EXPECT_EQ(f4_syndrome_bits(I), std::make_pair(true, true));
    for (F4 a : kF4Elements) {
        EXPECT_EQ(f4_syndrome_bits(a), std::make_pair(trace(W * a), trace(B * a)));
        EXPECT_EQ(ell(a), f4_syndrome_bits(a));
    }
}

TEST(Inner, BitPlanesAgreeWithScalarForm) {
    uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int t = 0; t < 2000; t++) {
        int len = 1 + next() % 40;
        std::vector<F4> a(len), b(len);
        uint64_t ax = 0, az = 0, bx = 0, bz = 0;
        for (int i = 0; i < len; i++) {
            a[i] = F4(next() & 3);
            b[i] = F4(next() & 3);
            ax |= (uint64_t)a[i].x() << i;
            az |= (uint64_t)a[i].z() << i;
            bx |= (uint64_t)b[i].x() << i;
            bz |= (uint64_t)b[i].z() << i;
        }
        ASSERT_EQ(hermitian_inner_planes(ax, az, bx, bz), hermitian_inner(a, b));
        F4 c(next() & 3);
        auto [sx, sz] = scale_planes(c, ax, az);
        for (int i = 0; i < len; i++) {
            ASSERT_EQ(F4(((sx >> i) & 1) | (((sz >> i) & 1) << 1)), c * a[i]);
        }
    }
}
