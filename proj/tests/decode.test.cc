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

#include <gtest/gtest.h>

#include "support/properties.h"

using namespace qconv;
using namespace qconv::testing;

namespace {

std::vector<F4> V(std::string_view s) { return parse_f4_vector(s); }

}  // namespace

TEST(Syndromes, Example1SingleErrors) {
    ConvCode c = example1();
    // error in block 1 of a 3-block window; S_1, S_2 see it.
    auto s = conv_syndromes(c, V("000100000"), 4);
    EXPECT_EQ(to_string(s), "0110");
    s = conv_syndromes(c, V("000010000"), 4);
    EXPECT_EQ(to_string(s), "0W10");
    EXPECT_EQ(to_string(conv_syndromes(c, V("000000000"), 4)), "0000");
}

TEST(StreamDecoder, Example1Table) {
    SingleErrorTable t(example1());
    EXPECT_EQ(t.size(), 9u);
    auto r = t.decode(V("w1000"), 4);
    EXPECT_FALSE(r.detected);
    EXPECT_EQ(to_string(r.estimate), "001000000000");
    auto d = t.decode(V("10000"), 4);
    EXPECT_TRUE(d.detected);
    auto z = t.decode(V("00000"), 4);
    EXPECT_FALSE(z.detected);
    EXPECT_EQ(to_string(z.estimate), "000000000000");
}

TEST(StreamDecoder, Example3Table) {
    SingleErrorTable t(example3());
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(to_string(t.decode(V("11100"), 3).estimate), "100000000");
    EXPECT_EQ(to_string(t.decode(V("10100"), 3).estimate), "010000000");
    EXPECT_TRUE(t.decode(V("11000"), 3).detected);
}

TEST(StreamDecoder, ExhaustiveSingleErrors) {
    auto a = streaming_single_errors(example1(), 6);
    EXPECT_TRUE(a.ok()) << a.summary();
    EXPECT_EQ(a.cases, 54);
    auto b = streaming_single_errors(example3(), 6);
    EXPECT_TRUE(b.ok()) << b.summary();
    auto d = detection_cases();
    EXPECT_TRUE(d.ok()) << d.summary();
}

TEST(CircularDecoder, ExhaustiveSingleErrors) {
    auto a = circular_single_errors(example1(), 3);
    EXPECT_TRUE(a.ok()) << a.summary();
    EXPECT_EQ(a.cases, 27);
    auto b = circular_single_errors(example3(), 5);
    EXPECT_TRUE(b.ok()) << b.summary();
    EXPECT_EQ(b.cases, 15);
    CircularTableDecoder dec(example1(), 3);
    auto z = dec.decode(std::vector<F4>(3));
    EXPECT_FALSE(z.detected);
    EXPECT_EQ(to_string(z.estimate), "000000000");
}

TEST(CircularDecoder, Css15BothViews) {
    CircularTableDecoder dec(example3(), 5);
    for (int p = 0; p < 15; p++) {
        for (F4 v : {F4::w(), F4::wbar(), F4::one()}) {
            std::vector<F4> e(15);
            e[p] = v;
            auto r = dec.decode_css(e);
            ASSERT_FALSE(r.detected);
            ASSERT_EQ(r.estimate, e);
        }
    }
}

TEST(Viterbi, MatchesBruteForceCosetLeaders) {
    auto a = viterbi_vs_bruteforce(example1(), 4);
    EXPECT_TRUE(a.ok()) << a.summary();
    EXPECT_EQ(a.cases, 256);
    auto b = viterbi_vs_bruteforce(example3(), 4);
    EXPECT_TRUE(b.ok()) << b.summary();
    EXPECT_EQ(b.cases, 16);
}

TEST(Viterbi, ZeroSyndromeGivesZero) {
    CosetViterbi v(example1(), 5, ViterbiMode::kWindow);
    auto e = v.decode(std::vector<F4>(v.num_syndromes()));
    for (F4 a : e) {
        EXPECT_TRUE(a.is_zero());
    }
}

TEST(Viterbi, TailBitingRecoversSingleErrors) {
    ConvCode c = example1();
    CosetViterbi v(c, 3, ViterbiMode::kTailBiting);
    for (int p = 0; p < 9; p++) {
        for (F4 x : {F4::one(), F4::w(), F4::wbar()}) {
            std::vector<F4> e(9);
            e[p] = x;
            ASSERT_EQ(v.decode(v.syndrome(e)), e) << p;
        }
    }
}

TEST(Viterbi, WindowOutputIsAMinimumWeightCosetMember) {
    Rng rng(9);
    for (const ConvCode &c : {example1(), example3()}) {
        const int T = 4;
        auto best = brute_coset_leader_weights(c, T);
        CosetViterbi v(c, T, ViterbiMode::kWindow);
        for (int t = 0; t < 1000; t++) {
            auto e = random_error(rng, c.field, T * c.n, 0.25);
            auto s = conv_syndromes(c, e, T);
            auto est = v.decode(s);
            ASSERT_EQ(conv_syndromes(c, est, T), s);
            int w = 0;
            for (F4 a : est) {
                w += !a.is_zero();
            }
            ASSERT_EQ(w, best[pack_syndrome(s)]);
        }
    }
}

TEST(Coset, ShiftSpanMembership) {
    ConvCode c = example3();
    // g itself and g shifted by one block are in the span; a single flip is not.
    EXPECT_TRUE(in_shift_span(c, V("111100110000")));
    EXPECT_TRUE(in_shift_span(c, V("000111100110")));
    EXPECT_TRUE(in_shift_span(c, V("111011010110")));
    EXPECT_FALSE(in_shift_span(c, V("100000000000")));
    EXPECT_TRUE(in_shift_span(c, V("000000000000")));
}

TEST(Coset, BlockResidualCriterion) {
    BlockCode steane = BlockCode::parse(Field::F2, "0001111; 0110011; 1010101");
    // The check takes the rows of the orthogonal code.
    BlockCode h = dual(steane);
    EXPECT_TRUE(residual_in_code(h, V("0001111")));
    EXPECT_TRUE(residual_in_code(h, V("1011010")));
    EXPECT_FALSE(residual_in_code(h, V("0000001")));
    EXPECT_FALSE(residual_in_code(h, V("1111111")));
}

TEST(BlockDecoder, FiveQubitAndSteaneSingleErrors) {
    BlockTableDecoder five(BlockCode::parse(Field::F4, "0 W w w W; W 0 W w w"));
    EXPECT_EQ(five.size(), 16u);
    for (int p = 0; p < 5; p++) {
        for (F4 x : {F4::one(), F4::w(), F4::wbar()}) {
            std::vector<F4> e(5);
            e[p] = x;
            auto r = five.decode(five.syndrome(e));
            ASSERT_EQ(r.estimate, e);
        }
    }
    BlockTableDecoder steane(BlockCode::parse(Field::F2, "0001111; 0110011; 1010101"));
    EXPECT_EQ(steane.size(), 8u);
    for (int p = 0; p < 7; p++) {
        for (F4 x : {F4::one(), F4::w(), F4::wbar()}) {
            std::vector<F4> e(7);
            e[p] = x;
            ASSERT_EQ(steane.decode_css(e).estimate, e);
        }
    }
}
