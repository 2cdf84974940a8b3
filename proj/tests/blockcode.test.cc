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

TEST(TailBite, Example2WrapsTheLastGenerator) {
    BlockCode b = tail_bite(example1(), 3);
    EXPECT_EQ(b.length, 9);
    EXPECT_EQ(b.rank(), 3);
    EXPECT_TRUE(b.contains(parse_f4_vector("1wW000111")));
    EXPECT_TRUE(is_self_orthogonal_block(b));
    BlockCode d = dual(b);
    EXPECT_EQ(d.rank(), 6);
    EXPECT_EQ(block_min_distance(d).d, 3);
}

TEST(TailBite, Example4) {
    BlockCode h = tail_bite(orthogonal_basis(example3()), 5);
    EXPECT_EQ(h.length, 15);
    EXPECT_EQ(h.rank(), 10);
    EXPECT_EQ(block_min_distance(h).d, 3);
    EXPECT_TRUE(same_code(h, dual(tail_bite(example3(), 5))));
}

TEST(TailBite, RatePreservedForLargeL) {
    Rng rng(5);
    for (int t = 0; t < 200; t++) {
        ConvCode c = random_code(rng, t % 2 ? Field::F4 : Field::F2, 4, 3);
        int L = 2 * c.nu + 3 + t % 5;
        EXPECT_EQ(tail_bite(c, L).rank(), L) << c.g.str();
    }
}

TEST(Terminate, Example1Subset) {
    BlockCode b = terminate(example1(), 3, Termination::kSubset);
    EXPECT_EQ(b.length, 9);
    EXPECT_EQ(b.rank(), 2);
    EXPECT_TRUE(is_self_orthogonal_block(b));
    BlockCode d = dual(b);
    EXPECT_EQ(d.rank(), 7);
    EXPECT_EQ(block_min_distance(d).d, 2);

    BlockCode h = terminate(orthogonal_basis(example1()), 3, Termination::kSubset);
    EXPECT_EQ(h.rank(), 5);
    EXPECT_EQ(block_min_distance(h).d, 3);
    BlockCode hd = dual(h);
    EXPECT_EQ(hd.rank(), 4);
    EXPECT_FALSE(is_self_orthogonal_block(hd));
}

TEST(Terminate, Example1TruncatedIsNotSelfOrthogonal) {
    BlockCode b = terminate(example1(), 3, Termination::kTruncate);
    EXPECT_EQ(b.rank(), 4);
    EXPECT_FALSE(is_self_orthogonal_block(b));
}

TEST(Dual, HammingCodes) {
    BlockCode a = BlockCode::parse(Field::F4, "0 W w w W; W 0 W w w");
    EXPECT_EQ(a.rank(), 2);
    EXPECT_EQ(block_min_distance(a).d, 4);
    BlockCode ad = dual(a);
    EXPECT_EQ(ad.rank(), 3);
    EXPECT_EQ(block_min_distance(ad).d, 3);
    EXPECT_TRUE(same_code(dual(ad), a));

    BlockCode b = BlockCode::parse(Field::F2, "0001111; 0110011; 1010101");
    EXPECT_TRUE(is_self_orthogonal_block(b));
    EXPECT_EQ(block_min_distance(b).d, 4);
    BlockCode bd = dual(b);
    EXPECT_EQ(bd.rank(), 4);
    EXPECT_EQ(block_min_distance(bd).d, 3);
    EXPECT_TRUE(same_code(dual(bd), b));
}

TEST(MinTailBiting, ExampleCodes) {
    auto t1 = min_tailbiting_length(example1(), TailBitingMode::kSyndromeDistinct);
    ASSERT_TRUE(t1.found);
    EXPECT_EQ(t1.L, 3);
    EXPECT_EQ(t1.d_dual, 3);
    EXPECT_EQ(t1.stabilizer.str(), "[9, 3, 3]");
    auto t3 = min_tailbiting_length(example3(), TailBitingMode::kSyndromeDistinct);
    ASSERT_TRUE(t3.found);
    EXPECT_EQ(t3.L, 5);
    EXPECT_EQ(t3.b_dual.rank(), 10);
    EXPECT_EQ(t3.stabilizer.str(), "[15, 5, 3]");
    auto d3 = min_tailbiting_length(example3(), TailBitingMode::kDistancePreserving);
    ASSERT_TRUE(d3.found);
    EXPECT_EQ(d3.L, 5);
    EXPECT_TRUE(d3.note.empty()) << d3.note;
}

TEST(MinTailBiting, Nu6CodeFitsUnderTheSlopeBound) {
    ConvCode c = ConvCode::parse(Field::F2, "111001 1100111 1001111");
    auto r = min_tailbiting_length(c, TailBitingMode::kDistancePreserving);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.bound, 23);
    EXPECT_EQ(r.L, 18);
    EXPECT_EQ(r.d_dual, 6);
    EXPECT_EQ(r.stabilizer.str(), "[54, 18, 6]");
}

TEST(MinTailBiting, SingleErrorSyndromes) {
    EXPECT_FALSE(single_error_syndromes_distinct(example3(), 4));
    EXPECT_TRUE(single_error_syndromes_distinct(example3(), 5));
}
