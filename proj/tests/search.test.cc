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

#include <set>

#include "qconv/tables.h"
#include "support/oracles.h"

using namespace qconv;
using namespace qconv::testing;

namespace {

std::set<std::string> as_strings(const std::vector<LaurentTuple> &v) {
    std::set<std::string> s;
    for (const auto &t : v) {
        s.insert(t.str());
    }
    return s;
}

}  // namespace

TEST(MonicPolys, CountsAndOrder) {
    auto f2 = monic_polys(Field::F2, 3);
    EXPECT_EQ(f2.size(), 8u);
    EXPECT_EQ(f2.front().str(), "1");
    EXPECT_EQ(f2[1].str(), "11");
    auto f4 = monic_polys(Field::F4, 2);
    EXPECT_EQ(f4.size(), 16u);
    EXPECT_EQ(f4[1].str(), "11");
    EXPECT_EQ(f4[2].str(), "1w");
    EXPECT_EQ(f4[3].str(), "1W");
}

TEST(Autocorr, TableRows) {
    auto rows = autocorr_table(Field::F2, 3);
    bool seen = false;
    for (const auto &r : rows) {
        if (r.g.str() == "1101") {
            EXPECT_EQ(r.r_plus.str(), "1111");
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
    auto rows4 = autocorr_table(Field::F4, 2);
    for (const auto &r : rows4) {
        if (r.g.str() == "1Ww") {
            EXPECT_EQ(r.r_plus.str(), "10w");
        }
        if (r.g.str() == "1") {
            EXPECT_EQ(r.r_plus.str(), "1");
        }
    }
}

TEST(ZeroSum, UniqueSmallCodes) {
    auto r2 = autocorr_table(Field::F2, 2);
    auto s2 = zero_sum_subsets(Field::F2, r2, 3);
    ASSERT_EQ(s2.size(), 1u);
    EXPECT_EQ(as_strings({s2[0]}), as_strings({LaurentTuple::parse(Field::F2, "1 101 111")}));
    auto r4 = autocorr_table(Field::F4, 1);
    auto s4 = zero_sum_subsets(Field::F4, r4, 3);
    ASSERT_EQ(s4.size(), 1u);
    EXPECT_EQ(s4[0].str(), "11 1w 1W");
}

TEST(ZeroSum, Table1QuarterRateColumns) {
    auto golden = load_autocorr(1);
    std::set<std::string> starred;
    for (size_t c = 0; c < golden.tags.size(); c++) {
        if (golden.tags[c] == "1/4") {
            starred.insert(golden.column((int)c).str());
        }
    }
    auto subs = zero_sum_subsets(Field::F2, autocorr_table(Field::F2, 3), 4);
    // The table shows one member of each class; the other zero-sum subsets
    // are their time reversals.
    EXPECT_EQ(starred.size(), 2u);
    std::set<std::string> all = as_strings(subs), starred_classes, all_classes;
    for (const auto &s : starred) {
        EXPECT_TRUE(all.count(s)) << s;
        starred_classes.insert(canonicalize_class(LaurentTuple::parse(Field::F2, s)).str());
    }
    for (const auto &t : subs) {
        all_classes.insert(canonicalize_class(t).str());
    }
    EXPECT_EQ(all_classes, starred_classes);
}

TEST(Tables, AutocorrelationTablesReproduce) {
    for (int t : {1, 3}) {
        auto run = run_table(t);
        EXPECT_TRUE(run.ok()) << roman(t) << ": " << (run.diffs.empty() ? "" : run.diffs[0]);
    }
}

TEST(Classes, ReducedEnumerationIsComplete) {
    EXPECT_EQ(as_strings(self_orthogonal_classes(Field::F2, 4, true)),
              as_strings(self_orthogonal_classes(Field::F2, 4, false)));
    EXPECT_EQ(as_strings(self_orthogonal_classes(Field::F4, 2, true)),
              as_strings(self_orthogonal_classes(Field::F4, 2, false)));
    EXPECT_EQ(self_orthogonal_classes(Field::F2, 4, true).size(), 7u);
    EXPECT_EQ(self_orthogonal_classes(Field::F4, 2, true).size(), 3u);
}

TEST(BestRate13, SmallConstraintLengths) {
    auto r3 = best_rate13(Field::F2, 3);
    ASSERT_TRUE(r3.complete);
    ASSERT_EQ(r3.rows.size(), 1u);
    EXPECT_EQ(canonicalize_class(r3.rows[0].g), canonicalize_class(LaurentTuple::parse(Field::F2, "111 1101 1111")));
    EXPECT_EQ(r3.rows[0].d_perp, 4);
    EXPECT_EQ(r3.rows[0].n_d, 3u);

    auto r4 = best_rate13(Field::F4, 2);
    ASSERT_EQ(r4.rows.size(), 1u);
    EXPECT_EQ(canonicalize_class(r4.rows[0].g), canonicalize_class(LaurentTuple::parse(Field::F4, "111 1w1 11")));
    EXPECT_EQ(r4.rows[0].d_perp, 4);
    EXPECT_EQ(r4.rows[0].n_d, 12u);

    auto b4 = best_rate13(Field::F2, 4);
    ASSERT_EQ(b4.rows.size(), 3u);
    for (const auto &row : b4.rows) {
        EXPECT_EQ(row.d_perp, 4);
        EXPECT_EQ(row.n_d, 1u);
    }
}

TEST(BestRate13, BudgetIsReported) {
    SearchBudget tiny;
    tiny.max_candidates = 10;
    auto r = best_rate13(Field::F2, 5, tiny);
    EXPECT_FALSE(r.complete);
    EXPECT_NE(r.coverage().find("PARTIAL"), std::string::npos) << r.coverage();
}

TEST(RowVerify, BeyondSearchRows) {
    RowClaim v12;
    v12.field = Field::F2;
    for (const auto &r : load_best(5)) {
        if (r.nu == 12) {
            v12.g = r.g;
            v12.h = r.h;
        }
    }
    v12.nu = 12;
    v12.d_perp = 10;
    v12.n_d = 5;
    auto rep = table_row_verify(v12);
    EXPECT_TRUE(rep.ok()) << rep.str();

    RowClaim v5;
    v5.field = Field::F4;
    for (const auto &r : load_best(6)) {
        if (r.nu == 5) {
            v5.g = r.g;
            v5.h = r.h;
        }
    }
    v5.d_perp = 8;
    v5.n_d = 75;
    EXPECT_TRUE(table_row_verify(v5).ok());

    v5.n_d = 74;
    EXPECT_FALSE(table_row_verify(v5).ok());
}

TEST(RowVerify, CorruptedGeneratorFails) {
    RowClaim c;
    c.field = Field::F2;
    c.g = LaurentTuple::parse(Field::F2, "111 101 11");
    EXPECT_FALSE(table_row_verify(c).ok());
}
