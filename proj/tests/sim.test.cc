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

#include "qconv/sim.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>

using namespace qconv;

TEST(Sim, ReferenceCoefficients) {
    std::map<std::string, double> want = {{"five-qubit", 10}, {"conv-f4", 12}, {"tb-9-3-3", 12},
                                          {"steane", 21},     {"conv-css", 21}, {"tb-15-5-3", 21}};
    for (const auto &name : codec_names()) {
        ASSERT_TRUE(want.count(name)) << name;
        EXPECT_DOUBLE_EQ(make_codec(name)->reference(), want[name]) << name;
    }
}

TEST(Sim, EverySingleErrorIsCorrected) {
    for (const auto &name : codec_names()) {
        auto codec = make_codec(name);
        EXPECT_EQ(single_error_failures(*codec), 0) << name;
    }
    EXPECT_EQ(single_error_failures(*make_codec("tb-9-3-3", DecoderKind::kViterbi)), 0);
    EXPECT_EQ(single_error_failures(*make_codec("conv-f4", DecoderKind::kViterbi)), 0);
    EXPECT_EQ(single_error_failures(*make_codec("tb-15-5-3", DecoderKind::kLookup)), 0);
}

TEST(Sim, ZeroNoiseNeverFails) {
    SimOptions o;
    o.trials = 2000;
    o.window = 20;
    for (const auto &name : codec_names()) {
        auto r = simulate(*make_codec(name), Channel{0.0}, o);
        EXPECT_EQ(r.failures, 0u) << name;
    }
}

TEST(Sim, DeterministicGivenSeedAndThreadCount) {
    SimOptions o;
    o.trials = 20000;
    o.window = 20;
    o.seed = 99;
    auto codec = make_codec("conv-f4");
    o.threads = 1;
    auto a = simulate(*codec, Channel{0.01}, o);
    o.threads = 4;
    auto b = simulate(*codec, Channel{0.01}, o);
    EXPECT_EQ(a.failures, b.failures);
    o.seed = 100;
    auto c = simulate(*codec, Channel{0.01}, o);
    EXPECT_NE(a.failures, c.failures);
}

TEST(Sim, FiveQubitCoefficientNearTen) {
    SimOptions o;
    o.trials = 200000;
    o.window = 20;
    o.seed = 5;
    auto r = simulate(*make_codec("five-qubit"), Channel{0.01}, o);
    // Three-error events add roughly 10% at p = 0.01.
    EXPECT_GT(r.c_hat, 8.0);
    EXPECT_LT(r.c_hat, 12.5);
}

TEST(Sim, SamplerMatchesChannelMarginals) {
    SplitMix64 rng(3, 0);
    Channel ch{0.3};
    std::array<int, 4> counts{};
    int qubits = 0;
    for (int t = 0; t < 20000; t++) {
        for (const auto &e : sample_errors(ch, 10, rng)) {
            counts[(int)e.label.v]++;
        }
        qubits += 10;
    }
    for (F4 a : {F4::one(), F4::w(), F4::wbar()}) {
        double frac = counts[a.v] / (double)qubits;
        EXPECT_NEAR(frac, 0.1, 0.006) << to_char(a);
    }
}

TEST(Sim, ChannelValidation) {
    EXPECT_THROW((Channel{-0.1}).validate(), std::invalid_argument);
    EXPECT_THROW((Channel{1.0}).validate(), std::invalid_argument);
    EXPECT_NO_THROW((Channel{0.0}).validate());
    EXPECT_THROW(make_codec("seven-qubit"), std::invalid_argument);
    EXPECT_THROW(parse_decoder("guess"), std::invalid_argument);
}

TEST(Sim, CsvRow) {
    EXPECT_EQ(sim_csv_header(), "code,decoder,p,trials,failures,rate,c_hat,ci,reference");
    SimOptions o;
    o.trials = 100;
    o.window = 10;
    auto r = simulate(*make_codec("steane"), Channel{0.01}, o);
    auto row = sim_csv_row(r);
    EXPECT_EQ(row.rfind("steane,", 0), 0u) << row;
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 8);
}
