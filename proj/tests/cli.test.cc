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

// Runs the built qconv binary and checks output and exit status.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run qconv(const std::string &args) {
    std::string cmd = std::string(QCONV_CLI) + " " + args + " 2>&1";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return r;
    }
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), n);
    }
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string spec(const std::string &name) { return std::string(QCONV_DATA) + "/specs/" + name; }

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(qconv("").status, 2);
    EXPECT_EQ(qconv("frobnicate").status, 2);
    EXPECT_EQ(qconv("tables").status, 2);
    EXPECT_EQ(qconv("tables IX").status, 2);
    EXPECT_EQ(qconv("simulate --code steane --p 0.01").status, 2);  // no --seed
    EXPECT_EQ(qconv("simulate --code steane --p 1.5 --seed 1").status, 2);
    EXPECT_EQ(qconv("simulate --code nine-qubit --p 0.01 --seed 1").status, 2);
    EXPECT_EQ(qconv("decode --code example3 --syndrome 1w1").status, 2);
    EXPECT_EQ(qconv("distance --field f2 --g \"11 101\"").status, 2);
    EXPECT_EQ(qconv("search --field f3").status, 2);
    EXPECT_EQ(qconv("--help").status, 0);
}

TEST(Cli, VerifyExitCodes) {
    auto ok = qconv("verify " + spec("example1.spec"));
    EXPECT_EQ(ok.status, 0) << ok.out;
    EXPECT_NE(ok.out.find("d_perp: expected 3, got 3"), std::string::npos) << ok.out;
    auto ex5 = qconv("verify " + spec("example5.spec"));
    EXPECT_EQ(ex5.status, 0) << ex5.out;
    auto bad = qconv("verify " + spec("corrupted.spec"));
    EXPECT_EQ(bad.status, 1) << bad.out;
    EXPECT_NE(bad.out.find("FAIL  basis orthogonal"), std::string::npos) << bad.out;
    auto syn = qconv("verify " + spec("bad-syntax.spec"));
    EXPECT_EQ(syn.status, 2) << syn.out;
    EXPECT_NE(syn.out.find("line 2, column 10"), std::string::npos) << syn.out;
}

TEST(Cli, DecodeExamples) {
    auto r = qconv("decode --code example3 --syndrome \"1 1 1\"");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("estimate: 100 000 000"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("block 0, position 1"), std::string::npos) << r.out;
    auto z = qconv("decode --code example1 --syndrome \"0 0 0 0\"");
    EXPECT_EQ(z.status, 0);
    EXPECT_NE(z.out.find("identity"), std::string::npos) << z.out;
    auto d = qconv("decode --code example1 --syndrome \"1 0 0 0\"");
    EXPECT_NE(d.out.find("detected: yes"), std::string::npos) << d.out;
}

TEST(Cli, TablesAndSearch) {
    auto t = qconv("tables I III --quiet");
    EXPECT_EQ(t.status, 0) << t.out;
    EXPECT_NE(t.out.find("Table I: match"), std::string::npos);
    auto s = qconv("search --field f4 --nu 2 --rate13-best --emit csv");
    EXPECT_EQ(s.status, 0) << s.out;
    EXPECT_NE(s.out.find("nu,g,h1,h2,d_perp,N"), std::string::npos) << s.out;
    EXPECT_NE(s.out.find(",4,12"), std::string::npos) << s.out;
    auto md = qconv("search --field f2 --n 3 --max-deg 2 --emit md");
    EXPECT_NE(md.out.find("| 1/3 | 1 101 111 |"), std::string::npos) << md.out;
}

TEST(Cli, DistanceAndTailbite) {
    auto d = qconv("distance --code example1");
    EXPECT_EQ(d.status, 0);
    EXPECT_NE(d.out.find("d_perp = 3, N = 3, alpha = 1/1"), std::string::npos) << d.out;
    auto t = qconv("tailbite --spec " + spec("example3.spec"));
    EXPECT_EQ(t.status, 0);
    EXPECT_NE(t.out.find("L = 5"), std::string::npos) << t.out;
    EXPECT_NE(t.out.find("[15, 5, 3]"), std::string::npos) << t.out;
}

TEST(Cli, SimulateIsReproducible) {
    std::string args = "simulate --code five-qubit --p 0.02,0.05 --trials 3000 --window 10 --seed 7";
    auto a = qconv(args), b = qconv(args);
    EXPECT_EQ(a.status, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("code,decoder,p,trials,failures,rate,c_hat,ci,reference\n", 0), 0u) << a.out;
}
