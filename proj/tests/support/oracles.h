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

// Independent brute-force references shared by the unit tests and the
// acceptance runner.

#ifndef QCONV_TESTS_ORACLES_H
#define QCONV_TESTS_ORACLES_H

#include <string>
#include <vector>

#include "qconv/decode.h"

namespace qconv::testing {

inline ConvCode example1() { return ConvCode::parse(Field::F4, "11 1w 1W"); }
inline ConvCode example3() { return ConvCode::parse(Field::F2, "111 101 1"); }

/// Minimum error weight per syndrome, by enumerating every error in a window
/// of `blocks` blocks; syndromes S_0..S_{blocks-1} (errors beyond the window
/// are absent).  Index = syndrome packed 2 bits per symbol, S_0 lowest.
/// -1 marks syndromes no error reaches.
std::vector<int> brute_coset_leader_weights(const ConvCode &code, int blocks);

uint64_t pack_syndrome(std::span<const F4> s);
std::vector<F4> unpack_syndrome(uint64_t key, int count);

/// Outcome of an exhaustive check: how many cases ran, and the failures.
struct Tally {
    int cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return cases > 0 && failures.empty(); }
    void fail(std::string what) {
        if (failures.size() < 20) {
            failures.push_back(std::move(what));
        }
    }
    std::string summary() const;
};

/// Viterbi output weight (and syndrome) against brute force over every
/// syndrome of a `blocks`-block window.
Tally viterbi_vs_bruteforce(const ConvCode &code, int blocks);

/// Every weight-1 error at every block offset of a window decodes exactly
/// with the streaming table decoder (F4) or its two-view CSS form (F2).
Tally streaming_single_errors(const ConvCode &code, int window);

/// Every weight-1 error on L blocks is corrected by the circular decoder.
Tally circular_single_errors(const ConvCode &code, int L);

/// Syndrome windows that match no single error must be flagged as detected.
Tally detection_cases();

}  // namespace qconv::testing

#endif
