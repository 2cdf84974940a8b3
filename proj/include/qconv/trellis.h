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

#ifndef QCONV_TRELLIS_H
#define QCONV_TRELLIS_H

#include <cstdint>
#include <string>
#include <vector>

#include "qconv/conv_code.h"

namespace qconv {

/// Controller-canonical trellis of the code generated by a set of
/// polynomial tuples (one shift register of length deg h_i per generator).
///
/// Edge e = state * edges_per_state + input.  The input index packs one
/// field symbol per generator; the state packs the register contents.
struct Trellis {
    Field field = Field::F4;
    int n = 0;
    int k = 0;
    std::vector<int> memory;  // register length per generator
    int nu = 0;               // total memory
    uint32_t num_states = 0;
    uint32_t edges_per_state = 0;
    std::vector<uint32_t> next;
    std::vector<uint32_t> out_x;
    std::vector<uint32_t> out_z;
    std::vector<uint8_t> weight;

    size_t num_edges() const { return next.size(); }
    /// Output n-block of an edge as symbols.
    std::vector<F4> output(size_t edge) const;
};

Trellis build_trellis(Field field, const std::vector<LaurentTuple> &generators);
inline Trellis build_trellis(const OrthogonalBasis &b) { return build_trellis(b.field, b.h); }

/// Syndrome-former trellis of the orthogonal code of a rate-1/n code: the
/// state holds the partial syndromes S_t .. S_t+nu-1 contributed by earlier
/// blocks, and an edge is any block that zeroes S_t.  Same state count as the
/// minimal-basis trellis, but needs no basis.  Edge 0 of state 0 is the zero
/// block.
Trellis syndrome_trellis(const ConvCode &code);

/// Exact nonnegative rational.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    static Rational make(int64_t num, int64_t den);
    bool operator==(const Rational &o) const { return num * o.den == o.num * den; }
    bool operator<(const Rational &o) const { return num * o.den < o.num * den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    static Rational parse(std::string_view s);
};

struct DistanceReport {
    int d_perp = 0;
    uint64_t n_d = 0;  // weight-d words modulo time shift
    Rational alpha;
    int cycle_weight = 0;  // one cycle attaining alpha, unreduced
    int cycle_length = 0;
    int bound() const;     // ceil(d_perp / alpha)
};

/// Free distance and number of minimum-weight words (first nonzero block at
/// time 0) of the code described by the trellis.  Throws if no nonzero path
/// remerges within weight_cutoff.
DistanceReport free_distance(const Trellis &t, int weight_cutoff = -1);

/// Minimum mean weight per block over cycles of the state graph, excluding
/// the zero-input self-loop at the zero state.
Rational slope(const Trellis &t, int *cycle_weight = nullptr, int *cycle_length = nullptr);

/// Full report (d, N, alpha).
DistanceReport analyze(const Trellis &t, int weight_cutoff = -1);

struct TailBitingDistance {
    int d = 0;          // 0 means some nonzero input maps to the zero word
    uint64_t count = 0; // number of codewords of weight d (exact)
};

/// Minimum weight over nonzero closed paths of length L (the tail-biting code
/// generated by the trellis generators wrapped modulo L blocks).
TailBitingDistance tailbiting_distance(const Trellis &t, int L, bool count = false, int threads = 0);

/// Distances for every L in [1, max_L] in one pass (no counts).  With cap >= 0,
/// values above cap are reported as cap + 1.
std::vector<int> tailbiting_distance_profile(const Trellis &t, int max_L, int threads = 0,
                                             int cap = -1);

/// Number of nonzero closed paths of length L and weight exactly w.
uint64_t tailbiting_weight_count(const Trellis &t, int L, int w, int threads = 0);

int default_threads();

}  // namespace qconv

#endif
