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

#ifndef QCONV_BLOCK_CODE_H
#define QCONV_BLOCK_CODE_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qconv/trellis.h"

namespace qconv {

enum class Inner { kHermitian, kEuclidean };

/// Natural inner product of a field: Hermitian over F4, standard over F2.
inline Inner default_inner(Field f) { return f == Field::F4 ? Inner::kHermitian : Inner::kEuclidean; }
F4 inner(Inner ip, std::span<const F4> a, std::span<const F4> b);

/// Linear block code given by a (possibly redundant) generator list.
struct BlockCode {
    Field field = Field::F4;
    int length = 0;
    std::vector<std::vector<F4>> rows;

    // Set by tail_bite: the generators and length that produced the code, so
    // distances can be found on the circular trellis.
    std::vector<LaurentTuple> tb_generators;
    int tb_blocks = 0;

    static BlockCode from_rows(Field f, std::vector<std::vector<F4>> rows);
    static BlockCode parse(Field f, std::string_view text);  // rows separated by ';' or newlines

    int rank() const;
    /// Row-reduced basis (rank rows, same code).
    BlockCode basis() const;
    bool contains(std::span<const F4> v) const;
    std::string str() const;
};

/// Generator g shifted by `shift` blocks as a row of L * n symbols.  Blocks
/// outside [0, L) wrap when `wrap`, otherwise are dropped.
std::vector<F4> place_generator(const LaurentTuple &g, int shift, int L, bool wrap);

/// True iff the two codes have the same row space.
bool same_code(const BlockCode &a, const BlockCode &b);

/// Generators placed at blocks i .. i+deg (mod L) for i = 0..L-1, colliding
/// symbols added.  Throws if L is shorter than some generator's span.
BlockCode tail_bite(Field f, const std::vector<LaurentTuple> &gens, int L);
inline BlockCode tail_bite(const ConvCode &c, int L) { return tail_bite(c.field, {c.g}, L); }
inline BlockCode tail_bite(const OrthogonalBasis &b, int L) { return tail_bite(b.field, b.h, L); }

enum class Termination {
    kSubset,    // only shifts whose whole support lies in the L blocks
    kTruncate,  // every shift touching the interval, cut to it
};
BlockCode terminate(Field f, const std::vector<LaurentTuple> &gens, int L, Termination mode);
inline BlockCode terminate(const ConvCode &c, int L, Termination mode) { return terminate(c.field, {c.g}, L, mode); }
inline BlockCode terminate(const OrthogonalBasis &b, int L, Termination mode) {
    return terminate(b.field, b.h, L, mode);
}

BlockCode dual(const BlockCode &code, std::optional<Inner> ip = std::nullopt);

bool is_self_orthogonal_block(const BlockCode &code, std::optional<Inner> ip = std::nullopt);

struct BlockDistance {
    int d = 0;                // 0 for the zero code
    uint64_t count = 0;       // codewords of weight d
    uint64_t orbits = 0;      // classes under cyclic block shift (tail-biting codes), else = count
    std::string engine;
};

struct DistanceOptions {
    int enumerate_bits = 28;  // F2-dimension limit for codeword enumeration
    int max_weight = 12;      // limit for the low-weight error search
    bool count = true;
    int threads = 0;
};

/// Exact minimum distance and multiplicity.  Engines: codeword enumeration,
/// circular trellis (tail-biting codes), low-weight search against the dual.
/// Throws std::runtime_error if no engine is within budget.
BlockDistance block_min_distance(const BlockCode &code, const DistanceOptions &opts = {});

/// Calls visit for every weight-w vector x of length N with <h, x> = 0 for all
/// check rows h.  Throws if the estimated work exceeds max_work.
void for_each_low_weight_word(Field f, const std::vector<std::vector<F4>> &checks, int N, int w, Inner ip,
                              const std::function<void(const std::vector<F4> &)> &visit, double max_work = 4e9);

/// d_perp and N_d of the orthogonal code without a trellis: weight-w words
/// whose first nonzero block is block 0 and whose syndromes against every
/// shift of g vanish.  A minimum-weight word has no run of nu zero blocks,
/// so a window of (w - 1) nu + 1 blocks holds all of them.
DistanceReport free_distance_by_syndromes(const ConvCode &code, int max_weight = 12);

struct StabilizerSummary {
    int n = 0;
    int k = 0;
    int d = 0;
    bool css = false;
    std::string str() const;
};

/// Parameters [N, N - 2 dim B, d(B^perp)] of the stabilizer code built on B.
StabilizerSummary stabilizer_summary(const BlockCode &b, int dual_distance);

enum class TailBitingMode { kSyndromeDistinct, kDistancePreserving };

struct TailBitingResult {
    bool found = false;
    int L = 0;
    int bound = 0;            // search limit used
    int stable_L = 0;         // smallest L from which every length up to the bound keeps d_perp
    std::vector<int> profile; // d(B^perp) per length (distance mode; index = L)
    BlockCode b;
    BlockCode b_dual;
    int d_dual = 0;
    StabilizerSummary stabilizer;
    std::string note;
};

/// Smallest tail-biting length meeting the mode's criterion.  Syndrome mode:
/// all single-error syndromes distinct and nonzero.  Distance mode: the
/// tail-biting dual reaches the convolutional d_perp; searched up to
/// ceil(d_perp / alpha) unless max_L is given.
TailBitingResult min_tailbiting_length(const ConvCode &code, TailBitingMode mode, int max_L = 0, int threads = 0);

/// Single-error syndrome check for one length.
bool single_error_syndromes_distinct(const ConvCode &code, int L);

}  // namespace qconv

#endif
