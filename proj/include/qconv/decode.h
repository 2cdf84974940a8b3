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

#ifndef QCONV_DECODE_H
#define QCONV_DECODE_H

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qconv/block_code.h"

namespace qconv {

// Error sequences are flat: block b, position j at index b * n + j.  Over F2
// the symbols are 0/1 (one Pauli view: bit flips or phase flips).

/// S_t = <D^(t - nu) g, e> for t = 0 .. count-1: the generator shift whose
/// last block is t.  Hermitian over F4, plain parity over F2.
std::vector<F4> conv_syndromes(const ConvCode &code, std::span<const F4> e, int count);

/// S_t for the tail-biting code of length L (shifts wrap).
std::vector<F4> circular_syndromes(const ConvCode &code, std::span<const F4> e, int L);

/// Syndrome of an arbitrary block code: one value per generator row.
std::vector<F4> block_syndromes(const BlockCode &code, std::span<const F4> e);

/// Bit-flip (x) and phase-flip (z) views of an F4 label sequence.
std::vector<F4> x_view(std::span<const F4> e);
std::vector<F4> z_view(std::span<const F4> e);
std::vector<F4> combine_views(std::span<const F4> x, std::span<const F4> z);

struct DecodeResult {
    std::vector<F4> estimate;
    bool detected = false;
    std::vector<int> detected_at;  // syndrome index (or block) of each detection
};

struct SingleErrorEntry {
    std::vector<F4> pattern;  // n symbols
    int back = 0;             // block = anchor syndrome index - back
    std::vector<F4> syndromes;  // S_b .. S_b+nu caused by the pattern in block b
};

/// Table of every single-symbol error in one block (3n entries over F4, n over
/// F2), keyed by the nu + 1 syndromes starting at the first nonzero one.
class SingleErrorTable {
   public:
    explicit SingleErrorTable(const ConvCode &code);

    size_t size() const { return entries_.size(); }
    int window() const { return code_.nu + 1; }
    std::optional<SingleErrorEntry> lookup(std::span<const F4> window) const;
    const ConvCode &code() const { return code_; }
    /// (key, entry) pairs in insertion order.
    const std::vector<std::pair<std::vector<F4>, SingleErrorEntry>> &entries() const { return entries_; }

    /// Streaming decode.  At the first nonzero S_t the window S_t..S_t+nu is
    /// looked up; a hit is corrected and its syndromes cancelled, a miss is
    /// reported as detected and decoding resumes at the next zero syndrome.
    DecodeResult decode(std::span<const F4> syndromes, int blocks) const;

   private:
    ConvCode code_;
    std::vector<std::pair<std::vector<F4>, SingleErrorEntry>> entries_;
};

/// F4 streaming decoder on a window of `blocks` blocks (syndromes through
/// blocks + nu - 1).
DecodeResult table_decode_f4(const SingleErrorTable &table, std::span<const F4> syndromes, int blocks);

/// CSS streaming decoder on one binary syndrome stream.
DecodeResult table_decode_css(const SingleErrorTable &binary_table, std::span<const F4> bit_syndromes, int blocks);

/// CSS decoding of an F4 label sequence: x and z views decoded separately by
/// the binary table, then recombined.
DecodeResult css_decode_error(const SingleErrorTable &binary_table, std::span<const F4> error, int blocks);

/// Single-error lookup on a circular time axis: every single-symbol error's
/// L-syndrome is a key.  A miss (or a zero syndrome) is handled as detected
/// (or no error).
class CircularTableDecoder {
   public:
    CircularTableDecoder(const ConvCode &code, int L);

    int length() const { return L_; }
    std::vector<F4> syndrome(std::span<const F4> e) const { return circular_syndromes(code_, e, L_); }
    DecodeResult decode(std::span<const F4> syndrome) const;
    /// CSS: decode both views of an F4 error.
    DecodeResult decode_css(std::span<const F4> error) const;

   private:
    ConvCode code_;
    int L_;
    std::unordered_map<std::string, std::pair<int, F4>> table_;
};

/// Syndrome lookup for a block stabilizer code: every syndrome is mapped to a
/// minimum-weight error of weight <= max_weight (coset leaders, first found in
/// position order).  Other syndromes are reported as detected.
class BlockTableDecoder {
   public:
    explicit BlockTableDecoder(const BlockCode &stabilizer, int max_weight = 1);

    size_t size() const { return table_.size(); }
    const BlockCode &code() const { return code_; }
    std::vector<F4> syndrome(std::span<const F4> e) const { return block_syndromes(code_, e); }
    DecodeResult decode(std::span<const F4> syndrome) const;
    /// CSS: both views of an F4 error against a binary stabilizer code.
    DecodeResult decode_css(std::span<const F4> error) const;

   private:
    BlockCode code_;
    std::unordered_map<std::string, std::vector<F4>> table_;
};

enum class ViterbiMode {
    kWindow,          // errors in blocks 0..T-1, syndromes 0..T-1, free end state
    kTerminated,      // syndromes 0..T+nu-1, path ends in state 0
    kTailBiting,      // circular syndromes; best closed path over all start states
    kTailBitingWrap,  // circular, "around and around" from all states (suboptimal)
};

/// Coset-leader decoding on the trellis of the orthogonal code.  The decoder
/// adds to a fixed representative t(S) (pivot-column right inverse of the
/// syndrome map) the trellis path minimizing the total weight.
class CosetViterbi {
   public:
    CosetViterbi(const ConvCode &code, int blocks, ViterbiMode mode);

    int blocks() const { return T_; }
    int num_syndromes() const { return (int)H_.size(); }
    ViterbiMode mode() const { return mode_; }
    std::vector<F4> syndrome(std::span<const F4> e) const;
    std::vector<F4> representative(std::span<const F4> s) const;
    std::vector<F4> decode(std::span<const F4> s) const;

   private:
    struct Path {
        int weight;
        std::vector<uint32_t> x, z;  // per block output planes
    };
    // end < 0: free end state.
    Path run(const std::vector<uint32_t> &tx, const std::vector<uint32_t> &tz, uint32_t start, int end) const;
    Path run_wrap(const std::vector<uint32_t> &tx, const std::vector<uint32_t> &tz) const;

    ConvCode code_;
    int T_;
    ViterbiMode mode_;
    Trellis trellis_;
    std::vector<std::vector<F4>> H_;  // syndrome rows
    Inner ip_;
    // Right inverse: t(S) has S-combination M_i . S at pivot column pivots_[i].
    std::vector<std::vector<F4>> M_;
    std::vector<int> pivots_;
};

/// Success criterion: the residual e + e_hat lies in the stabilizer label
/// code, i.e. is orthogonal to every row of `orthogonal_code`.
bool residual_in_code(const BlockCode &orthogonal_code, std::span<const F4> residual);

/// True iff the finite sequence (blocks from 0) equals u(D) g(D) for a
/// polynomial u over the code's field, i.e. lies in the convolutional
/// stabilizer label code.
bool in_shift_span(const ConvCode &code, std::span<const F4> seq);

}  // namespace qconv

#endif
