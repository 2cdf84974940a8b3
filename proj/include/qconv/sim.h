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

#ifndef QCONV_SIM_H
#define QCONV_SIM_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qconv/decode.h"

namespace qconv {

/// Counter-based generator: a splitmix64 stream keyed by (seed, stream index).
class SplitMix64 {
   public:
    using result_type = uint64_t;
    SplitMix64(uint64_t seed, uint64_t stream);
    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return ~uint64_t{0}; }
    uint64_t operator()();

   private:
    uint64_t state_;
};

/// i.i.d. single-qubit Pauli channel.
struct Channel {
    double p = 0;
    double px = 1.0 / 3, py = 1.0 / 3, pz = 1.0 / 3;  // given an error
    void validate() const;
};

/// A sparse error: qubit index and F4 label.
struct QubitError {
    int qubit;
    F4 label;
};

enum class DecoderKind { kDefault, kLookup, kStream, kCircular, kViterbi };
DecoderKind parse_decoder(std::string_view text);
std::string decoder_name(DecoderKind d);

/// A code together with its decoder, as seen by the simulator.  A trial is a
/// window of `window` blocks; block codes are decoded block by block and each
/// failing block counts, convolutional codes count one failure per window.
class Codec {
   public:
    virtual ~Codec() = default;
    virtual std::string name() const = 0;
    virtual DecoderKind decoder() const = 0;
    virtual bool css() const = 0;
    /// Order-of coefficient per encoded qubit (two errors in a decoding unit).
    virtual double reference() const = 0;
    virtual int qubits(int window) const = 0;
    virtual int encoded(int window) const = 0;
    /// Failures for a sorted sparse error over one trial.
    virtual int failures(const std::vector<QubitError> &errors, int window) const = 0;
};

/// Registered codes: five-qubit, steane, conv-f4 (Example 1), tb-9-3-3,
/// conv-css (Example 3), tb-15-5-3.  Throws std::invalid_argument for an
/// unknown code or an incompatible decoder.
std::unique_ptr<Codec> make_codec(std::string_view code, DecoderKind decoder = DecoderKind::kDefault);
std::vector<std::string> codec_names();

struct SimOptions {
    uint64_t trials = 100000;
    int window = 200;
    uint64_t seed = 1;
    int threads = 0;
    /// Report the CSS reference scaled by 7/9 (X and Z errors on different
    /// qubits are corrected separately).  Off by default.
    bool css_adjusted_reference = false;
};

struct SimReport {
    std::string code;
    std::string decoder;
    double p = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint64_t encoded = 0;  // encoded qubits over all trials
    double rate = 0;       // failures per encoded qubit
    double c_hat = 0;      // rate / p^2
    double ci = 0;         // 95% half-width of c_hat (Poisson)
    double reference = 0;
};

SimReport simulate(const Codec &codec, const Channel &channel, const SimOptions &opts);

std::vector<SimReport> compare_suite(const std::vector<double> &p_grid, const std::vector<std::string> &codes,
                                     const SimOptions &opts);

/// Every single-qubit error (all positions of a small window, X/Y/Z) decoded
/// without failure.  Returns the number of failing patterns.
int single_error_failures(const Codec &codec, int window = 6);

/// Samples the sorted error of one trial.
std::vector<QubitError> sample_errors(const Channel &channel, int qubits, SplitMix64 &rng);

std::string sim_csv_header();
std::string sim_csv_row(const SimReport &r);

}  // namespace qconv

#endif
