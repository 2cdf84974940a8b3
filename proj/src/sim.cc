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

#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>


namespace qconv {

namespace {

uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Estimator = std::function<std::vector<F4>(const std::vector<F4> &)>;

// Splits an F4 decoder of binary views into a CSS decoder.
Estimator css_views(std::function<std::vector<F4>(const std::vector<F4> &)> view_decoder) {
    return [view_decoder](const std::vector<F4> &e) {
        auto x = view_decoder(x_view(e));
        auto z = view_decoder(z_view(e));
        return combine_views(x, z);
    };
}

bool is_zero(const std::vector<F4> &v) {
    for (F4 a : v) {
        if (!a.is_zero()) {
            return false;
        }
    }
    return true;
}

// Block stabilizer code decoded block by block.
class BlockCodec : public Codec {
   public:
    BlockCodec(std::string name, DecoderKind dec, const BlockCode &stab, Estimator est)
        : name_(std::move(name)), dec_(dec), stab_(stab), est_(std::move(est)) {
        n_ = stab.length;
        k_ = n_ - 2 * stab.rank();
        checks_ = dual(stab);
    }
    std::string name() const override { return name_; }
    DecoderKind decoder() const override { return dec_; }
    bool css() const override { return stab_.field == Field::F2; }
    double reference() const override { return n_ * (n_ - 1) / 2.0 / k_; }
    int qubits(int window) const override { return window * n_; }
    int encoded(int window) const override { return window * k_; }

    int failures(const std::vector<QubitError> &errors, int) const override {
        int fails = 0;
        size_t i = 0;
        std::vector<F4> e(n_);
        while (i < errors.size()) {
            int blk = errors[i].qubit / n_;
            std::fill(e.begin(), e.end(), F4::zero());
            for (; i < errors.size() && errors[i].qubit / n_ == blk; i++) {
                e[errors[i].qubit % n_] = errors[i].label;
            }
            fails += !success(e);
        }
        return fails;
    }

   private:
    bool success(const std::vector<F4> &e) const {
        auto est = est_(e);
        std::vector<F4> r(n_);
        for (int j = 0; j < n_; j++) {
            r[j] = e[j] + est[j];
        }
        if (is_zero(r)) {
            return true;
        }
        if (css()) {
            return residual_in_code(checks_, x_view(r)) && residual_in_code(checks_, z_view(r));
        }
        return residual_in_code(checks_, r);
    }

    std::string name_;
    DecoderKind dec_;
    BlockCode stab_;
    BlockCode checks_;  // orthogonal code: the residual must be orthogonal to it
    Estimator est_;
    int n_ = 0, k_ = 0;
};

// Convolutional stabilizer code over a window followed by error-free guard
// blocks; a window fails when the residual leaves the generator's span.
class ConvCodec : public Codec {
   public:
    ConvCodec(std::string name, DecoderKind dec, const ConvCode &code)
        : name_(std::move(name)), dec_(dec), code_(code), table_(code) {
        guard_ = 2 * code.nu + 2;
    }
    std::string name() const override { return name_; }
    DecoderKind decoder() const override { return dec_; }
    bool css() const override { return code_.field == Field::F2; }
    double reference() const override {
        int n = code_.n;
        return n * (n - 1) / 2.0 + (double)n * n * code_.nu;
    }
    int qubits(int window) const override { return window * code_.n; }
    int encoded(int window) const override { return window * (code_.n - 2); }

    int failures(const std::vector<QubitError> &errors, int window) const override {
        if (errors.empty()) {
            return 0;
        }
        int total = window + guard_;
        std::vector<F4> e((size_t)total * code_.n);
        for (const auto &q : errors) {
            e[q.qubit] = q.label;
        }
        if (css()) {
            return !(view_ok(x_view(e), total) && view_ok(z_view(e), total));
        }
        return !view_ok(e, total);
    }

   private:
    bool view_ok(const std::vector<F4> &e, int total) const {
        if (is_zero(e)) {
            return true;
        }
        std::vector<F4> est;
        if (dec_ == DecoderKind::kViterbi) {
            auto v = viterbi(total);
            est = v->decode(v->syndrome(e));
        } else {
            est = table_.decode(conv_syndromes(code_, e, total + code_.nu), total).estimate;
        }
        for (size_t i = 0; i < e.size(); i++) {
            est[i] += e[i];
        }
        return in_shift_span(code_, est);
    }

    std::string name_;
    DecoderKind dec_;
    ConvCode code_;
    SingleErrorTable table_;
    std::shared_ptr<CosetViterbi> viterbi(int total) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto &v = viterbi_[total];
        if (!v) {
            v = std::make_shared<CosetViterbi>(code_, total, ViterbiMode::kTerminated);
        }
        return v;
    }

    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<CosetViterbi>> viterbi_;  // by window length
    int guard_ = 0;
};

const ConvCode &example1() {
    static const ConvCode c = ConvCode::parse(Field::F4, "11 1w 1W");
    return c;
}

const ConvCode &example3() {
    static const ConvCode c = ConvCode::parse(Field::F2, "111 101 1");
    return c;
}

std::unique_ptr<Codec> tail_biting_codec(const std::string &name, DecoderKind dec, const ConvCode &code, int L) {
    if (dec == DecoderKind::kDefault) {
        dec = DecoderKind::kCircular;
    }
    BlockCode stab = tail_bite(code, L);
    Estimator view;
    if (dec == DecoderKind::kCircular) {
        auto d = std::make_shared<CircularTableDecoder>(code, L);
        view = [d](const std::vector<F4> &e) { return d->decode(d->syndrome(e)).estimate; };
    } else if (dec == DecoderKind::kLookup) {
        auto d = std::make_shared<BlockTableDecoder>(stab);
        view = [d](const std::vector<F4> &e) { return d->decode(d->syndrome(e)).estimate; };
    } else if (dec == DecoderKind::kViterbi) {
        auto d = std::make_shared<CosetViterbi>(code, L, ViterbiMode::kTailBiting);
        view = [d](const std::vector<F4> &e) { return d->decode(d->syndrome(e)); };
    } else {
        throw std::invalid_argument("decoder " + decoder_name(dec) + " does not apply to " + name);
    }
    Estimator est = code.field == Field::F2 ? css_views(view) : view;
    return std::make_unique<BlockCodec>(name, dec, stab, est);
}

std::unique_ptr<Codec> lookup_codec(const std::string &name, DecoderKind dec, const BlockCode &stab) {
    if (dec == DecoderKind::kDefault) {
        dec = DecoderKind::kLookup;
    }
    if (dec != DecoderKind::kLookup) {
        throw std::invalid_argument("decoder " + decoder_name(dec) + " does not apply to " + name);
    }
    auto d = std::make_shared<BlockTableDecoder>(stab);
    Estimator view = [d](const std::vector<F4> &e) { return d->decode(d->syndrome(e)).estimate; };
    return std::make_unique<BlockCodec>(name, dec, stab, stab.field == Field::F2 ? css_views(view) : view);
}

}  // namespace

SplitMix64::SplitMix64(uint64_t seed, uint64_t stream) : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

uint64_t SplitMix64::operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
}

void Channel::validate() const {
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("error probability must lie in [0, 1)");
    }
    if (px < 0 || py < 0 || pz < 0 || std::abs(px + py + pz - 1) > 1e-9) {
        throw std::invalid_argument("X/Y/Z probabilities must be nonnegative and sum to 1");
    }
}

DecoderKind parse_decoder(std::string_view text) {
    if (text == "default") return DecoderKind::kDefault;
    if (text == "lookup") return DecoderKind::kLookup;
    if (text == "stream") return DecoderKind::kStream;
    if (text == "circular") return DecoderKind::kCircular;
    if (text == "viterbi") return DecoderKind::kViterbi;
    throw std::invalid_argument("unknown decoder '" + std::string(text) + "'");
}

std::string decoder_name(DecoderKind d) {
    switch (d) {
        case DecoderKind::kDefault:
            return "default";
        case DecoderKind::kLookup:
            return "lookup";
        case DecoderKind::kStream:
            return "stream";
        case DecoderKind::kCircular:
            return "circular";
        case DecoderKind::kViterbi:
            return "viterbi";
    }
    return "?";
}

std::vector<std::string> codec_names() {
    return {"five-qubit", "conv-f4", "tb-9-3-3", "steane", "conv-css", "tb-15-5-3"};
}

std::unique_ptr<Codec> make_codec(std::string_view code, DecoderKind dec) {
    std::string name(code);
    if (name == "five-qubit") {
        return lookup_codec(name, dec, BlockCode::parse(Field::F4, "0 W w w W; W 0 W w w"));
    }
    if (name == "steane") {
        return lookup_codec(name, dec, BlockCode::parse(Field::F2, "0001111; 0110011; 1010101"));
    }
    if (name == "tb-9-3-3") {
        return tail_biting_codec(name, dec, example1(), 3);
    }
    if (name == "tb-15-5-3") {
        return tail_biting_codec(name, dec, example3(), 5);
    }
    if (name == "conv-f4" || name == "conv-css") {
        if (dec == DecoderKind::kDefault) {
            dec = DecoderKind::kStream;
        }
        if (dec != DecoderKind::kStream && dec != DecoderKind::kViterbi) {
            throw std::invalid_argument("decoder " + decoder_name(dec) + " does not apply to " + name);
        }
        return std::make_unique<ConvCodec>(name, dec, name == "conv-f4" ? example1() : example3());
    }
    throw std::invalid_argument("unknown code '" + name + "'");
}

std::vector<QubitError> sample_errors(const Channel &channel, int qubits, SplitMix64 &rng) {
    std::vector<QubitError> out;
    if (channel.p <= 0) {
        return out;
    }
    std::geometric_distribution<int> skip(channel.p);
    std::uniform_real_distribution<double> u(0, 1);
    long long q = -1;
    while (true) {
        q += 1 + (long long)skip(rng);
        if (q >= qubits) {
            break;
        }
        double r = u(rng);
        Pauli pauli = r < channel.px ? Pauli::X : r < channel.px + channel.py ? Pauli::Y : Pauli::Z;
        out.push_back({(int)q, label(pauli)});
    }
    return out;
}

SimReport simulate(const Codec &codec, const Channel &channel, const SimOptions &opts) {
    channel.validate();
    if (opts.window < 1) {
        throw std::invalid_argument("window must be at least one block");
    }
    int threads = opts.threads > 0 ? opts.threads : default_threads();
    int qubits = codec.qubits(opts.window);
    const uint64_t chunk = 4096;
    uint64_t chunks = (opts.trials + chunk - 1) / chunk;
    std::atomic<uint64_t> next{0}, fails{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        try {
            uint64_t local = 0;
            for (uint64_t c; (c = next++) < chunks;) {
                uint64_t end = std::min(opts.trials, (c + 1) * chunk);
                for (uint64_t t = c * chunk; t < end; t++) {
                    SplitMix64 rng(opts.seed, t);
                    local += codec.failures(sample_errors(channel, qubits, rng), opts.window);
                }
            }
            fails += local;
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            err = std::current_exception();
            next = chunks;
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; i++) {
        pool.emplace_back(worker);
    }
    for (auto &th : pool) {
        th.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
    SimReport r;
    r.code = codec.name();
    r.decoder = decoder_name(codec.decoder());
    r.p = channel.p;
    r.trials = opts.trials;
    r.failures = fails;
    r.encoded = opts.trials * (uint64_t)codec.encoded(opts.window);
    r.rate = r.encoded ? (double)r.failures / (double)r.encoded : 0;
    if (channel.p > 0 && r.encoded) {
        double scale = (double)r.encoded * channel.p * channel.p;
        r.c_hat = r.failures / scale;
        r.ci = 1.96 * std::sqrt((double)std::max<uint64_t>(r.failures, 1)) / scale;
    }
    r.reference = codec.reference() * (codec.css() && opts.css_adjusted_reference ? 7.0 / 9.0 : 1.0);
    return r;
}

std::vector<SimReport> compare_suite(const std::vector<double> &p_grid, const std::vector<std::string> &codes,
                                     const SimOptions &opts) {
    std::vector<SimReport> out;
    for (const auto &name : codes) {
        auto codec = make_codec(name);
        for (double p : p_grid) {
            out.push_back(simulate(*codec, Channel{p}, opts));
        }
    }
    return out;
}

int single_error_failures(const Codec &codec, int window) {
    int bad = 0;
    for (int q = 0; q < codec.qubits(window); q++) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            bad += codec.failures({{q, label(p)}}, window) != 0;
        }
    }
    return bad;
}

std::string sim_csv_header() { return "code,decoder,p,trials,failures,rate,c_hat,ci,reference"; }

std::string sim_csv_row(const SimReport &r) {
    std::ostringstream os;
    os.precision(6);
    os << r.code << ',' << r.decoder << ',' << r.p << ',' << r.trials << ',' << r.failures << ',' << r.rate << ','
       << r.c_hat << ',' << r.ci << ',' << r.reference;
    return os.str();
}

}  // namespace qconv
