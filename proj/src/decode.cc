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

#include "qconv/decode.h"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "qconv/linalg.h"

namespace qconv {

namespace {

std::string key_of(std::span<const F4> v) {
    std::string k(v.size(), '0');
    for (size_t i = 0; i < v.size(); i++) {
        k[i] = (char)('0' + v[i].v);
    }
    return k;
}

std::vector<F4> single_values(Field f) {
    return f == Field::F4 ? std::vector<F4>{F4::one(), F4::w(), F4::wbar()} : std::vector<F4>{F4::one()};
}

void check_length(const ConvCode &code, std::span<const F4> e) {
    if (e.size() % code.n) {
        throw std::invalid_argument("error length " + std::to_string(e.size()) + " is not a multiple of n = " +
                                    std::to_string(code.n));
    }
}

}  // namespace

std::vector<F4> conv_syndromes(const ConvCode &code, std::span<const F4> e, int count) {
    check_length(code, e);
    int T = (int)e.size() / code.n;
    Inner ip = default_inner(code.field);
    std::vector<F4> s(count);
    for (int t = 0; t < count; t++) {
        F4 acc;
        for (int k = 0; k <= code.nu; k++) {
            int b = t - code.nu + k;  // block holding coefficient k
            if (b < 0 || b >= T) {
                continue;
            }
            for (int j = 0; j < code.n; j++) {
                F4 gc = code.g.c[j].coeff(k);
                F4 ej = e[(size_t)b * code.n + j];
                acc += (ip == Inner::kHermitian ? conj(gc) : gc) * ej;
            }
        }
        s[t] = acc;
    }
    return s;
}

std::vector<F4> circular_syndromes(const ConvCode &code, std::span<const F4> e, int L) {
    check_length(code, e);
    if ((int)e.size() != L * code.n) {
        throw std::invalid_argument("circular syndrome needs exactly L blocks");
    }
    Inner ip = default_inner(code.field);
    std::vector<F4> s(L);
    for (int t = 0; t < L; t++) {
        s[t] = inner(ip, place_generator(code.g, t - code.nu, L, true), e);
    }
    return s;
}

std::vector<F4> block_syndromes(const BlockCode &code, std::span<const F4> e) {
    Inner ip = default_inner(code.field);
    std::vector<F4> s;
    for (const auto &r : code.rows) {
        s.push_back(inner(ip, r, e));
    }
    return s;
}

std::vector<F4> x_view(std::span<const F4> e) {
    std::vector<F4> v(e.size());
    for (size_t i = 0; i < e.size(); i++) {
        v[i] = e[i].x() ? F4::one() : F4::zero();
    }
    return v;
}

std::vector<F4> z_view(std::span<const F4> e) {
    std::vector<F4> v(e.size());
    for (size_t i = 0; i < e.size(); i++) {
        v[i] = e[i].z() ? F4::one() : F4::zero();
    }
    return v;
}

std::vector<F4> combine_views(std::span<const F4> x, std::span<const F4> z) {
    std::vector<F4> v(x.size());
    for (size_t i = 0; i < x.size(); i++) {
        v[i] = F4((uint8_t)((x[i].is_zero() ? 0 : 1) | (z[i].is_zero() ? 0 : 2)));
    }
    return v;
}

SingleErrorTable::SingleErrorTable(const ConvCode &code) : code_(code) {
    Inner ip = default_inner(code.field);
    int nu = code.nu;
    for (int j = 0; j < code.n; j++) {
        for (F4 v : single_values(code.field)) {
            std::vector<F4> pattern(code.n);
            pattern[j] = v;
            // S_{b+k} sees coefficient nu - k of the generator in block b.
            std::vector<F4> c(nu + 1);
            for (int k = 0; k <= nu; k++) {
                F4 gc = code.g.c[j].coeff(nu - k);
                c[k] = (ip == Inner::kHermitian ? conj(gc) : gc) * v;
            }
            int m0 = 0;
            while (m0 <= nu && c[m0].is_zero()) {
                m0++;
            }
            if (m0 > nu) {
                continue;  // invisible error; the code cannot correct anything
            }
            std::vector<F4> key(nu + 1);
            for (int k = m0; k <= nu; k++) {
                key[k - m0] = c[k];
            }
            SingleErrorEntry e{pattern, m0, c};
            entries_.emplace_back(key, e);
        }
    }
}

std::optional<SingleErrorEntry> SingleErrorTable::lookup(std::span<const F4> window) const {
    for (const auto &[key, e] : entries_) {
        if (std::equal(key.begin(), key.end(), window.begin(), window.end())) {
            return e;
        }
    }
    return std::nullopt;
}

DecodeResult SingleErrorTable::decode(std::span<const F4> syndromes, int blocks) const {
    int n = code_.n, nu = code_.nu;
    std::vector<F4> s(syndromes.begin(), syndromes.end());
    DecodeResult r;
    r.estimate.assign((size_t)blocks * n, F4::zero());
    int len = (int)s.size();
    int t = 0;
    while (t < len) {
        if (s[t].is_zero()) {
            t++;
            continue;
        }
        std::vector<F4> window(nu + 1);
        for (int k = 0; k <= nu && t + k < len; k++) {
            window[k] = s[t + k];
        }
        auto hit = lookup(window);
        int b = hit ? t - hit->back : -1;
        if (!hit || b < 0 || b >= blocks) {
            r.detected = true;
            r.detected_at.push_back(t);
            while (t < len && !s[t].is_zero()) {
                t++;
            }
            continue;
        }
        for (int j = 0; j < n; j++) {
            r.estimate[(size_t)b * n + j] += hit->pattern[j];
        }
        for (int k = 0; k <= nu && b + k < len; k++) {
            s[b + k] += hit->syndromes[k];
        }
    }
    return r;
}

DecodeResult table_decode_f4(const SingleErrorTable &table, std::span<const F4> syndromes, int blocks) {
    if (table.code().field != Field::F4) {
        throw std::invalid_argument("the F4 table decoder needs an F4 code");
    }
    return table.decode(syndromes, blocks);
}

DecodeResult table_decode_css(const SingleErrorTable &binary_table, std::span<const F4> bit_syndromes, int blocks) {
    if (binary_table.code().field != Field::F2) {
        throw std::invalid_argument("the CSS table decoder needs a binary code");
    }
    return binary_table.decode(bit_syndromes, blocks);
}

DecodeResult css_decode_error(const SingleErrorTable &binary_table, std::span<const F4> error, int blocks) {
    const ConvCode &c = binary_table.code();
    int count = blocks + c.nu;
    auto x = x_view(error), z = z_view(error);
    auto rx = table_decode_css(binary_table, conv_syndromes(c, x, count), blocks);
    auto rz = table_decode_css(binary_table, conv_syndromes(c, z, count), blocks);
    DecodeResult r;
    r.estimate = combine_views(rx.estimate, rz.estimate);
    r.detected = rx.detected || rz.detected;
    r.detected_at = rx.detected_at;
    r.detected_at.insert(r.detected_at.end(), rz.detected_at.begin(), rz.detected_at.end());
    return r;
}

CircularTableDecoder::CircularTableDecoder(const ConvCode &code, int L) : code_(code), L_(L) {
    std::vector<F4> e((size_t)L * code.n);
    for (int p = 0; p < L * code.n; p++) {
        for (F4 v : single_values(code.field)) {
            e[p] = v;
            table_.emplace(key_of(syndrome(e)), std::pair<int, F4>{p, v});
            e[p] = F4::zero();
        }
    }
}

DecodeResult CircularTableDecoder::decode(std::span<const F4> syndrome) const {
    DecodeResult r;
    r.estimate.assign((size_t)L_ * code_.n, F4::zero());
    if (std::all_of(syndrome.begin(), syndrome.end(), [](F4 a) { return a.is_zero(); })) {
        return r;
    }
    auto it = table_.find(key_of(syndrome));
    if (it == table_.end()) {
        r.detected = true;
        r.detected_at.push_back(0);
        return r;
    }
    r.estimate[it->second.first] = it->second.second;
    return r;
}

DecodeResult CircularTableDecoder::decode_css(std::span<const F4> error) const {
    auto rx = decode(syndrome(x_view(error)));
    auto rz = decode(syndrome(z_view(error)));
    DecodeResult r;
    r.estimate = combine_views(rx.estimate, rz.estimate);
    r.detected = rx.detected || rz.detected;
    return r;
}

BlockTableDecoder::BlockTableDecoder(const BlockCode &stabilizer, int max_weight) : code_(stabilizer) {
    int N = code_.length;
    auto vals = single_values(code_.field);
    std::vector<F4> e(N);
    table_.emplace(key_of(syndrome(e)), e);
    // Weight-by-weight so the first error stored for a syndrome has least weight.
    for (int w = 1; w <= max_weight; w++) {
        std::vector<int> pos(w);
        for (int i = 0; i < w; i++) {
            pos[i] = i;
        }
        while (w <= N) {
            std::vector<int> digit(w, 0);
            while (true) {
                std::fill(e.begin(), e.end(), F4::zero());
                for (int i = 0; i < w; i++) {
                    e[pos[i]] = vals[digit[i]];
                }
                table_.emplace(key_of(syndrome(e)), e);
                int i = 0;
                while (i < w && ++digit[i] == (int)vals.size()) {
                    digit[i++] = 0;
                }
                if (i == w) {
                    break;
                }
            }
            int i = w - 1;
            while (i >= 0 && pos[i] == N - w + i) {
                i--;
            }
            if (i < 0) {
                break;
            }
            pos[i]++;
            for (int k = i + 1; k < w; k++) {
                pos[k] = pos[k - 1] + 1;
            }
        }
    }
}

DecodeResult BlockTableDecoder::decode(std::span<const F4> syndrome) const {
    DecodeResult r;
    auto it = table_.find(key_of(syndrome));
    if (it == table_.end()) {
        r.estimate.assign(code_.length, F4::zero());
        r.detected = true;
        r.detected_at.push_back(0);
        return r;
    }
    r.estimate = it->second;
    return r;
}

DecodeResult BlockTableDecoder::decode_css(std::span<const F4> error) const {
    auto rx = decode(syndrome(x_view(error)));
    auto rz = decode(syndrome(z_view(error)));
    DecodeResult r;
    r.estimate = combine_views(rx.estimate, rz.estimate);
    r.detected = rx.detected || rz.detected;
    return r;
}

CosetViterbi::CosetViterbi(const ConvCode &code, int blocks, ViterbiMode mode)
    : code_(code), T_(blocks), mode_(mode), ip_(default_inner(code.field)) {
    if (blocks < 1) {
        throw std::invalid_argument("Viterbi window must have at least one block");
    }
    trellis_ = build_trellis(orthogonal_basis(code));
    if (trellis_.n > 32) {
        throw std::invalid_argument("Viterbi decoding limited to n <= 32");
    }
    bool circular = mode == ViterbiMode::kTailBiting || mode == ViterbiMode::kTailBitingWrap;
    if (circular && blocks < code.nu + 1) {
        throw std::invalid_argument("tail-biting length shorter than the generator span");
    }
    int count = mode == ViterbiMode::kTerminated ? blocks + code.nu : blocks;
    for (int t = 0; t < count; t++) {
        H_.push_back(place_generator(code.g, t - code.nu, blocks, circular));
    }
    // Right inverse from the reduced form of [A | I], A the syndrome map.
    int N = blocks * code.n, m = (int)H_.size();
    F4Matrix aug(m, N + m);
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < N; j++) {
            aug.at(i, j) = ip_ == Inner::kHermitian ? conj(H_[i][j]) : H_[i][j];
        }
        aug.at(i, N + i) = F4::one();
    }
    auto piv = aug.rref();
    for (size_t i = 0; i < piv.size(); i++) {
        if (piv[i] >= N) {
            break;
        }
        pivots_.push_back(piv[i]);
        M_.emplace_back(aug.a.begin() + (ptrdiff_t)i * (N + m) + N, aug.a.begin() + (ptrdiff_t)(i + 1) * (N + m));
    }
}

std::vector<F4> CosetViterbi::syndrome(std::span<const F4> e) const {
    if ((int)e.size() != T_ * code_.n) {
        throw std::invalid_argument("error length does not match the decoding window");
    }
    std::vector<F4> s;
    for (const auto &h : H_) {
        s.push_back(inner(ip_, h, e));
    }
    return s;
}

std::vector<F4> CosetViterbi::representative(std::span<const F4> s) const {
    if (s.size() != H_.size()) {
        throw std::invalid_argument("syndrome length does not match the decoding window");
    }
    std::vector<F4> t((size_t)T_ * code_.n);
    for (size_t i = 0; i < pivots_.size(); i++) {
        F4 acc;
        for (size_t k = 0; k < s.size(); k++) {
            acc += M_[i][k] * s[k];
        }
        t[pivots_[i]] = acc;
    }
    return t;
}

CosetViterbi::Path CosetViterbi::run(const std::vector<uint32_t> &tx, const std::vector<uint32_t> &tz,
                                     uint32_t start, int end) const {
    const Trellis &t = trellis_;
    const uint32_t S = t.num_states, E = t.edges_per_state;
    const int kInf = INT_MAX / 2;
    std::vector<int> metric(S, kInf), nm(S);
    metric[start] = 0;
    std::vector<uint32_t> back((size_t)T_ * S);
    for (int tau = 0; tau < T_; tau++) {
        std::fill(nm.begin(), nm.end(), kInf);
        uint32_t *bp = &back[(size_t)tau * S];
        for (uint32_t s = 0; s < S; s++) {
            if (metric[s] >= kInf) {
                continue;
            }
            for (uint32_t u = 0; u < E; u++) {
                size_t e = (size_t)s * E + u;
                int w = metric[s] + __builtin_popcount((tx[tau] ^ t.out_x[e]) | (tz[tau] ^ t.out_z[e]));
                uint32_t ns = t.next[e];
                if (w < nm[ns]) {
                    nm[ns] = w;
                    bp[ns] = (uint32_t)e;
                }
            }
        }
        std::swap(metric, nm);
    }
    uint32_t fin = 0;
    if (end >= 0) {
        fin = (uint32_t)end;
    } else {
        for (uint32_t s = 1; s < S; s++) {
            if (metric[s] < metric[fin]) {
                fin = s;
            }
        }
    }
    Path p{metric[fin], std::vector<uint32_t>(T_), std::vector<uint32_t>(T_)};
    if (p.weight >= kInf) {
        return p;
    }
    uint32_t s = fin;
    for (int tau = T_ - 1; tau >= 0; tau--) {
        uint32_t e = back[(size_t)tau * S + s];
        p.x[tau] = t.out_x[e];
        p.z[tau] = t.out_z[e];
        s = e / E;
    }
    return p;
}

CosetViterbi::Path CosetViterbi::run_wrap(const std::vector<uint32_t> &tx, const std::vector<uint32_t> &tz) const {
    // Two laps from all states at metric zero; the final lap's survivor into
    // the best state is accepted when it closes on itself.
    const Trellis &t = trellis_;
    const uint32_t S = t.num_states, E = t.edges_per_state;
    std::vector<int> metric(S, 0), nm(S);
    std::vector<uint32_t> back((size_t)T_ * S);
    for (int lap = 0; lap < 2; lap++) {
        std::vector<int> lap_start = metric;
        for (int tau = 0; tau < T_; tau++) {
            std::fill(nm.begin(), nm.end(), INT_MAX / 2);
            uint32_t *bp = &back[(size_t)tau * S];
            for (uint32_t s = 0; s < S; s++) {
                for (uint32_t u = 0; u < E; u++) {
                    size_t e = (size_t)s * E + u;
                    int w = metric[s] + __builtin_popcount((tx[tau] ^ t.out_x[e]) | (tz[tau] ^ t.out_z[e]));
                    if (w < nm[t.next[e]]) {
                        nm[t.next[e]] = w;
                        bp[t.next[e]] = (uint32_t)e;
                    }
                }
            }
            std::swap(metric, nm);
        }
        if (lap == 1) {
            uint32_t fin = 0;
            for (uint32_t s = 1; s < S; s++) {
                if (metric[s] - lap_start[s] < metric[fin] - lap_start[fin]) {
                    fin = s;
                }
            }
            Path p{0, std::vector<uint32_t>(T_), std::vector<uint32_t>(T_)};
            uint32_t s = fin;
            for (int tau = T_ - 1; tau >= 0; tau--) {
                uint32_t e = back[(size_t)tau * S + s];
                p.x[tau] = t.out_x[e];
                p.z[tau] = t.out_z[e];
                s = e / E;
            }
            if (s == fin) {
                for (int tau = 0; tau < T_; tau++) {
                    p.weight += __builtin_popcount((tx[tau] ^ p.x[tau]) | (tz[tau] ^ p.z[tau]));
                }
                return p;
            }
            return run(tx, tz, fin, (int)fin);
        }
    }
    return run(tx, tz, 0, 0);
}

std::vector<F4> CosetViterbi::decode(std::span<const F4> s) const {
    auto rep = representative(s);
    int n = code_.n;
    std::vector<uint32_t> tx(T_), tz(T_);
    for (int b = 0; b < T_; b++) {
        for (int j = 0; j < n; j++) {
            F4 a = rep[(size_t)b * n + j];
            tx[b] |= (uint32_t)a.x() << j;
            tz[b] |= (uint32_t)a.z() << j;
        }
    }
    Path best;
    switch (mode_) {
        case ViterbiMode::kWindow:
            best = run(tx, tz, 0, -1);
            break;
        case ViterbiMode::kTerminated:
            best = run(tx, tz, 0, 0);
            break;
        case ViterbiMode::kTailBiting:
            best.weight = INT_MAX;
            for (uint32_t s0 = 0; s0 < trellis_.num_states; s0++) {
                Path p = run(tx, tz, s0, (int)s0);
                if (p.weight < best.weight) {
                    best = std::move(p);
                }
            }
            break;
        case ViterbiMode::kTailBitingWrap:
            best = run_wrap(tx, tz);
            break;
    }
    std::vector<F4> out = rep;
    for (int b = 0; b < T_; b++) {
        for (int j = 0; j < n; j++) {
            out[(size_t)b * n + j] += F4((uint8_t)(((best.x[b] >> j) & 1) | (((best.z[b] >> j) & 1) << 1)));
        }
    }
    return out;
}

bool residual_in_code(const BlockCode &orthogonal_code, std::span<const F4> residual) {
    Inner ip = default_inner(orthogonal_code.field);
    for (const auto &r : orthogonal_code.rows) {
        if (!inner(ip, r, residual).is_zero()) {
            return false;
        }
    }
    return true;
}

bool in_shift_span(const ConvCode &code, std::span<const F4> seq) {
    check_length(code, seq);
    int n = code.n, nu = code.nu;
    int T = (int)seq.size() / n;
    std::vector<F4> r(seq.begin(), seq.end());
    r.resize((size_t)(T + nu) * n);
    std::vector<std::vector<F4>> gb;
    for (int k = 0; k <= nu; k++) {
        gb.push_back(code.g.block(k));
    }
    int lead = 0;
    while (gb[0][lead].is_zero()) {
        lead++;
    }
    F4 lead_inv = inverse(gb[0][lead]);
    for (int b = 0; b < T; b++) {
        F4 u = r[(size_t)b * n + lead] * lead_inv;
        if (u.is_zero()) {
            for (int j = 0; j < n; j++) {
                if (!r[(size_t)b * n + j].is_zero()) {
                    return false;
                }
            }
            continue;
        }
        if (code.field == Field::F2 && u != F4::one()) {
            return false;
        }
        for (int k = 0; k <= nu; k++) {
            for (int j = 0; j < n; j++) {
                r[(size_t)(b + k) * n + j] += u * gb[k][j];
            }
        }
    }
    return std::all_of(r.begin(), r.end(), [](F4 a) { return a.is_zero(); });
}

}  // namespace qconv
