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

#include "qconv/trellis.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qconv {

std::vector<F4> Trellis::output(size_t edge) const {
    std::vector<F4> b(n);
    for (int j = 0; j < n; j++) {
        b[j] = F4((uint8_t)(((out_x[edge] >> j) & 1) | (((out_z[edge] >> j) & 1) << 1)));
    }
    return b;
}

Trellis build_trellis(Field field, const std::vector<LaurentTuple> &generators) {
    if (generators.empty()) {
        throw std::invalid_argument("trellis needs at least one generator");
    }
    Trellis t;
    t.field = field;
    t.n = generators[0].n();
    t.k = (int)generators.size();
    if (t.n > 32) {
        throw std::invalid_argument("trellis blocks are limited to 32 symbols");
    }
    for (const auto &h : generators) {
        if (h.n() != t.n || !h.is_polynomial() || h.is_zero()) {
            throw std::invalid_argument("trellis generators must be nonzero polynomial tuples of equal width");
        }
        if (field == Field::F2 && h.field != Field::F2) {
            for (const auto &p : h.c) {
                if (!p.is_binary()) {
                    throw std::invalid_argument("non-binary generator in a binary trellis");
                }
            }
        }
        t.memory.push_back(h.deg());
    }
    t.nu = std::accumulate(t.memory.begin(), t.memory.end(), 0);
    const int b = field == Field::F2 ? 1 : 2;
    if (b * t.nu > 24 || b * t.k > 20 || b * (t.nu + t.k) > 28) {
        throw std::invalid_argument("trellis too large (" + std::to_string(b * t.nu) + " state bits, " +
                                    std::to_string(b * t.k) + " input bits)");
    }
    t.num_states = 1u << (b * t.nu);
    t.edges_per_state = 1u << (b * t.k);
    size_t ne = (size_t)t.num_states * t.edges_per_state;
    t.next.resize(ne);
    t.out_x.resize(ne);
    t.out_z.resize(ne);
    t.weight.resize(ne);

    auto symbol = [&](uint32_t bits) {
        return field == Field::F2 ? (bits ? F4::one() : F4::zero()) : F4((uint8_t)bits);
    };
    const uint32_t smask = (1u << b) - 1;
    // Coefficient block planes of generator i at degree p.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> coef(t.k);
    std::vector<int> offset(t.k);
    for (int i = 0, off = 0; i < t.k; i++) {
        offset[i] = off;
        off += b * t.memory[i];
        for (int p = 0; p <= t.memory[i]; p++) {
            uint32_t x = 0, z = 0;
            for (int j = 0; j < t.n; j++) {
                F4 c = generators[i].c[j].coeff(p);
                x |= (uint32_t)c.x() << j;
                z |= (uint32_t)c.z() << j;
            }
            coef[i].push_back({x, z});
        }
    }
    for (uint32_t s = 0; s < t.num_states; s++) {
        for (uint32_t u = 0; u < t.edges_per_state; u++) {
            uint64_t ox = 0, oz = 0;
            uint32_t ns = 0;
            for (int i = 0; i < t.k; i++) {
                F4 ui = symbol((u >> (b * i)) & smask);
                auto [cx, cz] = scale_planes(ui, coef[i][0].first, coef[i][0].second);
                ox ^= cx;
                oz ^= cz;
                uint32_t reg = (s >> offset[i]) & ((1u << (b * t.memory[i])) - 1);
                for (int p = 1; p <= t.memory[i]; p++) {
                    F4 sp = symbol((reg >> (b * (p - 1))) & smask);
                    auto [px, pz] = scale_planes(sp, coef[i][p].first, coef[i][p].second);
                    ox ^= px;
                    oz ^= pz;
                }
                if (t.memory[i] > 0) {
                    uint32_t nreg = ((reg << b) | ((u >> (b * i)) & smask)) & ((1u << (b * t.memory[i])) - 1);
                    ns |= nreg << offset[i];
                }
            }
            size_t e = (size_t)s * t.edges_per_state + u;
            t.next[e] = ns;
            t.out_x[e] = (uint32_t)ox;
            t.out_z[e] = (uint32_t)oz;
            t.weight[e] = (uint8_t)__builtin_popcount((uint32_t)(ox | oz));
        }
    }
    return t;
}

Trellis syndrome_trellis(const ConvCode &code) {
    Trellis t;
    t.field = code.field;
    t.n = code.n;
    t.k = code.n - 1;
    t.nu = code.nu;
    const int b = code.field == Field::F2 ? 1 : 2;
    if (code.n > 16 || b * t.nu > 24 || b * t.k > 20 || b * (t.nu + t.k) > 28) {
        throw std::invalid_argument("syndrome trellis too large (" + std::to_string(b * t.nu) + " state bits, " +
                                    std::to_string(b * t.k) + " input bits)");
    }
    t.memory.assign(1, t.nu);
    t.num_states = 1u << (b * t.nu);
    t.edges_per_state = 1u << (b * t.k);
    const uint32_t inputs = 1u << (b * t.n), smask = (1u << b) - 1;
    auto symbol = [&](uint32_t bits) {
        return code.field == Field::F2 ? (bits ? F4::one() : F4::zero()) : F4((uint8_t)bits);
    };
    // Per input block: planes and the packed contributions c_0 .. c_nu, where
    // c_k goes to S_{t+k} (coefficient nu - k of g, conjugated over F4).
    std::vector<uint32_t> ex(inputs), ez(inputs);
    std::vector<uint64_t> contrib(inputs);
    std::vector<std::vector<uint32_t>> by_c0(1u << b);
    for (uint32_t u = 0; u < inputs; u++) {
        uint64_t c = 0;
        for (int k = 0; k <= t.nu; k++) {
            F4 acc;
            for (int j = 0; j < t.n; j++) {
                F4 e = symbol((u >> (b * j)) & smask);
                F4 g = code.g.c[j].coeff(t.nu - k);
                acc += (code.field == Field::F4 ? conj(g) : g) * e;
                if (k == 0) {
                    ex[u] |= (uint32_t)e.x() << j;
                    ez[u] |= (uint32_t)e.z() << j;
                }
            }
            uint64_t bits = code.field == Field::F2 ? (acc.is_zero() ? 0 : 1) : acc.v;
            c |= bits << (b * k);
        }
        contrib[u] = c;
        by_c0[c & smask].push_back(u);
    }
    for (const auto &v : by_c0) {
        if (v.size() != t.edges_per_state) {
            throw std::invalid_argument("generator has no component of full degree");
        }
    }
    size_t ne = (size_t)t.num_states * t.edges_per_state;
    t.next.resize(ne);
    t.out_x.resize(ne);
    t.out_z.resize(ne);
    t.weight.resize(ne);
    for (uint32_t s = 0; s < t.num_states; s++) {
        const auto &valid = by_c0[s & smask];
        for (uint32_t i = 0; i < t.edges_per_state; i++) {
            uint32_t u = valid[i];
            size_t e = (size_t)s * t.edges_per_state + i;
            t.next[e] = (uint32_t)((s >> b) ^ (contrib[u] >> b));
            t.out_x[e] = ex[u];
            t.out_z[e] = ez[u];
            t.weight[e] = (uint8_t)__builtin_popcount(ex[u] | ez[u]);
        }
    }
    return t;
}

}  // namespace qconv
