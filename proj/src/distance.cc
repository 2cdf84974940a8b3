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

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qconv/trellis.h"

namespace qconv {

int default_threads() {
    if (const char *env = std::getenv("QCONV_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) {
            return t;
        }
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

Rational Rational::make(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) {
        g = 1;
    }
    return {num / g, den / g};
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return make(std::stoll(std::string(s)), 1);
    }
    return {std::stoll(std::string(s.substr(0, slash))), std::stoll(std::string(s.substr(slash + 1)))};
}

int DistanceReport::bound() const {
    if (alpha.num <= 0) {
        return INT_MAX;
    }
    // ceil(d * den / num)
    int64_t a = (int64_t)d_perp * alpha.den;
    return (int)((a + alpha.num - 1) / alpha.num);
}

DistanceReport free_distance(const Trellis &t, int weight_cutoff) {
    int cutoff = weight_cutoff > 0 ? weight_cutoff : std::max(4 * t.nu * t.n, 2 * t.n);
    const uint32_t S = t.num_states, E = t.edges_per_state;

    // Dial's algorithm from the successors of the zero state under nonzero inputs.
    std::vector<int> dist(S, INT_MAX);
    std::vector<std::vector<uint32_t>> bucket(cutoff + 1);
    int d = INT_MAX;
    for (uint32_t u = 1; u < E; u++) {
        uint32_t ns = t.next[u];
        int w = t.weight[u];
        if (ns == 0) {
            d = std::min(d, w);
        } else if (w <= cutoff && w < dist[ns]) {
            dist[ns] = w;
            bucket[w].push_back(ns);
        }
    }
    for (int w = 0; w <= cutoff && w < d; w++) {
        for (size_t i = 0; i < bucket[w].size(); i++) {
            uint32_t s = bucket[w][i];
            if (dist[s] != w) {
                continue;
            }
            for (uint32_t u = 0; u < E; u++) {
                size_t e = (size_t)s * E + u;
                int nw = w + t.weight[e];
                uint32_t ns = t.next[e];
                if (ns == 0) {
                    d = std::min(d, nw);
                } else if (nw <= cutoff && nw < dist[ns]) {
                    dist[ns] = nw;
                    bucket[nw].push_back(ns);
                }
            }
        }
    }
    if (d == INT_MAX || d > cutoff) {
        throw std::runtime_error("no nonzero path remerged within weight cutoff " + std::to_string(cutoff));
    }

    // Count paths of weight exactly d: leave state 0 with a nonzero input,
    // finish on the first return to state 0.  Weight-d paths cannot revisit
    // state 0 mid-way, since that would split them into two codewords.
    std::vector<std::vector<uint64_t>> cnt(d + 1, std::vector<uint64_t>(S)), nxt = cnt;
    uint64_t finished = 0;
    bool live = false;
    for (uint32_t u = 1; u < E; u++) {
        int w = t.weight[u];
        if (w > d) {
            continue;
        }
        if (t.next[u] == 0) {
            finished += w == d;
        } else {
            cnt[w][t.next[u]]++;
            live = true;
        }
    }
    int steps = 0;
    const int max_steps = (int)S * (d + 1) + 2;
    while (live) {
        if (++steps > max_steps) {
            throw std::runtime_error("weight-bounded path count did not terminate (catastrophic trellis?)");
        }
        live = false;
        for (auto &row : nxt) {
            std::fill(row.begin(), row.end(), 0);
        }
        for (int w = 0; w <= d; w++) {
            for (uint32_t s = 1; s < S; s++) {
                uint64_t c = cnt[w][s];
                if (!c) {
                    continue;
                }
                for (uint32_t u = 0; u < E; u++) {
                    size_t e = (size_t)s * E + u;
                    int nw = w + t.weight[e];
                    if (nw > d) {
                        continue;
                    }
                    if (t.next[e] == 0) {
                        if (nw == d) {
                            finished += c;
                        }
                    } else {
                        nxt[nw][t.next[e]] += c;
                        live = true;
                    }
                }
            }
        }
        std::swap(cnt, nxt);
    }
    DistanceReport r;
    r.d_perp = d;
    r.n_d = finished;
    return r;
}

Rational slope(const Trellis &t, int *cycle_weight, int *cycle_length) {
    const uint32_t V = t.num_states, E = t.edges_per_state;
    if (V > 8192) {
        throw std::invalid_argument("slope computation limited to 8192 states");
    }
    // Karp: D[k][v] = minimum weight of a k-edge walk ending at v.
    const int kInf = INT_MAX / 4;
    std::vector<int> D((size_t)(V + 1) * V, kInf);
    for (uint32_t v = 0; v < V; v++) {
        D[v] = 0;
    }
    for (uint32_t k = 1; k <= V; k++) {
        const int *prev = &D[(size_t)(k - 1) * V];
        int *cur = &D[(size_t)k * V];
        for (uint32_t s = 0; s < V; s++) {
            int ps = prev[s];
            if (ps >= kInf) {
                continue;
            }
            for (uint32_t u = (s == 0 ? 1 : 0); u < E; u++) {
                size_t e = (size_t)s * E + u;
                int nw = ps + t.weight[e];
                uint32_t ns = t.next[e];
                if (nw < cur[ns]) {
                    cur[ns] = nw;
                }
            }
        }
    }
    bool have = false;
    Rational best{0, 1};
    for (uint32_t v = 0; v < V; v++) {
        int dv = D[(size_t)V * V + v];
        if (dv >= kInf) {
            continue;
        }
        bool hv = false;
        Rational worst{0, 1};
        for (uint32_t k = 0; k < V; k++) {
            int dk = D[(size_t)k * V + v];
            if (dk >= kInf) {
                continue;
            }
            Rational r = Rational::make(dv - dk, V - k);
            if (!hv || worst < r) {
                worst = r;
                hv = true;
            }
        }
        if (hv && (!have || worst < best)) {
            best = worst;
            have = true;
        }
    }
    if (!have) {
        throw std::runtime_error("state graph has no cycles");
    }
    D.clear();
    D.shrink_to_fit();

    if (cycle_weight || cycle_length) {
        // Reweight by den*w - num; the minimum cycle mean becomes 0.  Potentials
        // from Bellman-Ford make every edge nonnegative, and a cycle of tight
        // edges attains the slope.
        std::vector<int64_t> pi(V, 0);
        auto rw = [&](size_t e) { return best.den * (int64_t)t.weight[e] - best.num; };
        for (uint32_t it = 0; it <= V; it++) {
            bool changed = false;
            for (uint32_t s = 0; s < V; s++) {
                for (uint32_t u = (s == 0 ? 1 : 0); u < E; u++) {
                    size_t e = (size_t)s * E + u;
                    int64_t nv = pi[s] + rw(e);
                    if (nv < pi[t.next[e]]) {
                        pi[t.next[e]] = nv;
                        changed = true;
                    }
                }
            }
            if (!changed) {
                break;
            }
        }
        // Shortest tight cycle through any vertex, via BFS on the tight subgraph.
        int best_len = INT_MAX, best_w = 0;
        for (uint32_t root = 0; root < V; root++) {
            std::vector<int> depth(V, -1), wsum(V, 0);
            std::vector<uint32_t> q{root};
            depth[root] = 0;
            for (size_t qi = 0; qi < q.size(); qi++) {
                uint32_t s = q[qi];
                if (depth[s] + 1 >= best_len) {
                    break;
                }
                for (uint32_t u = (s == 0 ? 1 : 0); u < E; u++) {
                    size_t e = (size_t)s * E + u;
                    uint32_t ns = t.next[e];
                    if (pi[s] + rw(e) != pi[ns]) {
                        continue;
                    }
                    if (ns == root) {
                        if (depth[s] + 1 < best_len) {
                            best_len = depth[s] + 1;
                            best_w = wsum[s] + t.weight[e];
                        }
                        continue;
                    }
                    if (depth[ns] < 0) {
                        depth[ns] = depth[s] + 1;
                        wsum[ns] = wsum[s] + t.weight[e];
                        q.push_back(ns);
                    }
                }
            }
            if (best_len == 1) {
                break;
            }
        }
        if (cycle_weight) {
            *cycle_weight = best_w;
        }
        if (cycle_length) {
            *cycle_length = best_len == INT_MAX ? 0 : best_len;
        }
    }
    return best;
}

DistanceReport analyze(const Trellis &t, int weight_cutoff) {
    DistanceReport r = free_distance(t, weight_cutoff);
    r.alpha = slope(t, &r.cycle_weight, &r.cycle_length);
    return r;
}

namespace {

constexpr int kTbInf = INT_MAX / 4;

// Closed-path minimum weights for start state s, for every length 1..max_L.
// With counting, also the number of minimum paths at max_L.
void tb_from_state(const Trellis &t, uint32_t s0, int max_L, int cap, std::vector<int> &best_per_L,
                   std::vector<uint64_t> *count_per_L) {
    const uint32_t S = t.num_states, E = t.edges_per_state;
    std::vector<int> cur(S, kTbInf), nxt(S);
    std::vector<uint64_t> cc, nc;
    if (count_per_L) {
        cc.assign(S, 0);
        nc.assign(S, 0);
    }
    // For s0 = 0 the all-zero path is tracked implicitly (weight 0 at state 0)
    // and only paths that have left it populate cur.
    bool zero_start = s0 == 0;
    if (!zero_start) {
        cur[s0] = 0;
        if (count_per_L) {
            cc[s0] = 1;
        }
    }
    for (int L = 1; L <= max_L; L++) {
        std::fill(nxt.begin(), nxt.end(), kTbInf);
        if (count_per_L) {
            std::fill(nc.begin(), nc.end(), 0);
        }
        auto relax = [&](uint32_t s, int base, uint64_t c, uint32_t ufirst) {
            for (uint32_t u = ufirst; u < E; u++) {
                size_t e = (size_t)s * E + u;
                int nw = base + t.weight[e];
                if (nw > cap) {
                    continue;
                }
                uint32_t ns = t.next[e];
                if (nw < nxt[ns]) {
                    nxt[ns] = nw;
                    if (count_per_L) {
                        nc[ns] = c;
                    }
                } else if (count_per_L && nw == nxt[ns]) {
                    nc[ns] += c;
                }
            }
        };
        if (zero_start) {
            relax(0, 0, 1, 1);
        }
        for (uint32_t s = 0; s < S; s++) {
            if (cur[s] < kTbInf) {
                relax(s, cur[s], count_per_L ? cc[s] : 0, 0);
            }
        }
        std::swap(cur, nxt);
        if (count_per_L) {
            std::swap(cc, nc);
        }
        if (cur[s0] < best_per_L[L]) {
            best_per_L[L] = cur[s0];
            if (count_per_L) {
                (*count_per_L)[L] = cc[s0];
            }
        } else if (count_per_L && cur[s0] == best_per_L[L] && cur[s0] < kTbInf) {
            (*count_per_L)[L] += cc[s0];
        }
    }
}

struct TbResult {
    std::vector<int> best;
    std::vector<uint64_t> count;
};

TbResult tb_search(const Trellis &t, int max_L, int cap, bool count, int threads) {
    const uint32_t S = t.num_states;
    int nt = std::max(1, std::min<int>(threads > 0 ? threads : default_threads(), (int)S));
    std::vector<TbResult> partial(nt);
    std::atomic<uint32_t> next_state{0};
    auto worker = [&](int id) {
        TbResult &r = partial[id];
        r.best.assign(max_L + 1, kTbInf);
        if (count) {
            r.count.assign(max_L + 1, 0);
        }
        while (true) {
            uint32_t s = next_state.fetch_add(1);
            if (s >= S) {
                break;
            }
            tb_from_state(t, s, max_L, cap, r.best, count ? &r.count : nullptr);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; i++) {
        pool.emplace_back(worker, i);
    }
    worker(0);
    for (auto &th : pool) {
        th.join();
    }
    TbResult total;
    total.best.assign(max_L + 1, kTbInf);
    total.count.assign(max_L + 1, 0);
    for (const auto &r : partial) {
        for (int L = 1; L <= max_L; L++) {
            if (r.best[L] < total.best[L]) {
                total.best[L] = r.best[L];
                total.count[L] = count ? r.count[L] : 0;
            } else if (count && r.best[L] == total.best[L]) {
                total.count[L] += r.count[L];
            }
        }
    }
    return total;
}

}  // namespace

TailBitingDistance tailbiting_distance(const Trellis &t, int L, bool count, int threads) {
    if (L < 1) {
        throw std::invalid_argument("tail-biting length must be positive");
    }
    auto r = tb_search(t, L, kTbInf - 64, count, threads);
    TailBitingDistance d;
    d.d = r.best[L] >= kTbInf ? -1 : r.best[L];
    d.count = count ? r.count[L] : 0;
    return d;
}

std::vector<int> tailbiting_distance_profile(const Trellis &t, int max_L, int threads, int cap) {
    auto r = tb_search(t, max_L, cap >= 0 ? cap : kTbInf - 64, false, threads);
    std::vector<int> out(max_L + 1, -1);
    for (int L = 1; L <= max_L; L++) {
        if (r.best[L] < kTbInf) {
            out[L] = r.best[L];
        } else if (cap >= 0) {
            out[L] = cap + 1;
        }
    }
    return out;
}

uint64_t tailbiting_weight_count(const Trellis &t, int L, int w, int threads) {
    const uint32_t S = t.num_states, E = t.edges_per_state;
    const int W = w + 1;
    int nt = std::max(1, std::min<int>(threads > 0 ? threads : default_threads(), (int)S));
    std::atomic<uint32_t> next_state{0};
    std::vector<uint64_t> partial(nt, 0);
    auto worker = [&](int id) {
        // cnt[s * W + x]: paths from s0 now at s with weight x.  For s0 = 0 the
        // all-zero prefix is kept apart so the zero word is never counted.
        std::vector<uint64_t> cur((size_t)S * W), nxt((size_t)S * W);
        while (true) {
            uint32_t s0 = next_state.fetch_add(1);
            if (s0 >= S) {
                break;
            }
            std::fill(cur.begin(), cur.end(), 0);
            if (s0 != 0) {
                cur[(size_t)s0 * W] = 1;
            }
            for (int step = 0; step < L; step++) {
                std::fill(nxt.begin(), nxt.end(), 0);
                auto push = [&](uint32_t s, int x, uint64_t c, uint32_t ufirst) {
                    for (uint32_t u = ufirst; u < E; u++) {
                        size_t e = (size_t)s * E + u;
                        int nx = x + t.weight[e];
                        if (nx <= w) {
                            nxt[(size_t)t.next[e] * W + nx] += c;
                        }
                    }
                };
                if (s0 == 0) {
                    push(0, 0, 1, 1);
                }
                for (uint32_t s = 0; s < S; s++) {
                    for (int x = 0; x <= w; x++) {
                        if (uint64_t c = cur[(size_t)s * W + x]) {
                            push(s, x, c, 0);
                        }
                    }
                }
                std::swap(cur, nxt);
            }
            partial[id] += cur[(size_t)s0 * W + w];
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; i++) {
        pool.emplace_back(worker, i);
    }
    worker(0);
    for (auto &th : pool) {
        th.join();
    }
    return std::accumulate(partial.begin(), partial.end(), uint64_t{0});
}

}  // namespace qconv
