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

#include "qconv/block_code.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "qconv/linalg.h"

namespace qconv {

F4 inner(Inner ip, std::span<const F4> a, std::span<const F4> b) {
    return ip == Inner::kHermitian ? hermitian_inner(a, b) : euclidean_inner(a, b);
}

BlockCode BlockCode::from_rows(Field f, std::vector<std::vector<F4>> rows) {
    BlockCode c;
    c.field = f;
    c.length = rows.empty() ? 0 : (int)rows[0].size();
    for (const auto &r : rows) {
        if ((int)r.size() != c.length) {
            throw std::invalid_argument("generator rows of unequal length");
        }
        if (f == Field::F2) {
            for (F4 a : r) {
                if (!a.is_binary()) {
                    throw std::invalid_argument("non-binary symbol in a GF(2) code");
                }
            }
        }
    }
    c.rows = std::move(rows);
    return c;
}

BlockCode BlockCode::parse(Field f, std::string_view text) {
    std::vector<std::vector<F4>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find_first_of(";\n", pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view item = text.substr(pos, end - pos);
        std::string cleaned;
        for (char ch : item) {
            if (ch != ' ' && ch != '\t' && ch != '|' && ch != '\r') {
                cleaned += ch;
            }
        }
        if (!cleaned.empty()) {
            rows.push_back(parse_f4_vector(cleaned));
        }
        pos = end + 1;
    }
    return from_rows(f, std::move(rows));
}

int BlockCode::rank() const {
    if (rows.empty()) {
        return 0;
    }
    return F4Matrix::from_rows(rows, length).rank();
}

BlockCode BlockCode::basis() const {
    BlockCode c = *this;
    if (rows.empty()) {
        return c;
    }
    F4Matrix m = F4Matrix::from_rows(rows, length);
    auto piv = m.rref();
    c.rows.clear();
    for (size_t i = 0; i < piv.size(); i++) {
        c.rows.push_back(m.row((int)i));
    }
    return c;
}

bool BlockCode::contains(std::span<const F4> v) const {
    auto r = rows;
    r.emplace_back(v.begin(), v.end());
    return F4Matrix::from_rows(r, length).rank() == rank();
}

std::string BlockCode::str() const {
    std::string s;
    for (const auto &r : rows) {
        if (!s.empty()) {
            s += '\n';
        }
        s += to_string(r);
    }
    return s;
}

bool same_code(const BlockCode &a, const BlockCode &b) {
    if (a.length != b.length) {
        return false;
    }
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) {
        return false;
    }
    auto rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return rows.empty() || F4Matrix::from_rows(rows, a.length).rank() == ra;
}

std::vector<F4> place_generator(const LaurentTuple &g, int shift, int L, bool wrap) {
    int n = g.n();
    std::vector<F4> row((size_t)L * n);
    for (int j = 0; j < n; j++) {
        const Poly &p = g.c[j];
        if (p.is_zero()) {
            continue;
        }
        for (int deg = p.low(); deg <= p.deg(); deg++) {
            F4 c = p.coeff(deg);
            if (c.is_zero()) {
                continue;
            }
            int blk = deg + shift;
            if (wrap) {
                blk = ((blk % L) + L) % L;
            } else if (blk < 0 || blk >= L) {
                continue;
            }
            row[(size_t)blk * n + j] += c;
        }
    }
    return row;
}

namespace {

void check_generators(const std::vector<LaurentTuple> &gens) {
    if (gens.empty()) {
        throw std::invalid_argument("no generators");
    }
    for (const auto &g : gens) {
        if (g.n() != gens[0].n() || g.is_zero()) {
            throw std::invalid_argument("generators must be nonzero tuples of equal width");
        }
    }
}

}  // namespace

BlockCode tail_bite(Field f, const std::vector<LaurentTuple> &gens, int L) {
    check_generators(gens);
    for (const auto &g : gens) {
        if (g.deg() - g.low() + 1 > L) {
            throw std::invalid_argument(
                "tail-biting length " + std::to_string(L) + " is shorter than the generator span " +
                std::to_string(g.deg() - g.low() + 1));
        }
    }
    std::vector<std::vector<F4>> rows;
    for (const auto &g : gens) {
        LaurentTuple s = g.shifted(-g.low());
        for (int i = 0; i < L; i++) {
            rows.push_back(place_generator(s, i, L, true));
        }
    }
    BlockCode c = BlockCode::from_rows(f, std::move(rows));
    c.tb_blocks = L;
    for (const auto &g : gens) {
        c.tb_generators.push_back(g.shifted(-g.low()));
    }
    return c;
}

BlockCode terminate(Field f, const std::vector<LaurentTuple> &gens, int L, Termination mode) {
    check_generators(gens);
    if (L < 1) {
        throw std::invalid_argument("termination length must be positive");
    }
    std::vector<std::vector<F4>> rows;
    for (const auto &g : gens) {
        LaurentTuple s = g.shifted(-g.low());
        int span = s.deg() + 1;
        int first = mode == Termination::kSubset ? 0 : -(span - 1);
        int last = mode == Termination::kSubset ? L - span : L - 1;
        for (int i = first; i <= last; i++) {
            rows.push_back(place_generator(s, i, L, false));
        }
    }
    if (rows.empty()) {
        throw std::invalid_argument("no generator shift fits in " + std::to_string(L) + " blocks");
    }
    return BlockCode::from_rows(f, std::move(rows));
}

BlockCode dual(const BlockCode &code, std::optional<Inner> ip) {
    Inner in = ip.value_or(default_inner(code.field));
    F4Matrix m(std::max<int>(1, (int)code.rows.size()), code.length);
    for (size_t i = 0; i < code.rows.size(); i++) {
        for (int j = 0; j < code.length; j++) {
            F4 a = code.rows[i][j];
            m.at((int)i, j) = in == Inner::kHermitian ? conj(a) : a;
        }
    }
    return BlockCode::from_rows(code.field, m.nullspace());
}

bool is_self_orthogonal_block(const BlockCode &code, std::optional<Inner> ip) {
    Inner in = ip.value_or(default_inner(code.field));
    for (size_t i = 0; i < code.rows.size(); i++) {
        for (size_t j = i; j < code.rows.size(); j++) {
            if (!inner(in, code.rows[i], code.rows[j]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

void for_each_low_weight_word(Field f, const std::vector<std::vector<F4>> &checks, int N, int w, Inner ip,
                              const std::function<void(const std::vector<F4> &)> &visit, double max_work) {
    int m = (int)checks.size();
    if (m > 64) {
        throw std::runtime_error("low-weight search supports at most 64 checks");
    }
    if (w < 1 || w > N) {
        return;
    }
    std::vector<F4> values =
        f == Field::F4 ? std::vector<F4>{F4::one(), F4::w(), F4::wbar()} : std::vector<F4>{F4::one()};
    // Work estimate C(N, w-1) (q-1)^(w-1).
    double work = 1;
    for (int i = 0; i < w - 1; i++) {
        work = work * (N - i) / (i + 1) * (double)values.size();
    }
    if (work > max_work) {
        throw std::runtime_error("low-weight search budget exceeded at weight " + std::to_string(w));
    }
    // Check-syndrome of symbol v at position i, one plane bit per check.
    std::vector<std::vector<std::pair<uint64_t, uint64_t>>> cols(N);
    std::unordered_multimap<uint64_t, std::pair<int, int>> table;
    auto key = [](uint64_t x, uint64_t z) { return x * 0x9E3779B97F4A7C15ull ^ (z + 0x632BE59BD9B4E019ull); };
    for (int i = 0; i < N; i++) {
        for (size_t v = 0; v < values.size(); v++) {
            uint64_t x = 0, z = 0;
            for (int h = 0; h < m; h++) {
                F4 c = checks[h][i];
                F4 s = (ip == Inner::kHermitian ? conj(c) : c) * values[v];
                x |= (uint64_t)s.x() << h;
                z |= (uint64_t)s.z() << h;
            }
            cols[i].push_back({x, z});
            table.insert({key(x, z), {i, (int)v}});
        }
    }
    std::vector<int> pos(w - 1);
    std::vector<F4> word(N);
    std::function<void(int, int, uint64_t, uint64_t)> rec = [&](int depth, int start, uint64_t sx, uint64_t sz) {
        if (depth == w - 1) {
            auto range = table.equal_range(key(sx, sz));
            for (auto it = range.first; it != range.second; ++it) {
                auto [p, v] = it->second;
                if ((depth > 0 && p <= pos[depth - 1]) || cols[p][v] != std::pair<uint64_t, uint64_t>{sx, sz}) {
                    continue;
                }
                word[p] = values[v];
                visit(word);
                word[p] = F4::zero();
            }
            return;
        }
        for (int i = start; i <= N - (w - depth); i++) {
            pos[depth] = i;
            for (size_t v = 0; v < values.size(); v++) {
                word[i] = values[v];
                rec(depth + 1, i + 1, sx ^ cols[i][v].first, sz ^ cols[i][v].second);
            }
            word[i] = F4::zero();
        }
    };
    rec(0, 0, 0, 0);
}

namespace {

// Bit-plane codeword, any length.
struct Planes {
    std::vector<uint64_t> x, z;
    explicit Planes(int words = 0) : x(words), z(words) {}
    static Planes of(std::span<const F4> v) {
        Planes p(((int)v.size() + 63) / 64);
        for (size_t i = 0; i < v.size(); i++) {
            p.x[i / 64] |= (uint64_t)v[i].x() << (i % 64);
            p.z[i / 64] |= (uint64_t)v[i].z() << (i % 64);
        }
        return p;
    }
    void add(const Planes &o) {
        for (size_t i = 0; i < x.size(); i++) {
            x[i] ^= o.x[i];
            z[i] ^= o.z[i];
        }
    }
    int weight() const {
        int w = 0;
        for (size_t i = 0; i < x.size(); i++) {
            w += __builtin_popcountll(x[i] | z[i]);
        }
        return w;
    }
    std::vector<F4> symbols(int len) const {
        std::vector<F4> v(len);
        for (int i = 0; i < len; i++) {
            v[i] = F4((uint8_t)(((x[i / 64] >> (i % 64)) & 1) | (((z[i / 64] >> (i % 64)) & 1) << 1)));
        }
        return v;
    }
};

// True iff v is the least of its cyclic rotations by whole blocks.
bool least_rotation(const std::vector<F4> &v, int block, int L) {
    int N = (int)v.size();
    for (int r = 1; r < L; r++) {
        int off = r * block;
        for (int i = 0; i < N; i++) {
            uint8_t a = v[(i + off) % N].v, b = v[i].v;
            if (a != b) {
                if (a < b) {
                    return false;
                }
                break;
            }
        }
    }
    return true;
}

struct MinTracker {
    int d = INT32_MAX;
    uint64_t count = 0;
    uint64_t orbits = 0;
    int block = 0;
    int L = 0;
    int length = 0;

    void see(int w, const std::function<std::vector<F4>()> &word) {
        if (w == 0 || w > d) {
            return;
        }
        if (w < d) {
            d = w;
            count = orbits = 0;
        }
        count++;
        if (L > 1) {
            orbits += least_rotation(word(), block, L);
        } else {
            orbits++;
        }
    }
};

BlockDistance enumerate_codewords(const BlockCode &basis, int L, int block) {
    std::vector<Planes> gens;
    for (const auto &r : basis.rows) {
        gens.push_back(Planes::of(r));
        if (basis.field == Field::F4) {
            std::vector<F4> wr(r.size());
            for (size_t i = 0; i < r.size(); i++) {
                wr[i] = F4::w() * r[i];
            }
            gens.push_back(Planes::of(wr));
        }
    }
    int m = (int)gens.size();
    MinTracker t;
    t.block = block;
    t.L = L;
    Planes cur((basis.length + 63) / 64);
    uint64_t total = m >= 64 ? ~0ull : (1ull << m);
    for (uint64_t i = 1; i < total; i++) {
        cur.add(gens[__builtin_ctzll(i)]);
        int w = cur.weight();
        if (w <= t.d) {
            t.see(w, [&] { return cur.symbols(basis.length); });
        }
    }
    BlockDistance r;
    r.engine = "enumeration";
    if (t.d == INT32_MAX) {
        return r;
    }
    r.d = t.d;
    r.count = t.count;
    r.orbits = t.orbits;
    return r;
}

BlockDistance low_weight_search(const BlockCode &code, const DistanceOptions &opts, int L, int block) {
    Inner in = default_inner(code.field);
    BlockCode checks = dual(code, in).basis();
    BlockDistance r;
    r.engine = "low-weight search";
    for (int w = 1; w <= opts.max_weight && w <= code.length; w++) {
        MinTracker t;
        t.block = block;
        t.L = L;
        for_each_low_weight_word(code.field, checks.rows, code.length, w, in,
                                 [&](const std::vector<F4> &word) { t.see(w, [&] { return word; }); });
        if (t.count > 0) {
            r.d = w;
            r.count = t.count;
            r.orbits = t.orbits;
            return r;
        }
    }
    throw std::runtime_error("no codeword up to weight " + std::to_string(opts.max_weight));
}

int gcd_int(int a, int b) { return b ? gcd_int(b, a % b) : a; }

}  // namespace

BlockDistance block_min_distance(const BlockCode &code, const DistanceOptions &opts) {
    BlockCode basis = code.basis();
    int k = (int)basis.rows.size();
    BlockDistance r;
    if (k == 0) {
        r.engine = "zero code";
        return r;
    }
    int L = code.tb_blocks;
    int block = L > 0 ? code.length / L : 0;
    int bits = k * (code.field == Field::F4 ? 2 : 1);
    if (bits <= opts.enumerate_bits) {
        return enumerate_codewords(basis, L, block);
    }
    if (L > 0 && !code.tb_generators.empty()) {
        // The circular trellis is exact when the tail-biting map is one-to-one.
        int bsym = code.field == Field::F4 ? 2 : 1;
        int nu = 0;
        for (const auto &g : code.tb_generators) {
            nu += g.deg();
        }
        int kin = (int)code.tb_generators.size();
        double work = std::ldexp(1.0, 2 * bsym * nu + bsym * kin) * L;
        if (k == kin * L && bsym * nu <= 24 && bsym * kin <= 16 && work < 2e11) {
            Trellis t = build_trellis(code.field, code.tb_generators);
            TailBitingDistance tb = tailbiting_distance(t, L, opts.count, opts.threads);
            r.engine = "tail-biting trellis";
            r.d = tb.d;
            r.count = tb.count;
            if (opts.count) {
                // Burnside over block rotations; a word fixed by a rotation of
                // order L/g repeats a closed path of g blocks.
                uint64_t fixed_sum = 0;
                for (int s = 0; s < L; s++) {
                    int g = gcd_int(s, L);
                    if (g == 0) {
                        g = L;
                    }
                    if (g == L) {
                        fixed_sum += tb.count;
                    } else if (tb.d % (L / g) == 0) {
                        fixed_sum += tailbiting_weight_count(t, g, tb.d / (L / g), opts.threads);
                    }
                }
                r.orbits = fixed_sum / L;
            }
            return r;
        }
    }
    return low_weight_search(basis, opts, L, block);
}

std::string StabilizerSummary::str() const {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]";
}

StabilizerSummary stabilizer_summary(const BlockCode &b, int dual_distance) {
    StabilizerSummary s;
    s.n = b.length;
    s.k = b.length - 2 * b.rank();
    s.d = dual_distance;
    s.css = b.field == Field::F2;
    return s;
}

DistanceReport free_distance_by_syndromes(const ConvCode &code, int max_weight) {
    Inner in = default_inner(code.field);
    int n = code.n, nu = code.nu;
    for (int w = 1; w <= max_weight; w++) {
        int T = (w - 1) * nu + 1;
        std::vector<std::vector<F4>> checks;
        for (int t = -nu; t < T; t++) {
            checks.push_back(place_generator(code.g, t, T, false));
        }
        uint64_t count = 0;
        for_each_low_weight_word(code.field, checks, T * n, w, in, [&](const std::vector<F4> &word) {
            for (int j = 0; j < n; j++) {
                if (!word[j].is_zero()) {
                    count++;
                    return;
                }
            }
        });
        if (count > 0) {
            DistanceReport r;
            r.d_perp = w;
            r.n_d = count;
            return r;
        }
    }
    throw std::runtime_error("no orthogonal word up to weight " + std::to_string(max_weight));
}

bool single_error_syndromes_distinct(const ConvCode &code, int L) {
    BlockCode b = tail_bite(code, L);
    Inner in = default_inner(code.field);
    std::vector<F4> values = code.field == Field::F4 ? std::vector<F4>{F4::one(), F4::w(), F4::wbar()}
                                                     : std::vector<F4>{F4::one()};
    std::set<std::vector<uint8_t>> seen;
    for (int p = 0; p < b.length; p++) {
        for (F4 v : values) {
            std::vector<uint8_t> s(b.rows.size());
            bool nonzero = false;
            for (size_t i = 0; i < b.rows.size(); i++) {
                F4 c = b.rows[i][p];
                s[i] = ((in == Inner::kHermitian ? conj(c) : c) * v).v;
                nonzero |= s[i] != 0;
            }
            if (!nonzero || !seen.insert(s).second) {
                return false;
            }
        }
    }
    return true;
}

TailBitingResult min_tailbiting_length(const ConvCode &code, TailBitingMode mode, int max_L, int threads) {
    TailBitingResult res;
    OrthogonalBasis basis = orthogonal_basis(code);
    int first = code.nu + 1;
    for (const auto &h : basis.h) {
        first = std::max(first, h.deg() + 1);
    }
    auto finish = [&](int L, int d_dual) {
        res.found = true;
        res.L = L;
        res.b = tail_bite(code, L);
        res.b_dual = tail_bite(basis, L);
        res.d_dual = d_dual;
        res.stabilizer = stabilizer_summary(res.b, d_dual);
        // The wrapped basis must span the whole dual, or d_dual is meaningless.
        bool orth = true;
        Inner ip = default_inner(code.field);
        for (const auto &r : res.b.rows) {
            for (const auto &s : res.b_dual.rows) {
                orth = orth && inner(ip, r, s).is_zero();
            }
        }
        if (!orth || res.b.rank() + res.b_dual.rank() != res.b.length) {
            res.note = "wrapped orthogonal basis does not span the dual at L = " + std::to_string(L);
        }
    };
    if (mode == TailBitingMode::kSyndromeDistinct) {
        res.bound = max_L > 0 ? max_L : first + 64;
        for (int L = first; L <= res.bound; L++) {
            if (single_error_syndromes_distinct(code, L)) {
                BlockCode bd = tail_bite(basis, L);
                DistanceOptions o;
                o.threads = threads;
                finish(L, block_min_distance(bd, o).d);
                return res;
            }
        }
        res.note = "no length up to " + std::to_string(res.bound) + " separates all single-error syndromes";
        return res;
    }
    Trellis t = build_trellis(basis);
    DistanceReport rep = analyze(t);
    res.bound = max_L > 0 ? max_L : rep.bound();
    // d(L) never needs to be known beyond d_perp.
    res.profile = tailbiting_distance_profile(t, res.bound, threads, rep.d_perp);
    int best_L = 0, best_d = -1;
    for (int L = first; L <= res.bound; L++) {
        int d = std::min(res.profile[L], rep.d_perp);
        if (d >= rep.d_perp && !res.found) {
            finish(L, tailbiting_distance(t, L, false, threads).d);
        }
        if (d > best_d) {
            best_d = d;
            best_L = L;
        }
    }
    for (int L = res.bound; L >= first && std::min(res.profile[L], rep.d_perp) >= rep.d_perp; L--) {
        res.stable_L = L;
    }
    if (!res.found) {
        res.note = "best d(B^perp) = " + std::to_string(best_d) + " at L = " + std::to_string(best_L) +
                   " within bound " + std::to_string(res.bound);
    }
    return res;
}

}  // namespace qconv
