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

#include "qconv/search.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace qconv {

namespace {

// R_+ planes aligned at degree 0 (one 128-bit key).
std::pair<uint64_t, uint64_t> r_planes(const Poly &g) {
    Poly r = autocorrelation_nonneg(g);
    if (r.is_zero()) {
        return {0, 0};
    }
    return {r.x_plane() << r.low(), r.z_plane() << r.low()};
}

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t> &p) const {
        return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
};

bool noncatastrophic(const LaurentTuple &g) { return !is_catastrophic(g); }

struct TupleLess {
    bool operator()(const LaurentTuple &a, const LaurentTuple &b) const { return compare_tuples(a, b) < 0; }
};

// Distances of a batch of codes, spread over threads.
std::vector<DistanceReport> distances(const std::vector<LaurentTuple> &gs, int threads) {
    std::vector<DistanceReport> out(gs.size());
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        for (size_t i; (i = next++) < gs.size();) {
            try {
                out[i] = orthogonal_distance(ConvCode::make(gs[i]));
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); t++) {
        pool.emplace_back(work);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
    return out;
}

}  // namespace

std::vector<Poly> monic_polys(Field f, int max_deg) {
    if (max_deg < 0 || max_deg > 30) {
        throw std::invalid_argument("degree limit out of range");
    }
    std::vector<Poly> out{Poly::constant(F4::one())};
    auto nz = nonzero_scalars(f);
    std::vector<F4> all = f == Field::F2 ? std::vector<F4>{F4::zero(), F4::one()}
                                         : std::vector<F4>{F4::zero(), F4::one(), F4::w(), F4::wbar()};
    for (int d = 1; d <= max_deg; d++) {
        std::vector<Poly> level;
        // Middle coefficients 1..d-1 as a counter; leading from nz.
        size_t q = all.size();
        size_t count = 1;
        for (int i = 1; i < d; i++) {
            count *= q;
        }
        for (F4 lead : nz) {
            for (size_t m = 0; m < count; m++) {
                std::vector<F4> c(d + 1);
                c[0] = F4::one();
                c[d] = lead;
                size_t r = m;
                for (int i = 1; i < d; i++) {
                    c[i] = all[r % q];
                    r /= q;
                }
                level.push_back(Poly::from_coeffs(c));
            }
        }
        if (f == Field::F2) {
            // integer order: D^k worth 2^k
            std::sort(level.begin(), level.end(), [](const Poly &a, const Poly &b) { return a.x_plane() < b.x_plane(); });
        } else {
            std::sort(level.begin(), level.end(), [](const Poly &a, const Poly &b) { return Poly::compare(a, b) < 0; });
        }
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<AutocorrRow> autocorr_table(Field f, int max_deg) {
    if (max_deg < 1) {
        throw std::invalid_argument("autocorrelation table needs max_deg >= 1");
    }
    std::vector<AutocorrRow> rows;
    for (const Poly &g : monic_polys(f, max_deg)) {
        rows.push_back({g, autocorrelation_nonneg(g), {}});
    }
    return rows;
}

std::vector<LaurentTuple> zero_sum_subsets(Field f, const std::vector<AutocorrRow> &rows, int n) {
    int m = (int)rows.size();
    if (n < 1 || n > m) {
        return {};
    }
    if (m > 24) {
        throw std::invalid_argument("too many rows for subset enumeration");
    }
    std::vector<std::pair<uint64_t, uint64_t>> r;
    for (const auto &row : rows) {
        r.push_back(r_planes(row.g));
    }
    std::vector<LaurentTuple> out;
    // Subsets in lexicographic order of their row indices.
    std::vector<int> idx(n);
    for (int i = 0; i < n; i++) {
        idx[i] = i;
    }
    while (true) {
        uint64_t x = 0, z = 0;
        for (int i : idx) {
            x ^= r[i].first;
            z ^= r[i].second;
        }
        if (x == 0 && z == 0) {
            std::vector<Poly> comps;
            for (int i : idx) {
                comps.push_back(rows[i].g);
            }
            LaurentTuple g(f, comps);
            if (noncatastrophic(g)) {
                out.push_back(g);
            }
        }
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) {
            i--;
        }
        if (i < 0) {
            break;
        }
        idx[i]++;
        for (int k = i + 1; k < n; k++) {
            idx[k] = idx[k - 1] + 1;
        }
    }
    return out;
}

std::vector<SubsetColumn> table_columns(Field f, int max_deg) {
    auto rows = autocorr_table(f, max_deg);
    std::vector<SubsetColumn> cols;
    for (int n = 3; n <= (int)rows.size(); n++) {
        auto subs = zero_sum_subsets(f, rows, n);
        for (const auto &g : subs) {
            cols.push_back({"1/" + std::to_string(n), n, g});
        }
    }
    return cols;
}

void mark_memberships(std::vector<AutocorrRow> &rows, const std::vector<SubsetColumn> &cols) {
    for (auto &row : rows) {
        row.memberships.clear();
        for (const auto &c : cols) {
            if (std::find(c.g.c.begin(), c.g.c.end(), row.g) != c.g.c.end()) {
                row.memberships.push_back(c.tag);
            }
        }
    }
}

std::string render_autocorr_table(Field f, const std::vector<AutocorrRow> &rows,
                                  const std::vector<SubsetColumn> &cols) {
    (void)f;
    size_t w1 = 1, w2 = 1;
    for (const auto &r : rows) {
        w1 = std::max(w1, r.g.str().size());
        w2 = std::max(w2, r.r_plus.str().size());
    }
    std::ostringstream os;
    os << "columns";
    for (const auto &c : cols) {
        os << ' ' << c.tag;
    }
    os << '\n';
    for (const auto &r : rows) {
        std::string g = r.g.str(), rp = r.r_plus.str();
        os << g << std::string(w1 + 2 - g.size(), ' ') << rp << std::string(w2 + 2 - rp.size(), ' ');
        for (size_t i = 0; i < cols.size(); i++) {
            bool in = std::find(cols[i].g.c.begin(), cols[i].g.c.end(), r.g) != cols[i].g.c.end();
            os << (i ? " " : "") << (in ? '*' : '.');
        }
        os << '\n';
    }
    return os.str();
}

std::string SearchReport::coverage() const {
    std::ostringstream os;
    os << field_name(field) << " nu=" << nu << ": " << candidates << "/" << total << " tuples"
       << (complete ? " (complete)" : " (PARTIAL)") << ", " << self_orthogonal << " self-orthogonal, " << classes
       << " classes, " << seconds << " s";
    return os.str();
}

SearchReport best_rate13(Field f, int nu, const SearchBudget &budget) {
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    SearchReport rep;
    rep.field = f;
    rep.nu = nu;
    if (nu < 1) {
        throw std::invalid_argument("constraint length must be at least 1");
    }
    auto polys = monic_polys(f, nu);
    size_t first_top = 0;
    while (polys[first_top].deg() < nu) {
        first_top++;
    }
    for (size_t k = first_top; k < polys.size(); k++) {
        rep.total += (uint64_t)k * (k - 1) / 2;
    }
    std::vector<std::pair<uint64_t, uint64_t>> r;
    for (const auto &p : polys) {
        r.push_back(r_planes(p));
    }
    // i < j < k: the third component is found by hashing R_i = R_j + R_k.
    std::unordered_map<std::pair<uint64_t, uint64_t>, std::vector<uint32_t>, PairHash> by_r;
    for (size_t i = 0; i < polys.size(); i++) {
        by_r[r[i]].push_back((uint32_t)i);
    }
    std::set<LaurentTuple, TupleLess> classes;
    rep.complete = true;
    for (size_t k = first_top; k < polys.size(); k++) {
        uint64_t add = (uint64_t)k * (k - 1) / 2;
        if (rep.candidates + add > budget.max_candidates || elapsed() > budget.max_seconds) {
            rep.complete = false;
            break;
        }
        rep.candidates += add;
        for (size_t j = 1; j < k; j++) {
            std::pair<uint64_t, uint64_t> want{r[j].first ^ r[k].first, r[j].second ^ r[k].second};
            auto it = by_r.find(want);
            if (it == by_r.end()) {
                continue;
            }
            for (uint32_t i : it->second) {
                if (i >= j) {
                    break;
                }
                LaurentTuple g(f, {polys[i], polys[j], polys[k]});
                if (!noncatastrophic(g)) {
                    continue;
                }
                rep.self_orthogonal++;
                classes.insert(canonicalize_class(g));
            }
        }
    }
    rep.classes = classes.size();
    std::vector<LaurentTuple> reps(classes.begin(), classes.end());
    int threads = budget.threads > 0 ? budget.threads : default_threads();
    auto ds = distances(reps, threads);
    int best_d = -1;
    uint64_t best_n = 0;
    for (const auto &d : ds) {
        if (d.d_perp > best_d || (d.d_perp == best_d && d.n_d < best_n)) {
            best_d = d.d_perp;
            best_n = d.n_d;
        }
    }
    for (size_t i = 0; i < reps.size(); i++) {
        if (ds[i].d_perp == best_d && ds[i].n_d == best_n) {
            BestCodeRow row;
            row.nu = nu;
            row.g = reps[i];
            row.h = orthogonal_basis(ConvCode::make(reps[i])).h;
            row.d_perp = best_d;
            row.n_d = best_n;
            rep.rows.push_back(std::move(row));
        }
    }
    rep.seconds = elapsed();
    return rep;
}

std::vector<LaurentTuple> self_orthogonal_classes(Field f, int nu, bool reduced) {
    auto polys = monic_polys(f, nu);
    size_t P = polys.size();
    std::set<LaurentTuple, TupleLess> classes;
    auto consider = [&](size_t a, size_t b, size_t c) {
        if (std::max({polys[a].deg(), polys[b].deg(), polys[c].deg()}) != nu) {
            return;
        }
        LaurentTuple g(f, {polys[a], polys[b], polys[c]});
        if (is_self_orthogonal(g) && noncatastrophic(g)) {
            classes.insert(canonicalize_class(g));
        }
    };
    for (size_t a = 0; a < P; a++) {
        for (size_t b = reduced ? a + 1 : 0; b < P; b++) {
            for (size_t c = reduced ? b + 1 : 0; c < P; c++) {
                if (a == b || b == c || a == c) {
                    continue;
                }
                consider(a, b, c);
            }
        }
    }
    return {classes.begin(), classes.end()};
}

DistanceReport orthogonal_distance(const ConvCode &code, bool with_slope) {
    Trellis t;
    try {
        t = syndrome_trellis(code);
    } catch (const std::invalid_argument &) {
        return free_distance_by_syndromes(code);
    }
    return with_slope ? analyze(t) : free_distance(t);
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.ok; });
}

std::string VerifyReport::str() const {
    std::ostringstream os;
    for (const auto &c : checks) {
        os << (c.ok ? "ok    " : "FAIL  ") << c.name;
        if (!c.expected.empty()) {
            os << ": expected " << c.expected << ", got " << c.actual;
        } else if (!c.actual.empty()) {
            os << ": " << c.actual;
        }
        os << '\n';
    }
    return os.str();
}

VerifyReport table_row_verify(const RowClaim &row) {
    VerifyReport rep;
    auto add = [&](std::string name, std::string expected, std::string actual) {
        bool ok = expected == actual;
        rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    };
    auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
    add("self-orthogonal", "yes", yes(is_self_orthogonal(row.g)));
    add("noncatastrophic", "yes", yes(!is_catastrophic(row.g)));
    ConvCode code;
    try {
        code = ConvCode::make(row.g);
    } catch (const std::exception &e) {
        add("generator", "valid", e.what());
        return rep;
    }
    if (row.nu) {
        add("nu", std::to_string(*row.nu), std::to_string(code.nu));
    }
    Trellis basis_trellis;
    bool have_basis_trellis = false;
    if (!row.h.empty()) {
        auto bc = check_basis(code, row.h);
        add("basis orthogonal", "yes", yes(bc.orthogonal));
        add("basis full rank", "yes", yes(bc.full_rank));
        add("basis degree sum", std::to_string(code.nu), std::to_string(bc.degree_sum));
        add("basis basic", "yes", yes(bc.basic));
        if (bc.ok()) {
            try {
                basis_trellis = build_trellis(code.field, row.h);
                have_basis_trellis = true;
            } catch (const std::invalid_argument &) {
            }
        }
    }
    if (row.d_perp || row.n_d || row.alpha) {
        DistanceReport d = orthogonal_distance(code, false);
        if (row.d_perp) {
            add("d_perp", std::to_string(*row.d_perp), std::to_string(d.d_perp));
        }
        if (row.n_d) {
            add("N", std::to_string(*row.n_d), std::to_string(d.n_d));
        }
        if (row.alpha) {
            Rational a;
            if (have_basis_trellis) {
                a = slope(basis_trellis);
            } else {
                a = slope(syndrome_trellis(code));
            }
            rep.checks.push_back({"alpha", row.alpha->str(), a.str(), *row.alpha == a});
        }
    }
    return rep;
}

}  // namespace qconv
