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

#include "qconv/conv_code.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qconv/linalg.h"

namespace qconv {

namespace {

Poly one_poly() { return Poly::constant(F4::one()); }

}  // namespace

ConvCode ConvCode::make(const LaurentTuple &g) {
    if (g.n() < 2) {
        throw std::invalid_argument("a convolutional code needs block width n >= 2");
    }
    for (int j = 0; j < g.n(); j++) {
        const Poly &p = g.c[j];
        if (p.is_zero() || !p.is_polynomial() || p.coeff(0) != F4::one()) {
            throw std::invalid_argument(
                "component " + std::to_string(j + 1) + " (" + p.pretty() + ") must be a polynomial with constant term 1");
        }
        if (g.field == Field::F2 && !p.is_binary()) {
            throw std::invalid_argument("non-binary component in a GF(2) code");
        }
    }
    if (component_gcd(g) != one_poly()) {
        throw std::invalid_argument("generator components share the factor " + component_gcd(g).pretty());
    }
    ConvCode c;
    c.field = g.field;
    c.n = g.n();
    c.g = g;
    c.nu = g.deg();
    return c;
}

Poly component_gcd(const LaurentTuple &g) {
    Poly d;
    for (const auto &p : g.c) {
        if (p.is_zero()) {
            continue;
        }
        Poly q = p.shifted(-p.low());
        d = d.is_zero() ? q.monic_leading() : poly_gcd(d, q);
    }
    if (d.is_zero()) {
        throw std::invalid_argument("gcd of the zero tuple");
    }
    // Restore the common power of D.
    int k = g.low();
    return k > 0 ? d.shifted(k) : d;
}

LaurentTuple canonical_generator(const LaurentTuple &c) {
    if (c.is_zero()) {
        throw std::invalid_argument("canonical generator of the zero tuple");
    }
    LaurentTuple r = c.shifted(-c.low());
    Poly d;
    for (const auto &p : r.c) {
        if (!p.is_zero()) {
            d = d.is_zero() ? p.monic_leading() : poly_gcd(d, p);
        }
    }
    // After the shift some component has a nonzero constant term, so d(0) != 0.
    for (auto &p : r.c) {
        p = p.divmod(d).first;
    }
    for (const auto &p : r.c) {
        if (!p.coeff(0).is_zero()) {
            return r.scaled(inverse(p.coeff(0)));
        }
    }
    return r;
}

LaurentTuple monic_components(const LaurentTuple &g) {
    LaurentTuple r = g;
    for (auto &p : r.c) {
        p = p.monic_at_zero();
    }
    return r;
}

bool is_self_orthogonal(const LaurentTuple &g) { return cross_correlation(g, g).is_zero(); }

bool is_catastrophic(const LaurentTuple &g) {
    if (g.is_zero()) {
        throw std::invalid_argument("catastrophicity of the zero tuple");
    }
    LaurentTuple p = g.shifted(-g.low());
    Poly d;
    for (const auto &q : p.c) {
        if (!q.is_zero()) {
            d = d.is_zero() ? q.monic_leading() : poly_gcd(d, q);
        }
    }
    return !d.is_monomial();
}

int OrthogonalBasis::degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

namespace {

// Linear conditions on the coefficients h_{j,k} (0 <= k <= delta) for
// R_hg = 0:  sum_{j,k} h_{j,k} conj(g_{j,k+l}) = 0 for every shift l.
F4Matrix orthogonality_conditions(const LaurentTuple &g, int delta) {
    int n = g.n(), nu = g.deg();
    int unknowns = n * (delta + 1);
    F4Matrix m(nu + delta + 1, unknowns);
    for (int l = -delta; l <= nu; l++) {
        int row = l + delta;
        for (int j = 0; j < n; j++) {
            for (int k = 0; k <= delta; k++) {
                m.at(row, j * (delta + 1) + k) = conj(g.c[j].coeff(k + l));
            }
        }
    }
    return m;
}

LaurentTuple tuple_from_vector(Field f, int n, int delta, const std::vector<F4> &v) {
    std::vector<Poly> comps;
    for (int j = 0; j < n; j++) {
        comps.push_back(Poly::from_coeffs(std::span<const F4>(v).subspan(j * (delta + 1), delta + 1), 0));
    }
    return LaurentTuple(f, std::move(comps));
}

// Scale so the lowest coefficient of the last nonzero component is 1.
LaurentTuple normalize_basis_vector(const LaurentTuple &h) {
    for (int j = h.n() - 1; j >= 0; j--) {
        if (!h.c[j].is_zero()) {
            return h.scaled(inverse(h.c[j].lowest_coeff()));
        }
    }
    return h;
}

}  // namespace

Poly maximal_minor_gcd(const std::vector<LaurentTuple> &rows) {
    if (rows.empty()) {
        return one_poly();
    }
    int n = rows[0].n(), k = (int)rows.size();
    if (k >= n) {
        throw std::invalid_argument("maximal minors need fewer rows than columns");
    }
    std::vector<LaurentTuple> shifted;
    for (const auto &r : rows) {
        shifted.push_back(r.shifted(-r.low()));
    }
    // Choose every k-subset of columns.
    Poly acc;
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
        for (int i = 0; i < k; i++) {
            for (int c = 0; c < k; c++) {
                m[i][c] = shifted[i].c[cols[c]];
            }
        }
        Poly det = polynomial_determinant(std::move(m));
        if (!det.is_zero()) {
            acc = acc.is_zero() ? det.monic_leading() : poly_gcd(acc, det);
            if (acc == one_poly()) {
                return acc;
            }
        }
        int i = k - 1;
        while (i >= 0 && cols[i] == n - k + i) {
            i--;
        }
        if (i < 0) {
            break;
        }
        cols[i]++;
        for (int j = i + 1; j < k; j++) {
            cols[j] = cols[j - 1] + 1;
        }
    }
    return acc;
}

OrthogonalBasis orthogonal_basis(const ConvCode &code, int degree_budget) {
    if (is_catastrophic(code.g)) {
        throw std::invalid_argument("orthogonal basis requested for a catastrophic generator");
    }
    int budget = degree_budget < 0 ? code.nu : degree_budget;
    OrthogonalBasis b;
    b.field = code.field;
    b.n = code.n;
    b.nu = code.nu;
    for (int delta = 0; delta <= budget && (int)b.h.size() < code.n - 1; delta++) {
        auto null = orthogonality_conditions(code.g, delta).nullspace();
        for (const auto &v : null) {
            if ((int)b.h.size() == code.n - 1) {
                break;
            }
            LaurentTuple t = tuple_from_vector(code.field, code.n, delta, v);
            auto trial = b.h;
            trial.push_back(t);
            if (polynomial_rank(trial) == (int)trial.size()) {
                b.h.push_back(normalize_basis_vector(t));
                b.degrees.push_back(t.deg());
            }
        }
    }
    if ((int)b.h.size() < code.n - 1) {
        throw std::runtime_error(
            "degree budget " + std::to_string(budget) + " exhausted before finding " + std::to_string(code.n - 1) +
            " orthogonal generators");
    }
    b.minor_gcd = maximal_minor_gcd(b.h);
    return b;
}

BasisCheck check_basis(const ConvCode &code, const std::vector<LaurentTuple> &h) {
    BasisCheck c;
    c.orthogonal = true;
    for (const auto &t : h) {
        if (t.n() != code.n || !cross_correlation(t, code.g).is_zero()) {
            c.orthogonal = false;
        }
        c.degree_sum += t.deg() - t.low();
    }
    c.full_rank = (int)h.size() == code.n - 1 && polynomial_rank(h) == code.n - 1;
    c.minimal = c.degree_sum == code.nu;
    c.basic = c.full_rank && maximal_minor_gcd(h) == one_poly();
    return c;
}

int compare_tuples(const LaurentTuple &a, const LaurentTuple &b) {
    for (int j = 0; j < std::min(a.n(), b.n()); j++) {
        int c = Poly::compare(a.c[j], b.c[j]);
        if (c) {
            return c;
        }
    }
    return a.n() == b.n() ? 0 : (a.n() < b.n() ? -1 : 1);
}

namespace {

// Images of g under conjugation, modulation and reversal (not permutations),
// each normalized component-wise.
std::vector<LaurentTuple> unpermuted_images(const LaurentTuple &g, const OrbitOptions &opts) {
    std::vector<LaurentTuple> out;
    bool quaternary = g.field == Field::F4;
    std::vector<F4> alphas = {F4::one()};
    if (quaternary && opts.modulation) {
        alphas = {F4::one(), F4::w(), F4::wbar()};
    }
    for (int cj = 0; cj < (quaternary && opts.conjugation ? 2 : 1); cj++) {
        for (F4 a : alphas) {
            for (int rv = 0; rv < (opts.reversal ? 2 : 1); rv++) {
                LaurentTuple t = g;
                if (cj) {
                    t = apply_symmetry(t, Symmetry::conjugate());
                }
                if (a != F4::one()) {
                    t = apply_symmetry(t, Symmetry::modulate(a));
                }
                if (rv) {
                    t = apply_symmetry(t, Symmetry::reverse());
                }
                out.push_back(monic_components(t));
            }
        }
    }
    return out;
}

struct TupleLess {
    bool operator()(const LaurentTuple &a, const LaurentTuple &b) const { return compare_tuples(a, b) < 0; }
};

}  // namespace

std::vector<LaurentTuple> class_orbit(const LaurentTuple &g, const OrbitOptions &opts) {
    std::set<LaurentTuple, TupleLess> seen;
    for (auto t : unpermuted_images(g, opts)) {
        if (!opts.permutations) {
            seen.insert(t);
            continue;
        }
        if (t.n() > 9) {
            throw std::invalid_argument("explicit permutation orbits are limited to n <= 9");
        }
        std::vector<int> perm(t.n());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            seen.insert(apply_symmetry(t, Symmetry::permute(perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {seen.begin(), seen.end()};
}

LaurentTuple canonicalize_class(const LaurentTuple &g) {
    LaurentTuple best;
    bool have = false;
    for (auto t : unpermuted_images(g, OrbitOptions{})) {
        std::sort(t.c.begin(), t.c.end(), [](const Poly &a, const Poly &b) { return Poly::compare(a, b) < 0; });
        if (!have || compare_tuples(t, best) < 0) {
            best = t;
            have = true;
        }
    }
    return best;
}

}  // namespace qconv
