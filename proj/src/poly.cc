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

#include "qconv/poly.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qconv {

namespace {

// Carry-less product; caller guarantees the result fits in 64 bits.
uint64_t clmul(uint64_t a, uint64_t b) {
    if (__builtin_popcountll(a) > __builtin_popcountll(b)) {
        std::swap(a, b);
    }
    uint64_t r = 0;
    while (a) {
        int i = __builtin_ctzll(a);
        r ^= b << i;
        a &= a - 1;
    }
    return r;
}

int top_bit(uint64_t w) { return 63 - __builtin_clzll(w); }

uint64_t bit_reverse(uint64_t w, int width) {
    uint64_t r = 0;
    for (int i = 0; i < width; i++) {
        if (w >> i & 1) {
            r |= uint64_t{1} << (width - 1 - i);
        }
    }
    return r;
}

[[noreturn]] void overflow(const char *what) {
    throw std::overflow_error(std::string("polynomial span exceeds 64 degrees in ") + what);
}

}  // namespace

Poly::Poly(int low, uint64_t x, uint64_t z) : low_(low), x_(x), z_(z) { normalize(); }

void Poly::normalize() {
    uint64_t m = x_ | z_;
    if (!m) {
        low_ = 0;
        x_ = z_ = 0;
        return;
    }
    int s = __builtin_ctzll(m);
    if (s) {
        x_ >>= s;
        z_ >>= s;
        low_ += s;
    }
}

Poly Poly::monomial(F4 c, int degree) { return Poly(degree, c.x(), c.z()); }

Poly Poly::from_planes(uint64_t x, uint64_t z, int low) { return Poly(low, x, z); }

Poly Poly::from_coeffs(std::span<const F4> coeffs, int low) {
    // Skip leading zeros so long zero-padded inputs still fit.
    size_t first = 0;
    while (first < coeffs.size() && coeffs[first].is_zero()) {
        first++;
    }
    size_t last = coeffs.size();
    while (last > first && coeffs[last - 1].is_zero()) {
        last--;
    }
    if (last - first > (size_t)kMaxSpan) {
        overflow("from_coeffs");
    }
    uint64_t x = 0, z = 0;
    for (size_t i = first; i < last; i++) {
        x |= (uint64_t)coeffs[i].x() << (i - first);
        z |= (uint64_t)coeffs[i].z() << (i - first);
    }
    return Poly(low + (int)first, x, z);
}

Poly Poly::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty polynomial string");
    }
    auto v = parse_f4_vector(text);
    return from_coeffs(v, 0);
}

int Poly::deg() const { return is_zero() ? -1 : low_ + top_bit(x_ | z_); }

F4 Poly::coeff(int degree) const {
    int i = degree - low_;
    if (i < 0 || i >= 64) {
        return F4::zero();
    }
    return F4((uint8_t)(((x_ >> i) & 1) | (((z_ >> i) & 1) << 1)));
}

std::vector<F4> Poly::coeffs_from(int first, int last) const {
    std::vector<F4> out;
    for (int d = first; d <= last; d++) {
        out.push_back(coeff(d));
    }
    return out;
}

Poly Poly::operator+(const Poly &o) const {
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(deg(), o.deg());
    if (hi - lo + 1 > kMaxSpan) {
        overflow("addition");
    }
    int sa = low_ - lo, sb = o.low_ - lo;
    return Poly(lo, (x_ << sa) ^ (o.x_ << sb), (z_ << sa) ^ (o.z_ << sb));
}

Poly Poly::operator*(const Poly &o) const {
    if (is_zero() || o.is_zero()) {
        return Poly();
    }
    if (span() + o.span() - 1 > kMaxSpan) {
        overflow("multiplication");
    }
    uint64_t p1 = clmul(x_, o.x_);
    uint64_t p2 = clmul(z_, o.z_);
    uint64_t p3 = clmul(x_, o.z_) ^ clmul(z_, o.x_);
    return Poly(low_ + o.low_, p3 ^ p2, p1 ^ p3);
}

Poly Poly::scaled(F4 c) const {
    auto [x, z] = scale_planes(c, x_, z_);
    return Poly(low_, x, z);
}

Poly Poly::shifted(int k) const {
    if (is_zero()) {
        return *this;
    }
    return Poly(low_ + k, x_, z_);
}

Poly Poly::conj() const { return Poly(low_, z_, x_); }

Poly Poly::reversed() const {
    if (is_zero()) {
        return *this;
    }
    int w = span();
    return Poly(-deg(), bit_reverse(x_, w), bit_reverse(z_, w));
}

Poly Poly::modulated(F4 a) const {
    if (a.is_zero()) {
        throw std::invalid_argument("modulation by zero");
    }
    uint64_t x = 0, z = 0;
    for (int i = 0; i < span(); i++) {
        F4 c = coeff(low_ + i) * power(a, low_ + i);
        x |= (uint64_t)c.x() << i;
        z |= (uint64_t)c.z() << i;
    }
    return Poly(low_, x, z);
}

Poly Poly::nonneg_part() const {
    if (low_ >= 0 || is_zero()) {
        return *this;
    }
    int drop = -low_;
    if (drop >= 64) {
        return Poly();
    }
    return Poly(0, x_ >> drop, z_ >> drop);
}

std::pair<Poly, Poly> Poly::divmod(const Poly &divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (!is_polynomial() || !divisor.is_polynomial()) {
        throw std::invalid_argument("divmod requires non-negative degrees");
    }
    Poly r = *this, q;
    int dd = divisor.deg();
    F4 inv = inverse(divisor.leading_coeff());
    while (!r.is_zero() && r.deg() >= dd) {
        int s = r.deg() - dd;
        Poly t = Poly::monomial(r.leading_coeff() * inv, s);
        q += t;
        r += divisor * t;
    }
    return {q, r};
}

Poly Poly::monic_at_zero() const {
    if (is_zero()) {
        return *this;
    }
    return shifted(-low_).scaled(inverse(lowest_coeff()));
}

Poly Poly::monic_leading() const {
    if (is_zero()) {
        return *this;
    }
    return scaled(inverse(leading_coeff()));
}

std::string Poly::str() const {
    if (is_zero()) {
        return "0";
    }
    if (!is_polynomial()) {
        throw std::invalid_argument("coefficient string of a Laurent polynomial with negative degrees");
    }
    std::string s;
    for (int d = 0; d <= deg(); d++) {
        s.push_back(to_char(coeff(d)));
    }
    return s;
}

std::string Poly::pretty() const {
    if (is_zero()) {
        return "0";
    }
    std::string s;
    for (int d = low_; d <= deg(); d++) {
        F4 c = coeff(d);
        if (c.is_zero()) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        std::string cs = c == F4::one() ? "" : std::string(1, to_char(c));
        if (d == 0) {
            s += c == F4::one() ? "1" : cs;
        } else {
            s += cs + "D";
            if (d != 1) {
                s += "^" + std::to_string(d);
            }
        }
    }
    return s;
}

int Poly::compare(const Poly &a, const Poly &b) {
    if (a.low_ != b.low_ && !a.is_zero() && !b.is_zero()) {
        return a.low_ < b.low_ ? -1 : 1;
    }
    if (a.deg() != b.deg()) {
        return a.deg() < b.deg() ? -1 : 1;
    }
    for (int d = a.low_; d <= a.deg(); d++) {
        int ra = a.coeff(d).rank(), rb = b.coeff(d).rank();
        if (ra != rb) {
            return ra < rb ? -1 : 1;
        }
    }
    return 0;
}

Poly poly_gcd(const Poly &a, const Poly &b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("gcd of two zero polynomials");
    }
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u.divmod(v).second;
        u = v;
        v = r;
    }
    return u.monic_leading();
}

Poly autocorrelation_nonneg(const Poly &g) { return correlate(g, g).nonneg_part(); }

LaurentTuple::LaurentTuple(Field f, std::vector<Poly> comps) : field(f), c(std::move(comps)) {
    if (f == Field::F2) {
        for (const auto &p : c) {
            if (!p.is_binary()) {
                throw std::invalid_argument("non-binary coefficient in a GF(2) tuple");
            }
        }
    }
}

LaurentTuple LaurentTuple::parse(Field f, std::string_view text) {
    std::vector<Poly> comps;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) {
            i++;
        }
        size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != ',' && text[j] != '\t') {
            j++;
        }
        if (j > i) {
            comps.push_back(Poly::parse(text.substr(i, j - i)));
        }
        i = j;
    }
    if (comps.empty()) {
        throw std::invalid_argument("empty tuple");
    }
    return LaurentTuple(f, std::move(comps));
}

bool LaurentTuple::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Poly &p) { return p.is_zero(); });
}

int LaurentTuple::weight() const {
    int w = 0;
    for (const auto &p : c) {
        w += p.weight();
    }
    return w;
}

int LaurentTuple::deg() const {
    int d = -1;
    for (const auto &p : c) {
        d = std::max(d, p.deg());
    }
    return d;
}

int LaurentTuple::low() const {
    bool any = false;
    int lo = 0;
    for (const auto &p : c) {
        if (!p.is_zero()) {
            lo = any ? std::min(lo, p.low()) : p.low();
            any = true;
        }
    }
    return lo;
}

bool LaurentTuple::is_polynomial() const {
    return std::all_of(c.begin(), c.end(), [](const Poly &p) { return p.is_polynomial(); });
}

std::vector<F4> LaurentTuple::block(int k) const {
    std::vector<F4> b;
    b.reserve(c.size());
    for (const auto &p : c) {
        b.push_back(p.coeff(k));
    }
    return b;
}

LaurentTuple LaurentTuple::shifted(int k) const {
    LaurentTuple r = *this;
    for (auto &p : r.c) {
        p = p.shifted(k);
    }
    return r;
}

LaurentTuple LaurentTuple::scaled(F4 a) const {
    LaurentTuple r = *this;
    for (auto &p : r.c) {
        p = p.scaled(a);
    }
    if (field == Field::F2 && !a.is_binary()) {
        r.field = Field::F4;
    }
    return r;
}

LaurentTuple LaurentTuple::times(const Poly &u) const {
    LaurentTuple r = *this;
    for (auto &p : r.c) {
        p = p * u;
    }
    if (!u.is_binary()) {
        r.field = Field::F4;
    }
    return r;
}

LaurentTuple LaurentTuple::operator+(const LaurentTuple &o) const {
    if (o.n() != n()) {
        throw std::invalid_argument("adding tuples of different widths");
    }
    LaurentTuple r = *this;
    for (int j = 0; j < n(); j++) {
        r.c[j] += o.c[j];
    }
    if (o.field == Field::F4) {
        r.field = Field::F4;
    }
    return r;
}

std::string LaurentTuple::str() const {
    std::string s;
    for (const auto &p : c) {
        if (!s.empty()) {
            s += ' ';
        }
        s += p.str();
    }
    return s;
}

std::string LaurentTuple::pretty() const {
    std::string s = "(";
    for (size_t j = 0; j < c.size(); j++) {
        if (j) {
            s += ", ";
        }
        s += c[j].pretty();
    }
    return s + ")";
}

Poly cross_correlation(const LaurentTuple &a, const LaurentTuple &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument(
            "cross-correlation of tuples with widths " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    }
    Poly r;
    for (int j = 0; j < a.n(); j++) {
        r += correlate(a.c[j], b.c[j]);
    }
    return r;
}

Symmetry Symmetry::scale(int component, F4 alpha, int shift) {
    if (alpha.is_zero()) {
        throw std::invalid_argument("scaling symmetry with alpha = 0");
    }
    Symmetry s;
    s.kind = Kind::kScale;
    s.component = component;
    s.alpha = alpha;
    s.shift = shift;
    return s;
}

Symmetry Symmetry::conjugate() { return Symmetry{}; }

Symmetry Symmetry::reverse() {
    Symmetry s;
    s.kind = Kind::kReverse;
    return s;
}

Symmetry Symmetry::modulate(F4 alpha) {
    if (alpha.is_zero()) {
        throw std::invalid_argument("modulation symmetry with alpha = 0");
    }
    Symmetry s;
    s.kind = Kind::kModulate;
    s.alpha = alpha;
    return s;
}

Symmetry Symmetry::permute(std::vector<int> perm) {
    Symmetry s;
    s.kind = Kind::kPermute;
    s.perm = std::move(perm);
    return s;
}

std::string Symmetry::describe() const {
    switch (kind) {
        case Kind::kScale:
            return "scale component " + std::to_string(component) + " by " + to_char(alpha) + "D^" +
                   std::to_string(shift);
        case Kind::kConjugate:
            return "conjugate";
        case Kind::kReverse:
            return "reverse";
        case Kind::kModulate:
            return std::string("modulate D->") + to_char(alpha) + "D";
        case Kind::kPermute: {
            std::string s = "permute";
            for (int p : perm) {
                s += " " + std::to_string(p);
            }
            return s;
        }
    }
    return "?";
}

LaurentTuple apply_symmetry(const LaurentTuple &g, const Symmetry &sym) {
    LaurentTuple r = g;
    switch (sym.kind) {
        case Symmetry::Kind::kScale:
            if (sym.component < 0 || sym.component >= g.n()) {
                throw std::out_of_range("scaling symmetry component out of range");
            }
            if (sym.alpha.is_zero()) {
                throw std::invalid_argument("scaling symmetry with alpha = 0");
            }
            r.c[sym.component] = g.c[sym.component].scaled(sym.alpha).shifted(sym.shift);
            if (!sym.alpha.is_binary()) {
                r.field = Field::F4;
            }
            break;
        case Symmetry::Kind::kConjugate:
            for (auto &p : r.c) {
                p = p.conj();
            }
            break;
        case Symmetry::Kind::kReverse:
            for (auto &p : r.c) {
                p = p.reversed();
            }
            break;
        case Symmetry::Kind::kModulate:
            for (auto &p : r.c) {
                p = p.modulated(sym.alpha);
            }
            if (!sym.alpha.is_binary()) {
                r.field = Field::F4;
            }
            break;
        case Symmetry::Kind::kPermute: {
            if ((int)sym.perm.size() != g.n()) {
                throw std::invalid_argument("permutation has the wrong size");
            }
            std::vector<bool> seen(g.n());
            for (int j = 0; j < g.n(); j++) {
                int p = sym.perm[j];
                if (p < 0 || p >= g.n() || seen[p]) {
                    throw std::invalid_argument("not a permutation");
                }
                seen[p] = true;
                r.c[j] = g.c[p];
            }
            break;
        }
    }
    return r;
}

}  // namespace qconv
