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

#ifndef QCONV_POLY_H
#define QCONV_POLY_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qconv/fields.h"

namespace qconv {

/// Finite Laurent polynomial over GF(4) (GF(2) polynomials are the ones with
/// binary coefficients).
///
/// Stored bitsliced: bit i of the x / z planes holds the label bits of the
/// coefficient of D^(low + i).  The support may span at most 64 consecutive
/// degrees; operations that would exceed this throw std::overflow_error.
class Poly {
   public:
    static constexpr int kMaxSpan = 64;

    Poly() = default;
    static Poly monomial(F4 c, int degree);
    static Poly constant(F4 c) { return monomial(c, 0); }
    static Poly from_coeffs(std::span<const F4> coeffs, int low = 0);
    /// From raw planes (bit i = degree low + i).
    static Poly from_planes(uint64_t x, uint64_t z, int low = 0);
    /// Ascending coefficient string, e.g. "1101" = 1 + D + D^3.
    static Poly parse(std::string_view text);

    bool is_zero() const { return (x_ | z_) == 0; }
    /// Lowest degree with a nonzero coefficient (0 for the zero polynomial).
    int low() const { return low_; }
    /// Highest degree with a nonzero coefficient (-1 for the zero polynomial).
    int deg() const;
    int span() const { return is_zero() ? 0 : deg() - low_ + 1; }
    int weight() const { return __builtin_popcountll(x_ | z_); }
    bool is_binary() const { return x_ == z_; }
    bool is_polynomial() const { return low_ >= 0; }
    bool is_monomial() const { return weight() == 1; }
    uint64_t x_plane() const { return x_; }
    uint64_t z_plane() const { return z_; }

    F4 coeff(int degree) const;
    F4 lowest_coeff() const { return coeff(low_); }
    F4 leading_coeff() const { return coeff(deg()); }
    std::vector<F4> coeffs_from(int first, int last) const;

    Poly operator+(const Poly &o) const;
    Poly &operator+=(const Poly &o) { return *this = *this + o; }
    Poly operator-(const Poly &o) const { return *this + o; }
    Poly operator*(const Poly &o) const;
    Poly scaled(F4 c) const;
    Poly shifted(int k) const;
    /// Coefficient-wise Frobenius conjugation.
    Poly conj() const;
    /// D -> D^-1.
    Poly reversed() const;
    /// D -> a D (coefficient of D^k multiplied by a^k).
    Poly modulated(F4 a) const;
    /// Terms of degree >= 0 only.
    Poly nonneg_part() const;

    /// Euclidean division of polynomials (both must have low() >= 0).
    std::pair<Poly, Poly> divmod(const Poly &divisor) const;
    /// Shift to start at degree 0 and scale so that the constant term is 1.
    Poly monic_at_zero() const;
    /// Scale so that the leading coefficient is 1.
    Poly monic_leading() const;

    /// Ascending coefficient string from degree 0 to deg() ("0" for zero).
    /// Requires low() >= 0.
    std::string str() const;
    /// "1 + wD + D^3" style.
    std::string pretty() const;

    bool operator==(const Poly &o) const = default;

    /// Canonical-form order: by degree, then ascending coefficient string
    /// with 0 < 1 < w < W.
    static int compare(const Poly &a, const Poly &b);

   private:
    Poly(int low, uint64_t x, uint64_t z);
    void normalize();

    int low_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

/// Monic GCD (leading coefficient 1) of polynomials; throws if both are zero.
Poly poly_gcd(const Poly &a, const Poly &b);

/// Conjugate time reversal a^dagger(D^-1) times b(D).
inline Poly correlate(const Poly &a, const Poly &b) { return a.conj().reversed() * b; }

/// Non-negative-degree part of g^dagger(D^-1) g(D).
Poly autocorrelation_nonneg(const Poly &g);

/// An n-tuple of Laurent polynomials over one field.
struct LaurentTuple {
    Field field = Field::F4;
    std::vector<Poly> c;

    LaurentTuple() = default;
    LaurentTuple(Field f, std::vector<Poly> comps);
    /// Space-separated ascending coefficient strings, e.g. "111 1101 1111".
    static LaurentTuple parse(Field f, std::string_view text);

    int n() const { return (int)c.size(); }
    bool is_zero() const;
    int weight() const;
    /// Highest degree over all components (-1 if zero).
    int deg() const;
    /// Lowest degree over nonzero components (0 if zero).
    int low() const;
    bool is_polynomial() const;
    /// Coefficient n-tuple at D^k.
    std::vector<F4> block(int k) const;

    LaurentTuple shifted(int k) const;
    LaurentTuple scaled(F4 a) const;
    LaurentTuple times(const Poly &u) const;
    LaurentTuple operator+(const LaurentTuple &o) const;

    std::string str() const;
    std::string pretty() const;

    bool operator==(const LaurentTuple &o) const = default;
};

/// R_ab(D) = sum_j a_j^dagger(D^-1) b_j(D).  The coefficient of D^l is the
/// Hermitian inner product <D^l a, b> = <a, D^-l b>, so R_ab = 0 iff a is
/// orthogonal to every shift of b.
Poly cross_correlation(const LaurentTuple &a, const LaurentTuple &b);

/// The symmetries preserving weight and orthogonality.
struct Symmetry {
    enum class Kind { kScale, kConjugate, kReverse, kModulate, kPermute };
    Kind kind = Kind::kConjugate;
    int component = 0;       // kScale
    F4 alpha = F4::one();    // kScale, kModulate
    int shift = 0;           // kScale
    std::vector<int> perm;   // kPermute: output j takes input perm[j]

    static Symmetry scale(int component, F4 alpha, int shift);
    static Symmetry conjugate();
    static Symmetry reverse();
    static Symmetry modulate(F4 alpha);
    static Symmetry permute(std::vector<int> perm);
    std::string describe() const;
};

LaurentTuple apply_symmetry(const LaurentTuple &g, const Symmetry &sym);

}  // namespace qconv

#endif
