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

#ifndef QCONV_CONV_CODE_H
#define QCONV_CONV_CODE_H

#include <string>
#include <vector>

#include "qconv/poly.h"

namespace qconv {

/// Rate-1/n shift-invariant code generated by a single polynomial tuple g(D),
/// with every component having constant term 1 and no common factor.
struct ConvCode {
    Field field = Field::F4;
    int n = 0;
    LaurentTuple g;
    int nu = 0;

    /// Validates the invariants; throws std::invalid_argument otherwise.
    static ConvCode make(const LaurentTuple &g);
    static ConvCode parse(Field f, std::string_view text) { return make(LaurentTuple::parse(f, text)); }
    std::string str() const { return g.str(); }
};

/// Divides out the common monomial and the component gcd, then applies one
/// overall scalar so the first nonzero coefficient of the first nonzero
/// component is 1.  The result generates the same code.
LaurentTuple canonical_generator(const LaurentTuple &c);

/// Per-component normalization g_j -> g_j / (c D^k) so each component has
/// constant term 1.  This changes the code to an equivalent one.
LaurentTuple monic_components(const LaurentTuple &g);

/// gcd of all components (monic, leading coefficient 1).
Poly component_gcd(const LaurentTuple &g);

bool is_self_orthogonal(const LaurentTuple &g);
inline bool is_self_orthogonal(const ConvCode &c) { return is_self_orthogonal(c.g); }

/// Rate-1/n criterion: catastrophic iff the component gcd is not a monomial.
bool is_catastrophic(const LaurentTuple &g);

/// n-1 polynomial generators of the orthogonal code.
struct OrthogonalBasis {
    Field field = Field::F4;
    int n = 0;
    int nu = 0;  // constraint length of the parent code
    std::vector<LaurentTuple> h;
    std::vector<int> degrees;
    /// gcd of the (n-1)x(n-1) minors of the basis matrix; 1 for a basic basis.
    Poly minor_gcd;

    int degree_sum() const;
    /// sum of degrees equals the parent constraint length.
    bool minimal() const { return degree_sum() == nu; }
    bool basic() const { return minor_gcd == Poly::constant(F4::one()); }
};

/// Searches tuples in increasing degree for a minimal set of orthogonal
/// generators.  degree_budget < 0 means nu.  Throws std::runtime_error if
/// the budget is exhausted first.
OrthogonalBasis orthogonal_basis(const ConvCode &code, int degree_budget = -1);

/// Checks a user-supplied basis: orthogonality, rank n-1, minimal degree sum.
struct BasisCheck {
    bool orthogonal = false;
    bool full_rank = false;
    bool minimal = false;
    bool basic = false;
    int degree_sum = 0;
    bool ok() const { return orthogonal && full_rank && minimal && basic; }
};
BasisCheck check_basis(const ConvCode &code, const std::vector<LaurentTuple> &h);

/// Gcd of the maximal minors of a (rows x n) polynomial matrix, rows < n.
Poly maximal_minor_gcd(const std::vector<LaurentTuple> &rows);

struct OrbitOptions {
    bool conjugation = true;
    bool modulation = true;
    bool reversal = true;
    bool permutations = true;
};

/// Distinct component-monic tuples in the orbit of g.  Permuted images are
/// listed as ordered tuples.
std::vector<LaurentTuple> class_orbit(const LaurentTuple &g, const OrbitOptions &opts = {});

/// The least element of the orbit: components sorted by (degree, coefficient
/// string with 0 < 1 < w < W), tuples compared lexicographically.
LaurentTuple canonicalize_class(const LaurentTuple &g);

/// Lexicographic comparison of tuples under the component order above.
int compare_tuples(const LaurentTuple &a, const LaurentTuple &b);

}  // namespace qconv

#endif
