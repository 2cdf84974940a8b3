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

#ifndef QCONV_LINALG_H
#define QCONV_LINALG_H

#include <vector>

#include "qconv/fields.h"
#include "qconv/poly.h"

namespace qconv {

/// Small dense matrix over GF(4), row-major.
struct F4Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<F4> a;

    F4Matrix() = default;
    F4Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
    static F4Matrix from_rows(const std::vector<std::vector<F4>> &rows, int cols);

    F4 &at(int r, int c) { return a[(size_t)r * cols + c]; }
    F4 at(int r, int c) const { return a[(size_t)r * cols + c]; }
    std::vector<F4> row(int r) const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref();
    int rank() const;
    /// Basis of {v : M v = 0}, in the standard order given by the free columns.
    std::vector<std::vector<F4>> nullspace() const;
};

/// Rank over the rational function field F(D) of a polynomial matrix whose
/// rows are tuples.
int polynomial_rank(const std::vector<LaurentTuple> &rows);

/// Determinant of a square polynomial matrix (characteristic 2, so no signs).
Poly polynomial_determinant(std::vector<std::vector<Poly>> m);

}  // namespace qconv

#endif
