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

#include "qconv/linalg.h"

#include <stdexcept>
#include <utility>

namespace qconv {

F4Matrix F4Matrix::from_rows(const std::vector<std::vector<F4>> &rows, int cols) {
    F4Matrix m((int)rows.size(), cols);
    for (int r = 0; r < m.rows; r++) {
        if ((int)rows[r].size() != cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (int c = 0; c < cols; c++) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

std::vector<F4> F4Matrix::row(int r) const { return {a.begin() + (size_t)r * cols, a.begin() + (size_t)(r + 1) * cols}; }

std::vector<int> F4Matrix::rref() {
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; c++) {
        int sel = -1;
        for (int r = pr; r < rows; r++) {
            if (!at(r, c).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) {
            continue;
        }
        if (sel != pr) {
            for (int k = 0; k < cols; k++) {
                std::swap(at(sel, k), at(pr, k));
            }
        }
        F4 inv = inverse(at(pr, c));
        for (int k = c; k < cols; k++) {
            at(pr, k) *= inv;
        }
        for (int r = 0; r < rows; r++) {
            if (r == pr || at(r, c).is_zero()) {
                continue;
            }
            F4 f = at(r, c);
            for (int k = c; k < cols; k++) {
                at(r, k) += f * at(pr, k);
            }
        }
        pivots.push_back(c);
        pr++;
    }
    return pivots;
}

int F4Matrix::rank() const {
    F4Matrix m = *this;
    return (int)m.rref().size();
}

std::vector<std::vector<F4>> F4Matrix::nullspace() const {
    F4Matrix m = *this;
    auto pivots = m.rref();
    std::vector<int> pivot_of_col(cols, -1);
    for (int i = 0; i < (int)pivots.size(); i++) {
        pivot_of_col[pivots[i]] = i;
    }
    std::vector<std::vector<F4>> basis;
    for (int f = 0; f < cols; f++) {
        if (pivot_of_col[f] >= 0) {
            continue;
        }
        std::vector<F4> v(cols);
        v[f] = F4::one();
        for (int i = 0; i < (int)pivots.size(); i++) {
            v[pivots[i]] = m.at(i, f);  // -x = x in characteristic 2
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Euclidean elimination with unimodular row operations.  Returns the number
// of pivots; on return m is upper triangular in the pivot columns.
int euclid_eliminate(std::vector<std::vector<Poly>> &m, int cols) {
    int rows = (int)m.size();
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; c++) {
        while (true) {
            int best = -1;
            for (int r = pr; r < rows; r++) {
                if (!m[r][c].is_zero() && (best < 0 || m[r][c].deg() < m[best][c].deg())) {
                    best = r;
                }
            }
            if (best < 0) {
                break;
            }
            std::swap(m[best], m[pr]);
            bool done = true;
            for (int r = pr + 1; r < rows; r++) {
                if (m[r][c].is_zero()) {
                    continue;
                }
                Poly q = m[r][c].divmod(m[pr][c]).first;
                for (int k = c; k < cols; k++) {
                    m[r][k] += q * m[pr][k];
                }
                if (!m[r][c].is_zero()) {
                    done = false;
                }
            }
            if (done) {
                pr++;
                break;
            }
        }
    }
    return pr;
}

}  // namespace

int polynomial_rank(const std::vector<LaurentTuple> &rows) {
    if (rows.empty()) {
        return 0;
    }
    int cols = rows[0].n();
    std::vector<std::vector<Poly>> m;
    for (const auto &t : rows) {
        if (t.n() != cols) {
            throw std::invalid_argument("rows of different widths");
        }
        LaurentTuple p = t.shifted(-t.low());
        m.push_back(p.c);
    }
    return euclid_eliminate(m, cols);
}

Poly polynomial_determinant(std::vector<std::vector<Poly>> m) {
    int n = (int)m.size();
    for (const auto &r : m) {
        if ((int)r.size() != n) {
            throw std::invalid_argument("determinant of a non-square matrix");
        }
    }
    int pivots = euclid_eliminate(m, n);
    if (pivots < n) {
        return Poly();
    }
    // The elimination only moves pivots downward-right; a full-rank square
    // matrix ends up upper triangular with pivot i in column i.
    Poly det = Poly::constant(F4::one());
    for (int i = 0; i < n; i++) {
        det = det * m[i][i];
    }
    return det;
}

}  // namespace qconv
