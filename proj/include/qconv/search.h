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

#ifndef QCONV_SEARCH_H
#define QCONV_SEARCH_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconv/block_code.h"

namespace qconv {

/// Polynomials with constant term 1 and degree <= max_deg, in table order:
/// by degree, then (F2) by integer value with D^k worth 2^k, (F4) by the
/// ascending coefficient string with 0 < 1 < w < W.
std::vector<Poly> monic_polys(Field f, int max_deg);

struct AutocorrRow {
    Poly g;
    Poly r_plus;                       // [R_gg]_{0+}
    std::vector<std::string> memberships;  // tags of the subsets containing g
};

std::vector<AutocorrRow> autocorr_table(Field f, int max_deg);

/// All size-n subsets of the rows (as generator tuples, in row order) whose
/// autocorrelations sum to zero and that are noncatastrophic.
std::vector<LaurentTuple> zero_sum_subsets(Field f, const std::vector<AutocorrRow> &rows, int n);

/// A rate-1/n column of Tables I / III.
struct SubsetColumn {
    std::string tag;  // "1/4" etc.
    int n = 0;
    LaurentTuple g;
};

/// Every zero-sum noncatastrophic subset with 3 <= n <= #rows, by rate, in
/// enumeration order.  The printed low-degree tables show a selection of
/// these; the golden files fix which ones.
std::vector<SubsetColumn> table_columns(Field f, int max_deg);

/// Fills AutocorrRow::memberships from the columns.
void mark_memberships(std::vector<AutocorrRow> &rows, const std::vector<SubsetColumn> &cols);

/// Plain-text table in the golden-file layout.
std::string render_autocorr_table(Field f, const std::vector<AutocorrRow> &rows, const std::vector<SubsetColumn> &cols);

struct BestCodeRow {
    int nu = 0;
    LaurentTuple g;
    std::vector<LaurentTuple> h;
    int d_perp = 0;
    uint64_t n_d = 0;
};

struct SearchBudget {
    uint64_t max_candidates = uint64_t{1} << 27;
    double max_seconds = 600;
    int threads = 0;
};

struct SearchReport {
    Field field = Field::F2;
    int nu = 0;
    std::vector<BestCodeRow> rows;
    uint64_t candidates = 0;      // tuples examined
    uint64_t total = 0;           // tuples in the search space
    uint64_t self_orthogonal = 0; // tuples passing R = 0 and noncatastrophicity
    uint64_t classes = 0;         // distinct equivalence classes among them
    bool complete = false;
    double seconds = 0;
    std::string coverage() const;
};

/// Exhaustive rate-1/3 search: sorted distinct triples of monic components
/// with maximum degree nu, filtered by R_gg = 0 and noncatastrophicity,
/// reduced to canonical classes; keeps the classes maximizing d_perp, then
/// minimizing N.  Rows carry a minimal orthogonal basis.
SearchReport best_rate13(Field f, int nu, const SearchBudget &budget = {});

/// Canonical classes of self-orthogonal noncatastrophic rate-1/3 codes of
/// constraint length nu.  `reduced` = false enumerates all ordered triples
/// (no symmetry pruning) as a completeness cross-check.
std::vector<LaurentTuple> self_orthogonal_classes(Field f, int nu, bool reduced);

/// d_perp and N of the orthogonal code, choosing the syndrome trellis when it
/// fits and the syndrome-window search otherwise.
DistanceReport orthogonal_distance(const ConvCode &code, bool with_slope = false);

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool ok() const;
    std::string str() const;
};

/// A row to verify: generator, optional basis and claimed values.
struct RowClaim {
    Field field = Field::F2;
    LaurentTuple g;
    std::vector<LaurentTuple> h;
    std::optional<int> nu;
    std::optional<int> d_perp;
    std::optional<uint64_t> n_d;
    std::optional<Rational> alpha;
};

/// Self-orthogonality, noncatastrophicity, basis checks (orthogonal, full
/// rank, degree sum = nu, basic), d_perp, N and (if claimed) alpha.
VerifyReport table_row_verify(const RowClaim &row);

}  // namespace qconv

#endif
