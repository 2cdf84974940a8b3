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

#ifndef QCONV_TABLES_H
#define QCONV_TABLES_H

#include <string>
#include <vector>

#include "qconv/search.h"

namespace qconv {

/// Directory of the golden table files (env QCONV_DATA_DIR overrides the
/// build-time location).
std::string data_dir();

/// Lines of a golden file with comments and blank lines removed.
std::vector<std::string> golden_lines(int table);

// ---- Golden records ----

struct GoldenAutocorr {
    Field field = Field::F2;
    int max_deg = 0;
    std::vector<std::string> tags;  // one per column
    std::vector<Poly> g;
    std::vector<Poly> r_plus;
    std::vector<std::vector<bool>> stars;  // [row][column]
    /// Column c as a generator tuple (starred rows in row order).
    LaurentTuple column(int c) const;
};
GoldenAutocorr load_autocorr(int table);  // 1 or 3

/// "(n,k)" or "(n,k,d)"; d = -1 when absent.
struct CodeParams {
    int n = 0, k = 0, d = -1;
    static CodeParams parse(std::string_view s);
    std::string str() const;
    bool operator==(const CodeParams &o) const = default;
};

struct GoldenTailBitingRow {  // Tables II, IV
    int n = 0;
    int nu = 0;
    uint64_t n_d = 0;
    CodeParams b, b_dual, stabilizer;
    std::string reference;  // d_CSS / d_opt, static
};
std::vector<GoldenTailBitingRow> load_tailbiting(int table);  // 2 or 4

struct GoldenBestRow {  // Tables V, VI
    int nu = 0;
    LaurentTuple g;
    std::vector<LaurentTuple> h;
    int d_perp = 0;
    uint64_t n_d = 0;
};
std::vector<GoldenBestRow> load_best(int table);  // 5 or 6

struct GoldenTbDistanceRow {  // Tables VII, VIII
    int nu = 0;
    int d_perp = 0;
    int alpha_num = 0, alpha_den = 1;  // unreduced, as printed
    int bound = 0;
    uint64_t n_d = 0;
    CodeParams b, b_dual, stabilizer;
    std::string reference;
};
std::vector<GoldenTbDistanceRow> load_tb_distance(int table);  // 7 or 8

// ---- Regeneration ----

struct TableBudget {
    int f2_search_max_nu = 8;  // Table V rows searched up to here, verified above
    int f4_search_max_nu = 4;  // Table VI
    int f2_tb_max_nu = 8;      // Table VII rows with a full length search
    int f4_tb_max_nu = 4;      // Table VIII
    bool verify_beyond = true; // check d(B_perp) at the printed length for other rows
    uint64_t max_candidates = uint64_t{1} << 27;
    int threads = 0;
};

struct TableRun {
    int table = 0;
    std::string rendered;            // golden-file layout
    std::vector<std::string> diffs;  // mismatches against the golden file
    std::vector<std::string> notes;  // gaps, extra findings, coverage
    int rows_full = 0;               // rows recomputed in full
    int rows_verified = 0;           // rows only verified
    double seconds = 0;
    bool ok() const { return diffs.empty(); }
};

/// Regenerates table 1..8 and diffs it against the golden file.
TableRun run_table(int table, const TableBudget &budget = {});

int parse_table_id(std::string_view s);  // "I".."VIII" or "1".."8"
std::string roman(int table);

}  // namespace qconv

#endif
