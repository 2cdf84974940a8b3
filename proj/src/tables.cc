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

#include "qconv/tables.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef QCONV_DATA_DIR
#define QCONV_DATA_DIR "data"
#endif

namespace qconv {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string w;
    while (is >> w) {
        out.push_back(w);
    }
    return out;
}

std::vector<std::string> split_bars(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        out.push_back(part);
    }
    return out;
}

std::string normalize(std::string_view s) {
    std::string out;
    for (const auto &w : split_ws(s)) {
        out += (out.empty() ? "" : " ") + w;
    }
    return out;
}

[[noreturn]] void bad_row(int table, const std::string &line) {
    throw std::runtime_error("malformed row in table " + std::to_string(table) + ": " + line);
}

std::string tuple_text(const LaurentTuple &t) { return t.str(); }

// Field of a Table V/VI/VII/VIII row.
Field best_field(int table) { return table == 5 || table == 7 ? Field::F2 : Field::F4; }

struct TupleLess {
    bool operator()(const LaurentTuple &a, const LaurentTuple &b) const { return compare_tuples(a, b) < 0; }
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename T>
std::string show(const T &v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ---- Tables I, III ----

void run_autocorr(int table, TableRun &run) {
    GoldenAutocorr gold = load_autocorr(table);
    auto rows = autocorr_table(gold.field, gold.max_deg);
    auto found = table_columns(gold.field, gold.max_deg);
    std::vector<SubsetColumn> shown;
    for (size_t c = 0; c < gold.tags.size(); c++) {
        LaurentTuple col = gold.column((int)c);
        auto it = std::find_if(found.begin(), found.end(), [&](const SubsetColumn &s) { return s.g == col; });
        if (it == found.end()) {
            run.diffs.push_back("column " + std::to_string(c + 1) + " (" + gold.tags[c] + ") {" + col.str() +
                                "} is not a noncatastrophic zero-sum subset");
            continue;
        }
        if (it->tag != gold.tags[c]) {
            run.diffs.push_back("column " + std::to_string(c + 1) + " is labelled " + gold.tags[c] + " but has " +
                                std::to_string(col.n()) + " components");
        }
        shown.push_back({gold.tags[c], col.n(), col});
    }
    mark_memberships(rows, shown);
    run.rendered = render_autocorr_table(gold.field, rows, shown);
    // Textual comparison, whitespace-normalized.
    std::vector<std::string> mine;
    std::istringstream is(run.rendered);
    for (std::string l; std::getline(is, l);) {
        mine.push_back(normalize(l));
    }
    auto theirs = golden_lines(table);
    for (auto &l : theirs) {
        l = normalize(l);
    }
    if (mine.size() != theirs.size()) {
        run.diffs.push_back("row count " + std::to_string(mine.size()) + " vs golden " + std::to_string(theirs.size()));
    }
    for (size_t i = 0; i < std::min(mine.size(), theirs.size()); i++) {
        if (mine[i] != theirs[i]) {
            run.diffs.push_back("line " + std::to_string(i + 1) + ": got '" + mine[i] + "', golden '" + theirs[i] + "'");
        }
    }
    run.rows_full = (int)rows.size();
    // Everything the enumeration finds, by rate and equivalence class.
    std::map<int, std::set<LaurentTuple, TupleLess>> classes, shown_classes;
    std::map<int, int> subsets;
    for (const auto &s : found) {
        subsets[s.n]++;
        classes[s.n].insert(canonicalize_class(s.g));
    }
    for (const auto &s : shown) {
        shown_classes[s.n].insert(canonicalize_class(s.g));
    }
    for (const auto &[n, cls] : classes) {
        std::ostringstream os;
        os << "rate 1/" << n << ": " << subsets[n] << " zero-sum subsets in " << cls.size() << " classes, "
           << shown_classes[n].size() << " shown";
        std::vector<std::string> missing;
        for (const auto &c : cls) {
            if (!shown_classes[n].count(c)) {
                missing.push_back("{" + c.str() + "}");
            }
        }
        if (!missing.empty() && missing.size() <= 4) {
            os << "; not shown:";
            for (const auto &m : missing) {
                os << ' ' << m;
            }
        }
        run.notes.push_back(os.str());
    }
}

// ---- Tables II, IV ----

void run_tailbiting(int table, const TableBudget &budget, TableRun &run) {
    auto gold = load_tailbiting(table);
    GoldenAutocorr cols = load_autocorr(table == 2 ? 1 : 3);
    if (gold.size() != cols.tags.size()) {
        run.diffs.push_back("row count " + std::to_string(gold.size()) + " vs " + std::to_string(cols.tags.size()) +
                            " columns in table " + std::to_string(table - 1));
    }
    std::ostringstream out;
    for (size_t i = 0; i < std::min(gold.size(), cols.tags.size()); i++) {
        const auto &g = gold[i];
        ConvCode code = ConvCode::make(cols.column((int)i));
        auto tb = min_tailbiting_length(code, TailBitingMode::kSyndromeDistinct, 0, budget.threads);
        std::string where = "row " + std::to_string(i + 1) + " (1/" + std::to_string(g.n) + "): ";
        if (!tb.found) {
            run.diffs.push_back(where + tb.note);
            continue;
        }
        if (!tb.note.empty()) {
            run.diffs.push_back(where + tb.note);
        }
        CodeParams b{tb.b.length, tb.b.rank(), -1};
        if (g.b.d >= 0) {
            DistanceOptions o;
            o.count = false;
            o.threads = budget.threads;
            b.d = block_min_distance(tb.b, o).d;
        }
        CodeParams bd{tb.b_dual.length, tb.b_dual.rank(), tb.d_dual};
        CodeParams st{tb.stabilizer.n, tb.stabilizer.k, tb.stabilizer.d};
        uint64_t n_d = orthogonal_distance(code).n_d;
        auto cmp = [&](const std::string &what, const std::string &mine, const std::string &theirs) {
            if (mine != theirs) {
                run.diffs.push_back(where + what + " " + mine + " vs golden " + theirs);
            }
        };
        cmp("n", std::to_string(code.n), std::to_string(g.n));
        cmp("nu", std::to_string(code.nu), std::to_string(g.nu));
        cmp("N", std::to_string(n_d), std::to_string(g.n_d));
        cmp("B", b.str(), g.b.str());
        cmp("B_perp", bd.str(), g.b_dual.str());
        cmp("stabilizer", st.str(), g.stabilizer.str());
        out << "1/" << code.n << ' ' << code.nu << ' ' << n_d << ' ' << b.str() << ' ' << bd.str() << ' ' << st.str()
            << ' ' << g.reference << '\n';
        run.rows_full++;
    }
    run.rendered = out.str();
}

// ---- Tables V, VI ----

void run_best(int table, const TableBudget &budget, TableRun &run) {
    Field f = best_field(table);
    auto gold = load_best(table);
    int max_nu = f == Field::F2 ? budget.f2_search_max_nu : budget.f4_search_max_nu;
    std::map<int, std::vector<const GoldenBestRow *>> by_nu;
    for (const auto &r : gold) {
        by_nu[r.nu].push_back(&r);
    }
    std::ostringstream out;
    for (const auto &[nu, rows] : by_nu) {
        std::string where = "nu=" + std::to_string(nu) + ": ";
        // Every printed row is verified (generator, basis, d_perp, N).
        for (const auto *r : rows) {
            RowClaim c;
            c.field = f;
            c.g = r->g;
            c.h = r->h;
            c.nu = r->nu;
            c.d_perp = r->d_perp;
            c.n_d = r->n_d;
            auto rep = table_row_verify(c);
            for (const auto &chk : rep.checks) {
                if (!chk.ok) {
                    run.diffs.push_back(where + r->g.str() + ": " + chk.name + " " + chk.actual + " vs " + chk.expected);
                }
            }
        }
        if (nu > max_nu) {
            run.rows_verified += (int)rows.size();
            run.notes.push_back(where + "verified only (beyond the search budget)");
            for (const auto *r : rows) {
                out << nu << " | " << tuple_text(r->g) << " | " << r->h[0].str() << " | " << r->h[1].str() << " | "
                    << r->d_perp << ' ' << r->n_d << '\n';
            }
            continue;
        }
        SearchBudget sb;
        sb.max_candidates = budget.max_candidates;
        sb.threads = budget.threads;
        auto rep = best_rate13(f, nu, sb);
        run.notes.push_back(rep.coverage());
        if (!rep.complete) {
            run.diffs.push_back(where + "search incomplete");
        }
        std::set<LaurentTuple, TupleLess> want;
        std::map<LaurentTuple, const GoldenBestRow *, TupleLess> golden_of;
        for (const auto *r : rows) {
            auto c = canonicalize_class(r->g);
            want.insert(c);
            golden_of[c] = r;
        }
        std::set<LaurentTuple, TupleLess> got;
        for (const auto &row : rep.rows) {
            got.insert(row.g);
        }
        for (const auto &c : want) {
            if (!got.count(c)) {
                run.diffs.push_back(where + "printed class {" + golden_of[c]->g.str() + "} not among the best");
            }
        }
        for (const auto &row : rep.rows) {
            if (!want.count(row.g)) {
                run.diffs.push_back(where + "extra best class {" + row.g.str() + "} d=" + std::to_string(row.d_perp) +
                                    " N=" + std::to_string(row.n_d));
            }
            if (!rows.empty() && (row.d_perp != rows[0]->d_perp || row.n_d != rows[0]->n_d)) {
                run.diffs.push_back(where + "best d/N " + std::to_string(row.d_perp) + "/" + std::to_string(row.n_d) +
                                    " vs golden " + std::to_string(rows[0]->d_perp) + "/" +
                                    std::to_string(rows[0]->n_d));
            }
        }
        // Printed representatives first (in printed order), then any extras.
        for (const auto *r : rows) {
            out << nu << " | " << tuple_text(r->g) << " | " << r->h[0].str() << " | " << r->h[1].str() << " | "
                << r->d_perp << ' ' << r->n_d << '\n';
        }
        for (const auto &row : rep.rows) {
            if (!want.count(row.g)) {
                out << nu << " | " << tuple_text(row.g) << " | " << row.h[0].str() << " | " << row.h[1].str()
                    << " | " << row.d_perp << ' ' << row.n_d << "   # found\n";
            }
        }
        run.rows_full += (int)rows.size();
    }
    run.rendered = out.str();
}

// ---- Tables VII, VIII ----

void run_tb_distance(int table, const TableBudget &budget, TableRun &run) {
    Field f = best_field(table);
    auto gold = load_tb_distance(table);
    auto codes = load_best(table - 2);
    if (gold.size() != codes.size()) {
        run.diffs.push_back("row count " + std::to_string(gold.size()) + " vs " + std::to_string(codes.size()) +
                            " codes in table " + std::to_string(table - 2));
    }
    int max_nu = f == Field::F2 ? budget.f2_tb_max_nu : budget.f4_tb_max_nu;
    std::ostringstream out;
    for (size_t i = 0; i < std::min(gold.size(), codes.size()); i++) {
        const auto &g = gold[i];
        ConvCode code = ConvCode::make(codes[i].g);
        std::string where = "row " + std::to_string(i + 1) + " (nu=" + std::to_string(g.nu) + "): ";
        bool full = code.nu <= max_nu;
        // Mismatches outside the budgeted check are notes, not failures.
        auto report = [&](bool counted, const std::string &msg) {
            if (counted) {
                run.diffs.push_back(where + msg);
            } else {
                run.notes.push_back(where + msg + " (outside the budgeted check)");
            }
        };
        Trellis t = build_trellis(code.field, codes[i].h);
        DistanceReport d = analyze(t);
        Rational printed = Rational::make(g.alpha_num, g.alpha_den);
        if (d.d_perp != g.d_perp) {
            report(true, "d_perp " + std::to_string(d.d_perp) + " vs golden " + std::to_string(g.d_perp));
        }
        if (d.n_d != g.n_d) {
            report(true, "N " + std::to_string(d.n_d) + " vs golden " + std::to_string(g.n_d));
        }
        if (!(d.alpha == printed)) {
            report(full, "alpha " + d.alpha.str() + " (cycle " + std::to_string(d.cycle_weight) + "/" +
                             std::to_string(d.cycle_length) + ") vs golden " + std::to_string(g.alpha_num) + "/" +
                             std::to_string(g.alpha_den));
        }
        if (d.bound() != g.bound) {
            report(full, "bound " + std::to_string(d.bound()) + " vs golden " + std::to_string(g.bound));
        }
        CodeParams b, bd, st;
        if (full) {
            auto tb = min_tailbiting_length(code, TailBitingMode::kDistancePreserving, 0, budget.threads);
            if (!tb.found) {
                report(true, tb.note);
                continue;
            }
            if (!tb.note.empty()) {
                report(true, tb.note);
            }
            b = {tb.b.length, tb.b.rank(), -1};
            bd = {tb.b_dual.length, tb.b_dual.rank(), tb.d_dual};
            st = {tb.stabilizer.n, tb.stabilizer.k, tb.stabilizer.d};
            run.rows_full++;
        } else if (budget.verify_beyond) {
            int L = g.b.n / code.n;
            BlockCode bb = tail_bite(code, L);
            BlockCode bdual = tail_bite(f, codes[i].h, L);
            bdual.tb_generators = codes[i].h;
            bdual.tb_blocks = L;
            if (bb.rank() + bdual.rank() != bb.length) {
                report(true, "wrapped basis does not span the dual at L = " + std::to_string(L));
            }
            int dd = tailbiting_distance(t, L, false, budget.threads).d;
            b = {bb.length, bb.rank(), -1};
            bd = {bdual.length, bdual.rank(), dd};
            st = {bb.length, bb.length - 2 * b.k, dd};
            run.rows_verified++;
        } else {
            run.notes.push_back(where + "skipped");
            continue;
        }
        if (!(b == g.b)) {
            report(true, "B " + b.str() + " vs golden " + g.b.str());
        }
        if (!(bd == g.b_dual)) {
            report(true, "B_perp " + bd.str() + " vs golden " + g.b_dual.str());
        }
        if (!(st == g.stabilizer)) {
            report(true, "stabilizer " + st.str() + " vs golden " + g.stabilizer.str());
        }
        out << code.nu << ' ' << d.d_perp << ' ' << d.cycle_weight << '/' << d.cycle_length << ' ' << d.bound() << ' '
            << d.n_d << ' ' << b.str() << ' ' << bd.str() << ' ' << st.str() << ' ' << g.reference
            << (full ? "" : "   # verified at the printed length") << '\n';
    }
    run.rendered = out.str();
}

}  // namespace

std::string data_dir() {
    if (const char *env = std::getenv("QCONV_DATA_DIR")) {
        return env;
    }
    return QCONV_DATA_DIR;
}

std::vector<std::string> golden_lines(int table) {
    std::string path = data_dir() + "/table" + std::to_string(table) + ".txt";
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open golden file " + path);
    }
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        if (!normalize(body).empty()) {
            out.push_back(body);
        }
    }
    return out;
}

LaurentTuple GoldenAutocorr::column(int c) const {
    std::vector<Poly> comps;
    for (size_t r = 0; r < g.size(); r++) {
        if (stars[r][c]) {
            comps.push_back(g[r]);
        }
    }
    return LaurentTuple(field, comps);
}

GoldenAutocorr load_autocorr(int table) {
    if (table != 1 && table != 3) {
        throw std::invalid_argument("autocorrelation tables are I and III");
    }
    GoldenAutocorr t;
    t.field = table == 1 ? Field::F2 : Field::F4;
    auto lines = golden_lines(table);
    if (lines.empty()) {
        bad_row(table, "(empty)");
    }
    auto head = split_ws(lines[0]);
    if (head.empty() || head[0] != "columns") {
        bad_row(table, lines[0]);
    }
    t.tags.assign(head.begin() + 1, head.end());
    for (size_t i = 1; i < lines.size(); i++) {
        auto w = split_ws(lines[i]);
        if (w.size() != 2 + t.tags.size()) {
            bad_row(table, lines[i]);
        }
        t.g.push_back(Poly::parse(w[0]));
        t.r_plus.push_back(Poly::parse(w[1]));
        std::vector<bool> s;
        for (size_t c = 0; c < t.tags.size(); c++) {
            if (w[2 + c] != "*" && w[2 + c] != ".") {
                bad_row(table, lines[i]);
            }
            s.push_back(w[2 + c] == "*");
        }
        t.stars.push_back(s);
        t.max_deg = std::max(t.max_deg, t.g.back().deg());
    }
    return t;
}

CodeParams CodeParams::parse(std::string_view s) {
    CodeParams p;
    std::vector<int> v;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            v.push_back(std::stoi(cur));
            cur.clear();
        } else if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') {
            cur += c;
        }
    }
    v.push_back(std::stoi(cur));
    if (v.size() < 2 || v.size() > 3) {
        throw std::invalid_argument("code parameters must be n,k or n,k,d");
    }
    p.n = v[0];
    p.k = v[1];
    p.d = v.size() == 3 ? v[2] : -1;
    return p;
}

std::string CodeParams::str() const {
    return std::to_string(n) + "," + std::to_string(k) + (d >= 0 ? "," + std::to_string(d) : "");
}

std::vector<GoldenTailBitingRow> load_tailbiting(int table) {
    if (table != 2 && table != 4) {
        throw std::invalid_argument("tail-biting tables are II and IV");
    }
    std::vector<GoldenTailBitingRow> out;
    for (const auto &line : golden_lines(table)) {
        auto w = split_ws(line);
        if (w.size() != 7 || w[0].rfind("1/", 0) != 0) {
            bad_row(table, line);
        }
        GoldenTailBitingRow r;
        r.n = std::stoi(w[0].substr(2));
        r.nu = std::stoi(w[1]);
        r.n_d = std::stoull(w[2]);
        r.b = CodeParams::parse(w[3]);
        r.b_dual = CodeParams::parse(w[4]);
        r.stabilizer = CodeParams::parse(w[5]);
        r.reference = w[6];
        out.push_back(r);
    }
    return out;
}

std::vector<GoldenBestRow> load_best(int table) {
    if (table != 5 && table != 6) {
        throw std::invalid_argument("best-code tables are V and VI");
    }
    Field f = best_field(table);
    std::vector<GoldenBestRow> out;
    for (const auto &line : golden_lines(table)) {
        auto parts = split_bars(line);
        if (parts.size() != 5) {
            bad_row(table, line);
        }
        GoldenBestRow r;
        r.nu = std::stoi(parts[0]);
        r.g = LaurentTuple::parse(f, normalize(parts[1]));
        r.h = {LaurentTuple::parse(f, normalize(parts[2])), LaurentTuple::parse(f, normalize(parts[3]))};
        auto dn = split_ws(parts[4]);
        if (dn.size() != 2) {
            bad_row(table, line);
        }
        r.d_perp = std::stoi(dn[0]);
        r.n_d = std::stoull(dn[1]);
        out.push_back(r);
    }
    return out;
}

std::vector<GoldenTbDistanceRow> load_tb_distance(int table) {
    if (table != 7 && table != 8) {
        throw std::invalid_argument("tail-biting distance tables are VII and VIII");
    }
    std::vector<GoldenTbDistanceRow> out;
    for (const auto &line : golden_lines(table)) {
        auto w = split_ws(line);
        if (w.size() != 9) {
            bad_row(table, line);
        }
        GoldenTbDistanceRow r;
        r.nu = std::stoi(w[0]);
        r.d_perp = std::stoi(w[1]);
        auto slash = w[2].find('/');
        if (slash == std::string::npos) {
            bad_row(table, line);
        }
        r.alpha_num = std::stoi(w[2].substr(0, slash));
        r.alpha_den = std::stoi(w[2].substr(slash + 1));
        r.bound = std::stoi(w[3]);
        r.n_d = std::stoull(w[4]);
        r.b = CodeParams::parse(w[5]);
        r.b_dual = CodeParams::parse(w[6]);
        r.stabilizer = CodeParams::parse(w[7]);
        r.reference = w[8];
        out.push_back(r);
    }
    return out;
}

TableRun run_table(int table, const TableBudget &budget) {
    auto t0 = std::chrono::steady_clock::now();
    TableRun run;
    run.table = table;
    switch (table) {
        case 1:
        case 3:
            run_autocorr(table, run);
            break;
        case 2:
        case 4:
            run_tailbiting(table, budget, run);
            break;
        case 5:
        case 6:
            run_best(table, budget, run);
            break;
        case 7:
        case 8:
            run_tb_distance(table, budget, run);
            break;
        default:
            throw std::invalid_argument("tables are numbered 1..8");
    }
    run.seconds = since(t0);
    return run;
}

int parse_table_id(std::string_view s) {
    static const char *names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
    for (int i = 0; i < 8; i++) {
        if (s == names[i] || s == std::to_string(i + 1)) {
            return i + 1;
        }
    }
    std::string lower;
    for (char c : s) {
        lower += (char)std::toupper((unsigned char)c);
    }
    for (int i = 0; i < 8; i++) {
        if (lower == names[i]) {
            return i + 1;
        }
    }
    throw std::invalid_argument("unknown table '" + std::string(s) + "' (use I..VIII)");
}

std::string roman(int table) {
    static const char *names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
    if (table < 1 || table > 8) {
        throw std::invalid_argument("tables are numbered 1..8");
    }
    return names[table - 1];
}

}  // namespace qconv
