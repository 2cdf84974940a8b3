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

#include "qconv/code_spec.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace qconv {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
    std::string_view text;
    int column;  // 1-based
};

Token trim(std::string_view s, int column) {
    size_t a = 0, b = s.size();
    while (a < b && is_space(s[a])) {
        a++;
    }
    while (b > a && is_space(s[b - 1])) {
        b--;
    }
    return {s.substr(a, b - a), column + (int)a};
}

template <typename T>
T parse_number(const Token &t, int line) {
    T v{};
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size() || t.text.empty()) {
        int bad = ec == std::errc() ? (int)(p - t.text.data()) : 0;
        throw SpecError(line, t.column + bad, "expected a nonnegative integer, got '" + std::string(t.text) + "'");
    }
    if (v < 0) {
        throw SpecError(line, t.column, "expected a nonnegative integer");
    }
    return v;
}

LaurentTuple parse_tuple(const Token &t, Field f, int line) {
    std::string_view ok = f == Field::F2 ? "01 \t" : "01wW \t";
    for (size_t i = 0; i < t.text.size(); i++) {
        if (ok.find(t.text[i]) == std::string_view::npos) {
            throw SpecError(line, t.column + (int)i,
                            std::string("unexpected character '") + t.text[i] + "' in " + field_name(f) + " tuple");
        }
    }
    if (t.text.empty()) {
        throw SpecError(line, t.column, "empty tuple");
    }
    try {
        return LaurentTuple::parse(f, t.text);
    } catch (const std::exception &e) {
        throw SpecError(line, t.column, e.what());
    }
}

}  // namespace

SpecError::SpecError(int line, int column, const std::string &msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool CodeSpec::operator==(const CodeSpec &o) const {
    auto same_alpha = [](const std::optional<Rational> &a, const std::optional<Rational> &b) {
        return a.has_value() == b.has_value() && (!a || (a->num == b->num && a->den == b->den));
    };
    return name == o.name && field == o.field && g == o.g && h == o.h && nu == o.nu && d_perp == o.d_perp &&
           n_d == o.n_d && same_alpha(alpha, o.alpha);
}

CodeSpec parse_code_spec(std::string_view text) {
    CodeSpec spec;
    std::set<std::string> seen;
    std::optional<int> n_claim;
    int nu_line = 0, nu_col = 0;
    bool have_field = false;
    // g and h may only be read once the field is known; keep their tokens.
    struct Pending {
        std::string key;
        std::string value;
        int line, column;
    };
    std::vector<Pending> tuples;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        Token whole = trim(line, 1);
        if (whole.text.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw SpecError(line_no, whole.column, "expected 'key = value'");
        }
        Token key = trim(line.substr(0, eq), 1);
        Token value = trim(line.substr(eq + 1), (int)eq + 2);
        std::string k(key.text);
        if (k.empty()) {
            throw SpecError(line_no, whole.column, "missing key");
        }
        static const std::set<std::string> known = {"name", "field", "n", "g", "h", "nu", "d_perp", "N", "alpha"};
        if (!known.count(k)) {
            throw SpecError(line_no, key.column, "unknown key '" + k + "'");
        }
        if (k != "h" && !seen.insert(k).second) {
            throw SpecError(line_no, key.column, "duplicate key '" + k + "'");
        }
        if (value.text.empty()) {
            throw SpecError(line_no, value.column, "missing value for '" + k + "'");
        }
        if (k == "name") {
            spec.name = std::string(value.text);
        } else if (k == "field") {
            try {
                spec.field = parse_field(value.text);
            } catch (const std::exception &) {
                throw SpecError(line_no, value.column, "field must be f2 or f4");
            }
            have_field = true;
        } else if (k == "n") {
            n_claim = parse_number<int>(value, line_no);
        } else if (k == "g" || k == "h") {
            tuples.push_back({k, std::string(value.text), line_no, value.column});
        } else if (k == "nu") {
            spec.nu = parse_number<int>(value, line_no);
            nu_line = line_no;
            nu_col = value.column;
        } else if (k == "d_perp") {
            spec.d_perp = parse_number<int>(value, line_no);
        } else if (k == "N") {
            spec.n_d = parse_number<uint64_t>(value, line_no);
        } else if (k == "alpha") {
            try {
                spec.alpha = Rational::parse(value.text);
            } catch (const std::exception &) {
                throw SpecError(line_no, value.column, "alpha must be a fraction p/q");
            }
        }
    }
    if (!have_field) {
        throw SpecError(1, 1, "missing 'field'");
    }
    bool have_g = false;
    for (const auto &t : tuples) {
        LaurentTuple v = parse_tuple({t.value, t.column}, spec.field, t.line);
        if (t.key == "g") {
            spec.g = v;
            have_g = true;
        } else {
            spec.h.push_back(v);
        }
        if (n_claim && v.n() != *n_claim) {
            throw SpecError(t.line, t.column,
                            t.key + " has " + std::to_string(v.n()) + " components but n = " + std::to_string(*n_claim));
        }
    }
    if (!have_g) {
        throw SpecError(1, 1, "missing 'g'");
    }
    for (const auto &t : tuples) {
        if (t.key == "h") {
            LaurentTuple v = parse_tuple({t.value, t.column}, spec.field, t.line);
            if (v.n() != spec.g.n()) {
                throw SpecError(t.line, t.column, "h width differs from g");
            }
        }
    }
    ConvCode code;
    try {
        code = ConvCode::make(spec.g);
    } catch (const std::exception &e) {
        auto it = std::find_if(tuples.begin(), tuples.end(), [](const Pending &p) { return p.key == "g"; });
        throw SpecError(it->line, it->column, e.what());
    }
    if (spec.nu && *spec.nu != code.nu) {
        throw SpecError(nu_line, nu_col,
                        "claimed nu = " + std::to_string(*spec.nu) + " but the generator has nu = " +
                            std::to_string(code.nu));
    }
    return spec;
}

CodeSpec load_code_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code_spec(ss.str());
}

std::string emit_code_spec(const CodeSpec &spec) {
    std::ostringstream os;
    if (!spec.name.empty()) {
        os << "name = " << spec.name << '\n';
    }
    os << "field = " << field_name(spec.field) << '\n';
    os << "n = " << spec.g.n() << '\n';
    os << "g = " << spec.g.str() << '\n';
    for (const auto &h : spec.h) {
        os << "h = " << h.str() << '\n';
    }
    if (spec.nu) {
        os << "nu = " << *spec.nu << '\n';
    }
    if (spec.d_perp) {
        os << "d_perp = " << *spec.d_perp << '\n';
    }
    if (spec.n_d) {
        os << "N = " << *spec.n_d << '\n';
    }
    if (spec.alpha) {
        os << "alpha = " << spec.alpha->str() << '\n';
    }
    return os.str();
}

VerifyReport verify_spec(const CodeSpec &spec, const SpecVerifyOptions &opts) {
    RowClaim claim;
    claim.field = spec.field;
    claim.g = spec.g;
    claim.h = spec.h;
    claim.nu = spec.nu;
    claim.d_perp = spec.d_perp;
    claim.n_d = spec.n_d;
    claim.alpha = spec.alpha;
    VerifyReport rep = table_row_verify(claim);
    if (!rep.ok()) {
        return rep;
    }
    ConvCode code = spec.code();
    auto info = [&](std::string name, std::string value) { rep.checks.push_back({std::move(name), "", value, true}); };
    OrthogonalBasis basis;
    try {
        basis = orthogonal_basis(code);
    } catch (const std::exception &e) {
        rep.checks.push_back({"orthogonal basis", "found", e.what(), false});
        return rep;
    }
    if (spec.h.empty()) {
        std::string hs;
        for (const auto &h : basis.h) {
            hs += (hs.empty() ? "" : " | ") + h.str();
        }
        info("orthogonal basis", hs);
        rep.checks.push_back({"basis degree sum", std::to_string(code.nu), std::to_string(basis.degree_sum()),
                              basis.minimal()});
    }
    DistanceReport d;
    bool have_trellis = true;
    Trellis t;
    try {
        t = build_trellis(basis);
        d = analyze(t);
    } catch (const std::invalid_argument &) {
        have_trellis = false;
        d = orthogonal_distance(code);
    }
    if (!spec.d_perp) {
        info("d_perp", std::to_string(d.d_perp));
    }
    if (!spec.n_d) {
        info("N", std::to_string(d.n_d));
    }
    if (!have_trellis) {
        info("alpha", "skipped (trellis too large)");
        return rep;
    }
    if (!spec.alpha) {
        info("alpha", d.alpha.str() + " (cycle " + std::to_string(d.cycle_weight) + "/" +
                          std::to_string(d.cycle_length) + ")");
    }
    info("tail-biting bound", std::to_string(d.bound()));
    if (!opts.tailbiting || d.bound() > opts.max_tailbiting_bound) {
        info("tail-biting length", "skipped (bound above " + std::to_string(opts.max_tailbiting_bound) + ")");
        return rep;
    }
    auto tb = min_tailbiting_length(code, TailBitingMode::kDistancePreserving, 0, opts.threads);
    if (!tb.found) {
        rep.checks.push_back({"tail-biting length", "found", tb.note, false});
        return rep;
    }
    std::ostringstream os;
    os << "L = " << tb.L << ", B = (" << tb.b.length << "," << tb.b.rank() << "), B_perp = (" << tb.b_dual.length
       << "," << tb.b_dual.rank() << "," << tb.d_dual << "), stabilizer " << tb.stabilizer.str();
    rep.checks.push_back({"tail-biting length", "", os.str(), tb.note.empty()});
    if (!tb.note.empty()) {
        rep.checks.back().actual += " (" + tb.note + ")";
    }
    return rep;
}

}  // namespace qconv
