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

// Command-line front end.  Exit codes: 0 all checks pass, 1 verification
// mismatch, 2 usage error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qconv/code_spec.h"
#include "qconv/sim.h"
#include "qconv/tables.h"

using namespace qconv;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Emit { kText, kCsv, kMd };

Emit parse_emit(const std::string &s) {
    if (s == "text") return Emit::kText;
    if (s == "csv") return Emit::kCsv;
    if (s == "md") return Emit::kMd;
    throw UsageError("--emit must be text, csv or md");
}

// Rows of cells rendered in one of the output formats.
std::string render(Emit e, const std::vector<std::string> &head, const std::vector<std::vector<std::string>> &rows) {
    std::ostringstream os;
    if (e == Emit::kCsv) {
        auto line = [&](const std::vector<std::string> &r) {
            for (size_t i = 0; i < r.size(); i++) {
                os << (i ? "," : "") << r[i];
            }
            os << '\n';
        };
        line(head);
        for (const auto &r : rows) {
            line(r);
        }
        return os.str();
    }
    if (e == Emit::kMd) {
        auto line = [&](const std::vector<std::string> &r) {
            os << '|';
            for (const auto &c : r) {
                os << ' ' << c << " |";
            }
            os << '\n';
        };
        line(head);
        os << '|';
        for (size_t i = 0; i < head.size(); i++) {
            os << "---|";
        }
        os << '\n';
        for (const auto &r : rows) {
            line(r);
        }
        return os.str();
    }
    std::vector<size_t> w(head.size());
    for (size_t i = 0; i < head.size(); i++) {
        w[i] = head[i].size();
        for (const auto &r : rows) {
            w[i] = std::max(w[i], r[i].size());
        }
    }
    auto line = [&](const std::vector<std::string> &r) {
        for (size_t i = 0; i < r.size(); i++) {
            os << r[i] << (i + 1 < r.size() ? std::string(w[i] + 2 - r[i].size(), ' ') : "");
        }
        os << '\n';
    };
    line(head);
    for (const auto &r : rows) {
        line(r);
    }
    return os.str();
}

// A code given inline (--field/--g) or by spec file.
struct CodeArgs {
    std::string field = "f2";
    std::string g;
    std::string spec;
    std::string example;

    void add(CLI::App *cmd) {
        cmd->add_option("--field", field, "f2 or f4");
        cmd->add_option("--g", g, "generator, e.g. \"111 101 1\"");
        cmd->add_option("--spec", spec, "code spec file");
        cmd->add_option("--code", example, "example1 or example3");
    }
    CodeSpec get() const {
        int given = !g.empty() + !spec.empty() + !example.empty();
        if (given != 1) {
            throw UsageError("give exactly one of --g, --spec, --code");
        }
        if (!spec.empty()) {
            return load_code_spec(spec);
        }
        CodeSpec s;
        if (!example.empty()) {
            if (example == "example1") {
                s.field = Field::F4;
                s.g = LaurentTuple::parse(Field::F4, "11 1w 1W");
            } else if (example == "example3") {
                s.field = Field::F2;
                s.g = LaurentTuple::parse(Field::F2, "111 101 1");
            } else {
                throw UsageError("unknown example '" + example + "'");
            }
            return s;
        }
        try {
            s.field = parse_field(field);
            s.g = LaurentTuple::parse(s.field, g);
            ConvCode::make(s.g);
        } catch (const std::exception &e) {
            throw UsageError(std::string("bad generator: ") + e.what());
        }
        return s;
    }
};

int cmd_tables(const std::vector<std::string> &which, bool all, const TableBudget &budget, bool quiet) {
    std::vector<int> ids;
    if (all) {
        for (int i = 1; i <= 8; i++) {
            ids.push_back(i);
        }
    }
    for (const auto &w : which) {
        try {
            ids.push_back(parse_table_id(w));
        } catch (const std::exception &e) {
            throw UsageError(e.what());
        }
    }
    if (ids.empty()) {
        throw UsageError("name a table (I..VIII) or pass --all");
    }
    bool ok = true;
    for (int id : ids) {
        TableRun run = run_table(id, budget);
        std::cout << "== Table " << roman(id) << ": " << (run.ok() ? "match" : "MISMATCH") << " (" << run.rows_full
                  << " rows recomputed, " << run.rows_verified << " verified, " << run.seconds << " s)\n";
        if (!quiet) {
            std::cout << run.rendered;
        }
        for (const auto &d : run.diffs) {
            std::cout << "  diff: " << d << '\n';
        }
        for (const auto &n : run.notes) {
            std::cout << "  note: " << n << '\n';
        }
        ok = ok && run.ok();
    }
    return ok ? kOk : kMismatch;
}

int cmd_search(const std::string &field_s, int n, int nu, int max_deg, bool best, const std::string &emit_s,
               const SearchBudget &budget) {
    Field f;
    try {
        f = parse_field(field_s);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    Emit emit = parse_emit(emit_s);
    if (best) {
        if (nu < 1) {
            throw UsageError("--rate13-best needs --nu");
        }
        if (n != 0 && n != 3) {
            throw UsageError("--rate13-best searches rate 1/3 only");
        }
        auto rep = best_rate13(f, nu, budget);
        std::vector<std::vector<std::string>> rows;
        for (const auto &r : rep.rows) {
            rows.push_back({std::to_string(r.nu), r.g.str(), r.h[0].str(), r.h[1].str(), std::to_string(r.d_perp),
                            std::to_string(r.n_d)});
        }
        std::cout << render(emit, {"nu", "g", "h1", "h2", "d_perp", "N"}, rows);
        std::cerr << "coverage: " << rep.coverage() << '\n';
        return rep.complete ? kOk : kMismatch;
    }
    if (max_deg < 1) {
        max_deg = f == Field::F2 ? 3 : 2;
    }
    auto rows = autocorr_table(f, max_deg);
    if (n == 0) {
        std::vector<std::vector<std::string>> out;
        for (const auto &r : rows) {
            out.push_back({r.g.str(), r.r_plus.str()});
        }
        std::cout << render(emit, {"g", "R+"}, out);
        return kOk;
    }
    auto subs = zero_sum_subsets(f, rows, n);
    std::vector<std::vector<std::string>> out;
    for (const auto &s : subs) {
        out.push_back({"1/" + std::to_string(n), s.str(), canonicalize_class(s).str()});
    }
    std::cout << render(emit, {"rate", "components", "class"}, out);
    return kOk;
}

int cmd_verify(const std::string &path, const SpecVerifyOptions &opts) {
    CodeSpec spec;
    try {
        spec = load_code_spec(path);
    } catch (const SpecError &e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kUsage;
    }
    auto rep = verify_spec(spec, opts);
    std::cout << (spec.name.empty() ? path : spec.name) << ": " << spec.g.str() << " over " << field_name(spec.field)
              << '\n'
              << rep.str() << (rep.ok() ? "all checks pass\n" : "verification FAILED\n");
    return rep.ok() ? kOk : kMismatch;
}

int cmd_distance(const CodeArgs &args) {
    CodeSpec spec = args.get();
    ConvCode code = spec.code();
    std::cout << "g = " << code.g.str() << " (" << field_name(code.field) << ", n = " << code.n << ", nu = " << code.nu
              << ")\n";
    std::cout << "self-orthogonal: " << (is_self_orthogonal(code) ? "yes" : "no") << '\n';
    std::cout << "noncatastrophic: " << (is_catastrophic(code.g) ? "no" : "yes") << '\n';
    try {
        auto basis = orthogonal_basis(code);
        std::cout << "orthogonal basis:";
        for (const auto &h : basis.h) {
            std::cout << " (" << h.str() << ")";
        }
        std::cout << "  degree sum " << basis.degree_sum() << (basis.basic() ? ", basic" : ", not basic") << '\n';
        auto d = analyze(build_trellis(basis));
        std::cout << "d_perp = " << d.d_perp << ", N = " << d.n_d << ", alpha = " << d.alpha.str() << " (cycle "
                  << d.cycle_weight << "/" << d.cycle_length << "), bound = " << d.bound() << '\n';
    } catch (const std::exception &e) {
        auto d = orthogonal_distance(code);
        std::cout << "(" << e.what() << ")\nd_perp = " << d.d_perp << ", N = " << d.n_d << '\n';
    }
    return kOk;
}

int cmd_tailbite(const CodeArgs &args, const std::string &mode_s, int max_L, int threads) {
    CodeSpec spec = args.get();
    TailBitingMode mode;
    if (mode_s == "syndrome") {
        mode = TailBitingMode::kSyndromeDistinct;
    } else if (mode_s == "distance") {
        mode = TailBitingMode::kDistancePreserving;
    } else {
        throw UsageError("--mode must be syndrome or distance");
    }
    auto tb = min_tailbiting_length(spec.code(), mode, max_L, threads);
    if (!tb.found) {
        std::cout << "not found: " << tb.note << '\n';
        return kMismatch;
    }
    std::cout << "L = " << tb.L << " (searched up to " << tb.bound << ")\n";
    std::cout << "B = (" << tb.b.length << "," << tb.b.rank() << "), B_perp = (" << tb.b_dual.length << ","
              << tb.b_dual.rank() << "," << tb.d_dual << "), stabilizer " << tb.stabilizer.str() << '\n';
    if (mode == TailBitingMode::kDistancePreserving) {
        std::cout << "d(B_perp) keeps d_perp for every L >= " << tb.stable_L << " up to the bound\n";
    }
    if (!tb.note.empty()) {
        std::cout << "note: " << tb.note << '\n';
        return kMismatch;
    }
    return kOk;
}

std::string show_estimate(const std::vector<F4> &e, int n, bool binary) {
    std::string out;
    for (size_t i = 0; i < e.size(); i++) {
        if (i && i % n == 0) {
            out += ' ';
        }
        out += binary ? (e[i].is_zero() ? '0' : '1') : to_char(e[i]);
    }
    return out;
}

int cmd_decode(const CodeArgs &args, const std::string &decoder, const std::string &syndrome_s, int blocks) {
    CodeSpec spec = args.get();
    ConvCode code = spec.code();
    std::string cleaned;
    for (char c : syndrome_s) {
        if (c != ' ' && c != ',' && c != '(' && c != ')') {
            cleaned += c;
        }
    }
    std::vector<F4> s;
    try {
        s = parse_f4_vector(cleaned);
    } catch (const std::exception &e) {
        throw UsageError(std::string("bad syndrome: ") + e.what());
    }
    if (s.empty()) {
        throw UsageError("empty syndrome");
    }
    if (code.field == Field::F2) {
        for (F4 a : s) {
            if (!a.is_binary()) {
                throw UsageError("binary code needs a 0/1 syndrome");
            }
        }
    }
    bool binary = code.field == Field::F2;
    DecodeResult r;
    if (decoder == "stream") {
        int T = blocks > 0 ? blocks : (int)s.size();
        SingleErrorTable table(code);
        r = table.decode(s, T);
    } else if (decoder == "circular") {
        CircularTableDecoder dec(code, (int)s.size());
        r = dec.decode(s);
    } else if (decoder == "viterbi") {
        int T = blocks > 0 ? blocks : (int)s.size();
        CosetViterbi v(code, T, ViterbiMode::kWindow);
        if ((int)s.size() != v.num_syndromes()) {
            throw UsageError("Viterbi window of " + std::to_string(T) + " blocks takes " +
                             std::to_string(v.num_syndromes()) + " syndromes");
        }
        r.estimate = v.decode(s);
    } else {
        throw UsageError("--decoder must be stream, circular or viterbi");
    }
    std::cout << "estimate: " << show_estimate(r.estimate, code.n, binary) << '\n';
    bool any = false;
    for (size_t i = 0; i < r.estimate.size(); i++) {
        if (!r.estimate[i].is_zero()) {
            std::cout << "  block " << i / code.n << ", position " << i % code.n + 1 << ": "
                      << (binary ? std::string("flip") : std::string(1, pauli_char(pauli_of(r.estimate[i])))) << '\n';
            any = true;
        }
    }
    if (!any) {
        std::cout << "  identity\n";
    }
    std::cout << "detected: " << (r.detected ? "yes" : "no");
    for (int t : r.detected_at) {
        std::cout << ' ' << t;
    }
    std::cout << '\n';
    return kOk;
}

int cmd_simulate(const std::vector<std::string> &codes, const std::string &decoder, const std::vector<double> &ps,
                 const SimOptions &opts) {
    std::cout << sim_csv_header() << '\n';
    for (const auto &name : codes) {
        std::unique_ptr<Codec> codec;
        try {
            codec = make_codec(name, parse_decoder(decoder));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        for (double p : ps) {
            Channel ch{p};
            try {
                ch.validate();
            } catch (const std::exception &e) {
                throw UsageError(e.what());
            }
            std::cout << sim_csv_row(simulate(*codec, ch, opts)) << '\n' << std::flush;
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qconv: quantum convolutional and tail-biting stabilizer codes"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    auto *tables = app.add_subcommand("tables", "regenerate Tables I..VIII and diff against the golden files");
    std::vector<std::string> which;
    bool all = false, quiet = false;
    TableBudget tb;
    tables->add_option("which", which, "table ids (I..VIII)");
    tables->add_flag("--all", all, "all eight tables");
    tables->add_flag("--quiet", quiet, "only the verdict and diffs");
    tables->add_option("--f2-search-nu", tb.f2_search_max_nu, "search Table V rows up to this nu");
    tables->add_option("--f4-search-nu", tb.f4_search_max_nu, "search Table VI rows up to this nu");
    tables->add_option("--f2-tb-nu", tb.f2_tb_max_nu, "full length search in Table VII up to this nu");
    tables->add_option("--f4-tb-nu", tb.f4_tb_max_nu, "full length search in Table VIII up to this nu");
    tables->add_option("--max-candidates", tb.max_candidates, "search budget in candidate tuples");

    auto *search = app.add_subcommand("search", "autocorrelation tables, zero-sum subsets, best rate-1/3 codes");
    std::string s_field = "f2", emit = "text";
    int s_n = 0, s_nu = 0, s_deg = 0;
    bool best = false;
    SearchBudget sb;
    search->add_option("--field", s_field, "f2 or f4");
    search->add_option("--n", s_n, "subset size (rate 1/n); 0 lists the autocorrelations");
    search->add_option("--nu", s_nu, "constraint length for --rate13-best");
    search->add_option("--max-deg", s_deg, "degree limit for the autocorrelation table");
    search->add_flag("--rate13-best", best, "exhaustive best rate-1/3 search");
    search->add_option("--emit", emit, "text, csv or md");
    search->add_option("--max-candidates", sb.max_candidates, "candidate budget");
    search->add_option("--max-seconds", sb.max_seconds, "wall-clock budget");

    auto *verify = app.add_subcommand("verify", "run the certificate chain on a code spec file");
    std::string spec_path;
    SpecVerifyOptions vo;
    verify->add_option("file", spec_path, "code spec file")->required();
    verify->add_option("--max-tb-bound", vo.max_tailbiting_bound, "skip the tail-biting search above this bound");

    auto *distance = app.add_subcommand("distance", "d_perp, N, alpha of a rate-1/n code");
    CodeArgs d_args;
    d_args.add(distance);

    auto *tailbite = app.add_subcommand("tailbite", "minimal tail-biting length");
    CodeArgs t_args;
    t_args.add(tailbite);
    std::string mode = "syndrome";
    int max_L = 0;
    tailbite->add_option("--mode", mode, "syndrome or distance");
    tailbite->add_option("--max-L", max_L, "search limit");

    auto *decode = app.add_subcommand("decode", "decode one syndrome sequence");
    CodeArgs c_args;
    c_args.add(decode);
    std::string decoder = "stream", syndrome;
    int blocks = 0;
    decode->add_option("--decoder", decoder, "stream, circular or viterbi");
    decode->add_option("--syndrome", syndrome, "syndrome symbols, e.g. \"1 1 1\"")->required();
    decode->add_option("--blocks", blocks, "error window in blocks (default: syndrome length)");

    auto *simulate = app.add_subcommand("simulate", "Monte-Carlo decoding failure rates (CSV)");
    std::vector<std::string> sim_codes;
    std::string sim_decoder = "default";
    std::vector<double> ps;
    SimOptions so;
    bool adjusted = false;
    simulate->add_option("--code", sim_codes, "five-qubit, steane, conv-f4, tb-9-3-3, conv-css, tb-15-5-3")
        ->required();
    simulate->add_option("--decoder", sim_decoder, "default, lookup, stream, circular, viterbi");
    simulate->add_option("--p", ps, "error probabilities")->required()->delimiter(',');
    simulate->add_option("--trials", so.trials, "trials per (code, p)");
    simulate->add_option("--window", so.window, "blocks per trial");
    simulate->add_option("--seed", so.seed, "RNG seed")->required();
    simulate->add_flag("--css-adjusted", adjusted, "scale the CSS reference by 7/9");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }
    tb.threads = sb.threads = vo.threads = so.threads = threads;
    so.css_adjusted_reference = adjusted;
    try {
        if (*tables) return cmd_tables(which, all, tb, quiet);
        if (*search) return cmd_search(s_field, s_n, s_nu, s_deg, best, emit, sb);
        if (*verify) return cmd_verify(spec_path, vo);
        if (*distance) return cmd_distance(d_args);
        if (*tailbite) return cmd_tailbite(t_args, mode, max_L, threads);
        if (*decode) return cmd_decode(c_args, decoder, syndrome, blocks);
        if (*simulate) return cmd_simulate(sim_codes, sim_decoder, ps, so);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SpecError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
