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

#ifndef QCONV_CODE_SPEC_H
#define QCONV_CODE_SPEC_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qconv/search.h"

namespace qconv {

/// A code description file: `key = value` lines, `#` comments.  Grammar in
/// README.md.  Keys: name, field, n, g, h (repeatable), nu, d_perp, N, alpha.
struct CodeSpec {
    std::string name;
    Field field = Field::F2;
    LaurentTuple g;
    std::vector<LaurentTuple> h;
    std::optional<int> nu;
    std::optional<int> d_perp;
    std::optional<uint64_t> n_d;
    std::optional<Rational> alpha;

    ConvCode code() const { return ConvCode::make(g); }
    bool operator==(const CodeSpec &o) const;
};

class SpecError : public std::runtime_error {
   public:
    SpecError(int line, int column, const std::string &msg);
    int line() const { return line_; }
    int column() const { return column_; }

   private:
    int line_, column_;
};

/// Parses and checks structure: valid generator (nonzero components, shared
/// factor free), consistent n, claimed nu.  Distance claims are checked by
/// verify_spec.  Throws SpecError (1-based line and column).
CodeSpec parse_code_spec(std::string_view text);
CodeSpec load_code_spec(const std::string &path);

std::string emit_code_spec(const CodeSpec &spec);

/// The certificate chain: table_row_verify on the spec's claims, plus the
/// distance-preserving tail-biting length when the budget allows.
struct SpecVerifyOptions {
    bool tailbiting = true;
    int max_tailbiting_bound = 40;  // skip the tail-biting step above this bound
    int threads = 0;
};
VerifyReport verify_spec(const CodeSpec &spec, const SpecVerifyOptions &opts = {});

}  // namespace qconv

#endif
