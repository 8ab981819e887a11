// Copyright 2026 The greenplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENPLACE_KB_BUILDER_HPP
#define GREENPLACE_KB_BUILDER_HPP

#include <optional>

#include "greenplace/model.hpp"
#include "greenplace/parser.hpp"

namespace greenplace {

/// Partial constants. A preset (if any) is applied over the defaults first,
/// then individual fields override the result.
struct ConstantsOverrides {
    std::optional<ConstantsPreset> preset;
    std::optional<std::int64_t> hw_threshold;
    std::optional<double> bw_threshold;
    std::optional<double> kwh_per_mb;
    std::optional<double> avg_gci;
    std::optional<double> mb_per_mbps_hour;

    Constants resolve() const;

    /// Overrides that reproduce `c` exactly, used to keep constants stable
    /// across overlay rebuilds.
    static ConstantsOverrides pin(const Constants& c);
};

/// Assembles a knowledge base: groups facts by head, expands biLink sugar,
/// joins node companion facts, fills emission factors missing from the
/// declared set with the built-in defaults, then validates. Throws
/// ValidationFailed carrying every error found.
KnowledgeBase build_kb(const FactFile& facts,
                       const ConstantsOverrides& overrides = {});

/// Canonical fact view of a knowledge base: what build_kb would need to
/// reproduce it (constants aside). Fact order is name order per category;
/// original source positions are preserved where known.
FactFile to_facts(const KnowledgeBase& kb);

/// Diagnostics for repeated (head, key) pairs, in input order. Used both
/// by parse_facts (first hit becomes a DuplicateFactError) and by build_kb.
std::vector<Diagnostic> duplicate_diagnostics(const FactFile& facts);

}  // namespace greenplace

#endif  // GREENPLACE_KB_BUILDER_HPP
