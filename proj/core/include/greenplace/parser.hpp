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
//
// Fact DSL parser. The grammar is a closed set of Prolog-shaped facts:
//
//   file        := { fact } ;
//   fact        := head "(" args ")" "." ;
//   head        := "application" | "service" | "s2s" | "node" | "cost"
//                | "totHW" | "pue" | "energyProfile" | "energySourceMix"
//                | "link" | "biLink" | "emissions" ;
//
// Comments run from '%' to end of line. Energy profiles are closed
// expression terms (const/linear/loglinear/step/table), never code.

#ifndef GREENPLACE_PARSER_HPP
#define GREENPLACE_PARSER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "greenplace/errors.hpp"
#include "greenplace/model.hpp"

namespace greenplace {

struct ApplicationFact {
    Identifier name;
    std::vector<Identifier> services;
    SourcePos pos;
};

struct ServiceFact {
    Identifier name;
    std::vector<Identifier> software_reqs;
    std::int64_t hardware_reqs = 0;
    std::vector<Identifier> iot_reqs;
    SourcePos pos;
};

struct FlowFact {
    Identifier from, to;
    double max_latency_ms = 0;
    double min_bandwidth_mbps = 0;
    SourcePos pos;
};

struct NodeFact {
    Identifier name;
    std::vector<Identifier> software_caps;
    std::int64_t free_hw = 0;
    std::vector<Identifier> iot_caps;
    SourcePos pos;
};

struct CostFact {
    Identifier node;
    double unit_cost = 0;
    SourcePos pos;
};

struct TotHwFact {
    Identifier node;
    std::int64_t tot_hw = 0;
    SourcePos pos;
};

struct PueFact {
    Identifier node;
    double pue = 1;
    SourcePos pos;
};

struct ProfileFact {
    Identifier node;
    EnergyProfile profile;
    SourcePos pos;
};

struct MixFact {
    Identifier node;
    EnergyMix mix;
    SourcePos pos;
};

/// `link/4` or, when bidirectional, the `biLink/4` sugar that expands to
/// both directions at knowledge-base build time.
struct LinkFact {
    Identifier from, to;
    double latency_ms = 0;
    double bandwidth_mbps = 0;
    bool bidirectional = false;
    SourcePos pos;
};

struct EmissionsFact {
    Identifier source;
    double factor = 0;
    SourcePos pos;
};

using Fact = std::variant<ApplicationFact, ServiceFact, FlowFact, NodeFact,
                          CostFact, TotHwFact, PueFact, ProfileFact, MixFact,
                          LinkFact, EmissionsFact>;

/// Parsed facts in source order.
struct FactFile {
    std::vector<Fact> facts;
};

const SourcePos& fact_pos(const Fact& fact);
std::string fact_head(const Fact& fact);

/// Parses a fact file. Throws SyntaxError on malformed input and
/// DuplicateFactError when two facts share a head and key.
FactFile parse_facts(std::string_view text, std::string file = "");

/// Renders facts back to DSL text, one fact per line. parse_facts of the
/// result is structurally equal to the input.
std::string render(const FactFile& facts);
std::string render(const Fact& fact);

/// Field-wise equality ignoring source positions.
bool structurally_equal(const Fact& lhs, const Fact& rhs);
bool structurally_equal(const FactFile& lhs, const FactFile& rhs);

}  // namespace greenplace

#endif  // GREENPLACE_PARSER_HPP
