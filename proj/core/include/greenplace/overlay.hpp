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
// What-if overlays: small edit scripts over a knowledge base. Each line is
// a fact-grammar term prefixed with a directive marker:
//
//   + fact.          add
//   ! fact.          replace the fact with the same head and key
//   - head(key).     remove (key only; pair-keyed heads take two keys)
//
// Removing a node also removes its companion facts and incident links, so
// the result stays self-contained.

#ifndef GREENPLACE_OVERLAY_HPP
#define GREENPLACE_OVERLAY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "greenplace/model.hpp"
#include "greenplace/parser.hpp"

namespace greenplace {

enum class FactHead {
    Application, Service, S2s, Node, Cost, TotHw, Pue,
    EnergyProfile, EnergySourceMix, Link, BiLink, Emissions,
};

std::string to_string(FactHead head);

struct OverlayDirective {
    enum class Op { Add, Replace, Remove };

    Op op = Op::Add;
    Fact fact;                           // Add and Replace
    FactHead remove_head = FactHead::Node;
    std::vector<Identifier> remove_key;  // Remove: 1 key, or 2 for pair heads
    SourcePos pos;
};

struct Overlay {
    std::vector<OverlayDirective> directives;
};

Overlay parse_overlay(std::string_view text, std::string file = "");

/// Applies directives in order to the fact view of `kb` and rebuilds with
/// the same constants. The input is never modified. Throws KeyNotFound for
/// replace/remove of absent facts and ValidationFailed if the result does
/// not validate.
KnowledgeBase apply_overlay(const KnowledgeBase& kb, const Overlay& overlay);

}  // namespace greenplace

#endif  // GREENPLACE_OVERLAY_HPP
