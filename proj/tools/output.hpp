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

#ifndef GREENPLACE_TOOLS_OUTPUT_HPP
#define GREENPLACE_TOOLS_OUTPUT_HPP

#include <string>
#include <vector>

#include "greenplace/model.hpp"
#include "greenplace/ranking.hpp"

namespace greenplace::tools {

/// Rounds to 6 significant digits, the fixed precision of structured
/// output. Values already rounded this way re-render byte-identically.
double round_sig(double v);

/// "%.6g" rendering used for full-precision fields in human output.
std::string sig(double v);

/// Half-up rounding to `decimals`, then fixed-point rendering. Used by the
/// table view (2 decimals for kWh and kgCO2, 4 for cost).
std::string fixed(double v, int decimals);

std::string placement_line(const Placement& p);

std::string render_place_table(const Identifier& app,
                               const std::vector<RankedPlacement>& ranked);
std::string render_place_json(const Identifier& app, const Constants& constants,
                              const std::vector<RankedPlacement>& ranked);

std::string render_explain_text(const KnowledgeBase& kb,
                                const RankedPlacement& selected);
std::string render_explain_json(const KnowledgeBase& kb, const Identifier& app,
                                const RankedPlacement& selected);

std::string render_compare_text(const CompareReport& report);
std::string render_compare_json(const Identifier& app,
                                const CompareReport& report);

}  // namespace greenplace::tools

#endif  // GREENPLACE_TOOLS_OUTPUT_HPP
