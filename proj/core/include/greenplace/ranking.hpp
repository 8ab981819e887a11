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

#ifndef GREENPLACE_RANKING_HPP
#define GREENPLACE_RANKING_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "greenplace/model.hpp"

namespace greenplace {

enum class Criterion { Carbon, Cost, Energy };

std::string to_string(Criterion c);

/// Lexicographic sort priority over the three footprint criteria. Each
/// criterion appears exactly once; the default puts carbon first.
struct RankKey {
    std::array<Criterion, 3> priority{Criterion::Carbon, Criterion::Cost,
                                      Criterion::Energy};

    /// Parses "carbon,cost,energy" (aliases: c, k, e). Throws
    /// std::invalid_argument unless the spec names each criterion once.
    static RankKey parse(std::string_view spec);

    std::string to_string() const;

    friend bool operator==(const RankKey&, const RankKey&) = default;
};

struct RankedPlacement {
    int rank = 0;  // 1-based
    Placement placement;
    Footprint footprint;
};

/// Enumerates eligible placements, estimates each footprint and sorts
/// ascending by the key's criteria, breaking full ties on the canonical
/// placement representation. Pure function of (kb, app, key); throws
/// UnknownApplication.
std::vector<RankedPlacement> rank(const KnowledgeBase& kb,
                                  const Identifier& app,
                                  const RankKey& key = {});

struct NodeFootprintDelta {
    Identifier node;
    double d_energy_kwh = 0;
    double d_carbon_kg = 0;
};

/// One placement present in both knowledge bases.
struct PlacementComparison {
    Placement placement;
    int rank_base = 0;
    int rank_other = 0;
    Footprint base;
    Footprint other;
    double d_carbon_kg = 0;
    double d_cost = 0;
    double d_energy_kwh = 0;
    std::vector<NodeFootprintDelta> per_node;  // union of deployment nodes
    double d_network_energy_kwh = 0;
    double d_network_carbon_kg = 0;
};

/// What-if diff between two knowledge bases for one application.
struct CompareReport {
    std::vector<PlacementComparison> matched;     // by base rank
    std::vector<RankedPlacement> appeared;        // only in the other kb
    std::vector<RankedPlacement> disappeared;     // only in the base kb

    /// True when nothing moved: no appearances, no rank changes and all
    /// footprint deltas exactly zero.
    bool no_changes() const;
};

/// Pairs placements by assignment identity and reports footprint deltas,
/// rank moves and appeared/disappeared placements.
CompareReport compare(const KnowledgeBase& base, const KnowledgeBase& other,
                      const Identifier& app, const RankKey& key = {});

}  // namespace greenplace

#endif  // GREENPLACE_RANKING_HPP
