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

#include "greenplace/ranking.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "greenplace/footprint.hpp"
#include "greenplace/placement.hpp"

namespace greenplace {

namespace {

double criterion_value(const Footprint& fp, Criterion c) {
    switch (c) {
        case Criterion::Carbon: return fp.carbon_kg;
        case Criterion::Cost: return fp.cost;
        case Criterion::Energy: return fp.energy_kwh;
    }
    return 0;
}

Criterion parse_criterion(std::string_view word) {
    if (word == "carbon" || word == "c") return Criterion::Carbon;
    if (word == "cost" || word == "k") return Criterion::Cost;
    if (word == "energy" || word == "e") return Criterion::Energy;
    throw std::invalid_argument("unknown rank criterion '" + std::string(word) +
                                "'");
}

}  // namespace

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::Carbon: return "carbon";
        case Criterion::Cost: return "cost";
        case Criterion::Energy: return "energy";
    }
    return "?";
}

RankKey RankKey::parse(std::string_view spec) {
    RankKey key;
    std::set<Criterion> seen;
    std::size_t count = 0;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string_view word = spec.substr(
            start, comma == std::string_view::npos ? spec.size() - start
                                                   : comma - start);
        while (!word.empty() && word.front() == ' ') word.remove_prefix(1);
        while (!word.empty() && word.back() == ' ') word.remove_suffix(1);
        const Criterion c = parse_criterion(word);
        if (!seen.insert(c).second)
            throw std::invalid_argument("rank criterion '" +
                                        greenplace::to_string(c) +
                                        "' given twice");
        if (count >= 3) throw std::invalid_argument("too many rank criteria");
        key.priority[count++] = c;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (count != 3)
        throw std::invalid_argument(
            "rank key needs all of carbon, cost, energy");
    return key;
}

std::string RankKey::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < priority.size(); ++i) {
        if (i) out += ",";
        out += greenplace::to_string(priority[i]);
    }
    return out;
}

std::vector<RankedPlacement> rank(const KnowledgeBase& kb,
                                  const Identifier& app, const RankKey& key) {
    const std::vector<Placement> placements =
        enumerate_placements(kb, app, SearchContext::fresh(kb));

    std::vector<RankedPlacement> ranked;
    ranked.reserve(placements.size());
    for (const Placement& p : placements)
        ranked.push_back({0, p, footprint(kb, p)});

    // Placements are distinct by construction (an assignment is a function
    // of its services); a duplicate would mean a search bug.
    std::set<std::vector<Identifier>> reprs;
    for (const auto& r : ranked) {
        const bool fresh = reprs.insert(r.placement.node_names()).second;
        assert(fresh);
        (void)fresh;
    }

    std::stable_sort(ranked.begin(), ranked.end(),
                     [&key](const RankedPlacement& a, const RankedPlacement& b) {
                         for (Criterion c : key.priority) {
                             const double va = criterion_value(a.footprint, c);
                             const double vb = criterion_value(b.footprint, c);
                             if (va != vb) return va < vb;
                         }
                         return a.placement.node_names() <
                                b.placement.node_names();
                     });
    for (std::size_t i = 0; i < ranked.size(); ++i)
        ranked[i].rank = static_cast<int>(i) + 1;
    return ranked;
}

bool CompareReport::no_changes() const {
    if (!appeared.empty() || !disappeared.empty()) return false;
    return std::all_of(
        matched.begin(), matched.end(), [](const PlacementComparison& m) {
            const bool nodes_flat = std::all_of(
                m.per_node.begin(), m.per_node.end(),
                [](const NodeFootprintDelta& d) {
                    return d.d_energy_kwh == 0 && d.d_carbon_kg == 0;
                });
            return m.rank_base == m.rank_other && m.d_carbon_kg == 0 &&
                   m.d_cost == 0 && m.d_energy_kwh == 0 && nodes_flat &&
                   m.d_network_energy_kwh == 0 && m.d_network_carbon_kg == 0;
        });
}

CompareReport compare(const KnowledgeBase& base, const KnowledgeBase& other,
                      const Identifier& app, const RankKey& key) {
    const std::vector<RankedPlacement> ranked_base = rank(base, app, key);
    const std::vector<RankedPlacement> ranked_other = rank(other, app, key);

    std::map<std::vector<Identifier>, const RankedPlacement*> by_repr;
    for (const auto& r : ranked_other) by_repr[r.placement.node_names()] = &r;

    CompareReport report;
    std::set<std::vector<Identifier>> matched_reprs;
    for (const auto& rb : ranked_base) {
        auto it = by_repr.find(rb.placement.node_names());
        if (it == by_repr.end()) {
            report.disappeared.push_back(rb);
            continue;
        }
        const RankedPlacement& ro = *it->second;
        matched_reprs.insert(it->first);

        PlacementComparison m;
        m.placement = rb.placement;
        m.rank_base = rb.rank;
        m.rank_other = ro.rank;
        m.base = rb.footprint;
        m.other = ro.footprint;
        m.d_carbon_kg = ro.footprint.carbon_kg - rb.footprint.carbon_kg;
        m.d_cost = ro.footprint.cost - rb.footprint.cost;
        m.d_energy_kwh = ro.footprint.energy_kwh - rb.footprint.energy_kwh;

        std::map<Identifier, NodeFootprintDelta> per_node;
        for (const auto& nf : rb.footprint.per_node) {
            auto& d = per_node[nf.node];
            d.node = nf.node;
            d.d_energy_kwh -= nf.energy_kwh;
            d.d_carbon_kg -= nf.carbon_kg;
        }
        for (const auto& nf : ro.footprint.per_node) {
            auto& d = per_node[nf.node];
            d.node = nf.node;
            d.d_energy_kwh += nf.energy_kwh;
            d.d_carbon_kg += nf.carbon_kg;
        }
        for (auto& [name, d] : per_node) m.per_node.push_back(d);
        m.d_network_energy_kwh =
            ro.footprint.network.energy_kwh - rb.footprint.network.energy_kwh;
        m.d_network_carbon_kg =
            ro.footprint.network.carbon_kg - rb.footprint.network.carbon_kg;
        report.matched.push_back(std::move(m));
    }
    for (const auto& ro : ranked_other)
        if (!matched_reprs.contains(ro.placement.node_names()))
            report.appeared.push_back(ro);
    return report;
}

}  // namespace greenplace
