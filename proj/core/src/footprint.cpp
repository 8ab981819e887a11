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

#include "greenplace/footprint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "greenplace/placement.hpp"

namespace greenplace {

namespace {

const Node& need_node(const KnowledgeBase& kb, const Identifier& name) {
    const Node* n = kb.find_node(name);
    if (!n) throw std::invalid_argument("undeclared node '" + name + "'");
    return *n;
}

double table_lookup(const std::vector<EnergyProfile::TablePoint>& points,
                    double load) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (load > points[i].load) continue;
        if (load == points[i].load || i == 0) return points[i].value;
        const auto& lo = points[i - 1];
        const auto& hi = points[i];
        const double t = (load - lo.load) / (hi.load - lo.load);
        return lo.value + t * (hi.value - lo.value);
    }
    return points.back().value;
}

}  // namespace

double eval_profile(const EnergyProfile& profile, double load) {
    if (!(load >= 0.0 && load <= 100.0))
        throw DomainError("load " + std::to_string(load) +
                          " outside [0, 100]");
    switch (profile.kind) {
        case EnergyProfile::Kind::Constant:
            return profile.a;
        case EnergyProfile::Kind::Linear:
            return profile.a + profile.b * load;
        case EnergyProfile::Kind::LogAffine:
            return load > 0.0 ? profile.a + profile.b * std::log(load)
                              : profile.a;
        case EnergyProfile::Kind::Step:
            for (const auto& s : profile.steps)
                if (load <= s.threshold) return s.value;
            return profile.step_default;
        case EnergyProfile::Kind::Table:
            return table_lookup(profile.points, load);
    }
    throw DomainError("unhandled profile kind");
}

NodeDelta node_delta(const KnowledgeBase& kb, const Identifier& node,
                     const Allocation& alloc) {
    const Node& n = need_node(kb, node);
    std::int64_t placed = 0;
    for (const auto& h : alloc.hw)
        if (h.node == node) placed += h.units;

    NodeDelta d;
    d.node = node;
    d.old_load = 100.0 * static_cast<double>(n.tot_hw - n.free_hw) /
                 static_cast<double>(n.tot_hw);
    d.new_load = 100.0 * static_cast<double>(n.tot_hw - n.free_hw + placed) /
                 static_cast<double>(n.tot_hw);
    d.old_energy = eval_profile(n.profile, d.old_load);
    d.new_energy = eval_profile(n.profile, d.new_load);
    d.energy_kwh = (d.new_energy - d.old_energy) * n.pue;
    d.mix_factor = 0;
    for (const auto& share : n.mix.shares) {
        auto it = kb.emissions.factors.find(share.source);
        if (it == kb.emissions.factors.end()) throw UnknownSource(share.source);
        d.mix_factor += share.fraction * it->second;
    }
    d.carbon_kg = d.energy_kwh * d.mix_factor;
    return d;
}

double hardware_energy(const KnowledgeBase& kb, const Identifier& node,
                       const Allocation& alloc) {
    return node_delta(kb, node, alloc).energy_kwh;
}

double hardware_emissions(const EnergyMix& mix, const EmissionsTable& table,
                          double energy_kwh) {
    double factor = 0;
    for (const auto& share : mix.shares) {
        auto it = table.factors.find(share.source);
        if (it == table.factors.end()) throw UnknownSource(share.source);
        factor += share.fraction * it->second;
    }
    return energy_kwh * factor;
}

NetworkFootprint network_footprint(const Allocation& alloc,
                                   const Constants& constants) {
    double tot_bw = 0;
    for (const auto& b : alloc.bw) tot_bw += b.mbps;
    NetworkFootprint net;
    net.energy_kwh = constants.mb_per_mbps_hour * constants.kwh_per_mb * tot_bw;
    net.carbon_kg = constants.avg_gci * net.energy_kwh;
    return net;
}

double hourly_cost(const KnowledgeBase& kb, const Placement& placement) {
    double cost = 0;
    for (const auto& a : placement.assignments) {
        const Service* s = kb.find_service(a.service);
        const Node* n = kb.find_node(a.node);
        if (!s || !n)
            throw std::invalid_argument("assignment references undeclared facts");
        cost += static_cast<double>(s->hardware_reqs) * n->unit_cost;
    }
    return cost;
}

std::vector<NodeDelta> node_deltas(const KnowledgeBase& kb,
                                   const Placement& placement) {
    const Allocation alloc = allocated_resources(kb, placement);
    std::vector<NodeDelta> deltas;
    for (const auto& a : placement.assignments) {
        const bool seen = std::any_of(
            deltas.begin(), deltas.end(),
            [&](const NodeDelta& d) { return d.node == a.node; });
        if (!seen) deltas.push_back(node_delta(kb, a.node, alloc));
    }
    return deltas;
}

Footprint footprint(const KnowledgeBase& kb, const Placement& placement) {
    Footprint fp;
    for (const NodeDelta& d : node_deltas(kb, placement)) {
        fp.per_node.push_back({d.node, d.energy_kwh, d.carbon_kg});
        fp.energy_kwh += d.energy_kwh;
        fp.carbon_kg += d.carbon_kg;
    }
    fp.network = network_footprint(allocated_resources(kb, placement),
                                   kb.constants);
    fp.energy_kwh += fp.network.energy_kwh;
    fp.carbon_kg += fp.network.carbon_kg;
    fp.cost = hourly_cost(kb, placement);
    return fp;
}

}  // namespace greenplace
