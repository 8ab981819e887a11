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

#include "greenplace/placement.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace greenplace {

namespace {

const Service& need_service(const KnowledgeBase& kb, const Identifier& name) {
    const Service* s = kb.find_service(name);
    if (!s) throw std::invalid_argument("undeclared service '" + name + "'");
    return *s;
}

const Node& need_node(const KnowledgeBase& kb, const Identifier& name) {
    const Node* n = kb.find_node(name);
    if (!n) throw std::invalid_argument("undeclared node '" + name + "'");
    return *n;
}

std::int64_t prior_hw(const Allocation& prior, const Identifier& node) {
    std::int64_t sum = 0;
    for (const auto& h : prior.hw)
        if (h.node == node) sum += h.units;
    return sum;
}

double prior_bw(const Allocation& prior, const Identifier& from,
                const Identifier& to) {
    double sum = 0;
    for (const auto& b : prior.bw)
        if (b.from == from && b.to == to) sum += b.mbps;
    return sum;
}

// Flow load a placement puts on one directed node pair.
double pair_bandwidth(const KnowledgeBase& kb, const Placement& placement,
                      const Identifier& from, const Identifier& to) {
    double sum = 0;
    for (const auto& [key, flow] : kb.flows) {
        const Identifier* n1 = placement.node_of(flow.from);
        const Identifier* n2 = placement.node_of(flow.to);
        if (n1 && n2 && *n1 == from && *n2 == to)
            sum += flow.min_bandwidth_mbps;
    }
    return sum;
}

void search(const KnowledgeBase& kb, const Application& app,
            const SearchContext& ctx, std::size_t depth, Placement& partial,
            std::vector<Placement>& out) {
    if (depth == app.services.size()) {
        out.push_back(partial);
        return;
    }
    const Identifier& service = app.services[depth];
    for (const auto& [name, node] : kb.nodes) {
        if (!node_ok(kb, service, name, partial, ctx)) continue;
        if (!links_ok(kb, service, name, partial, ctx)) continue;
        partial.assignments.push_back({service, name});
        search(kb, app, ctx, depth + 1, partial, out);
        partial.assignments.pop_back();
    }
}

}  // namespace

SearchContext SearchContext::fresh(const KnowledgeBase& kb) {
    return SearchContext{{}, kb.constants};
}

bool hw_ok(const KnowledgeBase& kb, const Identifier& node,
           const Identifier& service, const Placement& partial,
           const SearchContext& ctx) {
    const Node& n = need_node(kb, node);
    const Service& s = need_service(kb, service);

    std::int64_t already_placed = 0;
    for (const auto& a : partial.assignments)
        if (a.node == node) already_placed += need_service(kb, a.service).hardware_reqs;

    return n.free_hw >= s.hardware_reqs + ctx.constants.hw_threshold -
                            prior_hw(ctx.prior_alloc, node) + already_placed;
}

bool node_ok(const KnowledgeBase& kb, const Identifier& service,
             const Identifier& node, const Placement& partial,
             const SearchContext& ctx) {
    const Service& s = need_service(kb, service);
    const Node& n = need_node(kb, node);
    if (!is_subset(s.software_reqs, n.software_caps)) return false;
    if (!is_subset(s.iot_reqs, n.iot_caps)) return false;
    return hw_ok(kb, node, service, partial, ctx);
}

bool links_ok(const KnowledgeBase& kb, const Identifier& service,
              const Identifier& node, const Placement& partial,
              const SearchContext& ctx) {
    // Directed node pairs the new assignment makes relevant, with the
    // latency bound of each flow that crosses them.
    std::vector<std::tuple<Identifier, Identifier, double>> relevant;
    for (const auto& [key, flow] : kb.flows) {
        if (flow.from == service) {
            if (const Identifier* other = partial.node_of(flow.to);
                other && *other != node)
                relevant.emplace_back(node, *other, flow.max_latency_ms);
        }
        if (flow.to == service) {
            if (const Identifier* other = partial.node_of(flow.from);
                other && *other != node)
                relevant.emplace_back(*other, node, flow.max_latency_ms);
        }
    }

    for (const auto& [from, to, max_latency] : relevant) {
        const Link* link = kb.find_link(from, to);
        if (!link || link->latency_ms > max_latency) return false;
    }

    std::vector<std::pair<Identifier, Identifier>> pairs;
    for (const auto& [from, to, unused] : relevant) pairs.emplace_back(from, to);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    Placement extended = partial;
    extended.assignments.push_back({service, node});
    for (const auto& [from, to] : pairs) {
        const Link* link = kb.find_link(from, to);
        const double required = pair_bandwidth(kb, extended, from, to);
        const double discount = prior_bw(ctx.prior_alloc, from, to);
        if (link->bandwidth_mbps < required - discount + ctx.constants.bw_threshold)
            return false;
    }
    return true;
}

std::vector<Placement> enumerate_placements(const KnowledgeBase& kb,
                                            const Identifier& app,
                                            const SearchContext& ctx) {
    const Application* a = kb.find_application(app);
    if (!a) throw UnknownApplication(app);
    std::vector<Placement> out;
    Placement partial;
    partial.assignments.reserve(a->services.size());
    search(kb, *a, ctx, 0, partial, out);
    return out;
}

Allocation allocated_resources(const KnowledgeBase& kb,
                               const Placement& placement) {
    Allocation alloc;
    for (const auto& a : placement.assignments)
        alloc.hw.push_back({a.node, need_service(kb, a.service).hardware_reqs});
    for (const auto& [key, flow] : kb.flows) {
        const Identifier* n1 = placement.node_of(flow.from);
        const Identifier* n2 = placement.node_of(flow.to);
        if (n1 && n2 && *n1 != *n2)
            alloc.bw.push_back({*n1, *n2, flow.min_bandwidth_mbps});
    }
    std::stable_sort(alloc.bw.begin(), alloc.bw.end(),
                     [](const BwAlloc& a, const BwAlloc& b) {
                         return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                     });
    return alloc;
}

bool check_placement(const KnowledgeBase& kb, const Identifier& app,
                     const Placement& placement, const SearchContext& ctx) {
    const Application* a = kb.find_application(app);
    if (!a) throw UnknownApplication(app);
    Placement partial;
    partial.assignments.reserve(a->services.size());
    for (const Identifier& service : a->services) {
        const Identifier* node = placement.node_of(service);
        if (!node)
            throw std::invalid_argument("placement misses service '" + service +
                                        "'");
        if (!node_ok(kb, service, *node, partial, ctx)) return false;
        if (!links_ok(kb, service, *node, partial, ctx)) return false;
        partial.assignments.push_back({service, *node});
    }
    return true;
}

}  // namespace greenplace
