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
// Random small-but-valid knowledge bases for property tests, plus the
// exhaustive |nodes|^|services| enumeration used as the search oracle.

#ifndef GREENPLACE_TESTS_INSTANCE_GEN_HPP
#define GREENPLACE_TESTS_INSTANCE_GEN_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "greenplace/model.hpp"
#include "greenplace/placement.hpp"
#include "greenplace/validate.hpp"

namespace greenplace::tests {

struct GenOptions {
    int max_nodes = 4;
    int max_services = 4;
    int max_flows = 4;
    bool non_decreasing_profiles_only = false;
    double link_density = 0.6;  // probability per directed node pair
};

inline const std::vector<Identifier>& software_universe() {
    static const std::vector<Identifier> u = {"sw0", "sw1", "sw2", "sw3"};
    return u;
}

inline const std::vector<Identifier>& iot_universe() {
    static const std::vector<Identifier> u = {"io0", "io1"};
    return u;
}

inline std::vector<Identifier> random_subset(std::mt19937& rng,
                                             const std::vector<Identifier>& pool,
                                             double keep) {
    std::bernoulli_distribution take(keep);
    std::vector<Identifier> out;
    for (const auto& item : pool)
        if (take(rng)) out.push_back(item);
    return out;
}

inline EnergyProfile random_profile(std::mt19937& rng, bool non_decreasing) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_real_distribution<double> small(0.01, 0.2);
    std::uniform_real_distribution<double> slope(0.0, 0.002);
    EnergyProfile p;
    switch (kind(rng)) {
        case 0:
            p.kind = EnergyProfile::Kind::Constant;
            p.a = small(rng);
            break;
        case 1:
            p.kind = EnergyProfile::Kind::Linear;
            p.a = small(rng);
            p.b = slope(rng);
            if (!non_decreasing && std::bernoulli_distribution(0.2)(rng))
                p.b = -p.b;
            break;
        case 2:
            p.kind = EnergyProfile::Kind::LogAffine;
            p.a = small(rng);
            p.b = slope(rng) * 10;
            if (!non_decreasing && std::bernoulli_distribution(0.2)(rng))
                p.b = -p.b;
            break;
        case 3: {
            p.kind = EnergyProfile::Kind::Step;
            std::uniform_real_distribution<double> t1(10, 50);
            std::uniform_real_distribution<double> t2(55, 95);
            const double v1 = small(rng);
            p.steps = {{t1(rng), v1}, {t2(rng), v1 + small(rng)}};
            p.step_default = p.steps.back().value + small(rng);
            break;
        }
        default: {
            p.kind = EnergyProfile::Kind::Table;
            const double v0 = small(rng);
            p.points = {{0, v0},
                        {35, v0 + small(rng)},
                        {100, v0 + 0.3}};
            break;
        }
    }
    return p;
}

inline EnergyMix random_mix(std::mt19937& rng) {
    std::vector<Identifier> sources;
    for (const auto& [name, factor] : default_emission_factors())
        sources.push_back(name);
    std::shuffle(sources.begin(), sources.end(), rng);
    std::uniform_int_distribution<int> count(1, 3);
    const int k = count(rng);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    std::vector<double> w(k);
    double sum = 0;
    for (auto& x : w) {
        x = weight(rng);
        sum += x;
    }
    EnergyMix mix;
    for (int i = 0; i < k; ++i)
        mix.shares.push_back({w[i] / sum, sources[static_cast<std::size_t>(i)]});
    return mix;
}

/// A valid random knowledge base with one application named "app" covering
/// every generated service.
inline KnowledgeBase random_kb(std::mt19937& rng, const GenOptions& opt = {}) {
    KnowledgeBase kb;
    std::uniform_int_distribution<int> n_nodes(1, opt.max_nodes);
    std::uniform_int_distribution<int> n_services(1, opt.max_services);
    std::uniform_int_distribution<std::int64_t> req(0, 6);
    std::uniform_int_distribution<std::int64_t> free(0, 12);
    std::uniform_int_distribution<std::int64_t> headroom(0, 6);
    std::uniform_real_distribution<double> cost(0.0, 0.01);
    std::uniform_real_distribution<double> pue(1.0, 2.0);
    std::uniform_real_distribution<double> latency(0.0, 40.0);
    std::uniform_real_distribution<double> bandwidth(1.0, 80.0);

    const int nn = n_nodes(rng);
    const int ns = n_services(rng);

    Application app;
    app.name = "app";
    for (int i = 0; i < ns; ++i) {
        Service s;
        s.name = "s" + std::to_string(i);
        s.software_reqs = sorted_unique(random_subset(rng, software_universe(), 0.3));
        s.hardware_reqs = req(rng);
        s.iot_reqs = sorted_unique(random_subset(rng, iot_universe(), 0.2));
        app.services.push_back(s.name);
        kb.services[s.name] = std::move(s);
    }
    kb.applications[app.name] = app;

    for (int i = 0; i < nn; ++i) {
        Node n;
        n.name = "n" + std::to_string(i);
        n.software_caps = sorted_unique(random_subset(rng, software_universe(), 0.7));
        n.iot_caps = sorted_unique(random_subset(rng, iot_universe(), 0.6));
        n.free_hw = free(rng);
        n.tot_hw = n.free_hw + headroom(rng);
        if (n.tot_hw == 0) n.tot_hw = 1;
        n.unit_cost = cost(rng);
        n.pue = pue(rng);
        n.profile = random_profile(rng, opt.non_decreasing_profiles_only);
        n.mix = random_mix(rng);
        kb.nodes[n.name] = std::move(n);
    }

    // Distinct ordered service pairs for flows.
    std::vector<std::pair<Identifier, Identifier>> pairs;
    for (const auto& [a, sa] : kb.services)
        for (const auto& [b, sb] : kb.services)
            if (a != b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_int_distribution<int> n_flows(
        0, std::min<int>(opt.max_flows, static_cast<int>(pairs.size())));
    const int nf = n_flows(rng);
    std::uniform_real_distribution<double> max_lat(5.0, 60.0);
    std::uniform_real_distribution<double> min_bw(0.5, 30.0);
    for (int i = 0; i < nf; ++i) {
        Flow f;
        f.from = pairs[static_cast<std::size_t>(i)].first;
        f.to = pairs[static_cast<std::size_t>(i)].second;
        f.max_latency_ms = max_lat(rng);
        f.min_bandwidth_mbps = min_bw(rng);
        kb.flows[{f.from, f.to}] = std::move(f);
    }

    std::bernoulli_distribution with_link(opt.link_density);
    for (const auto& [a, na] : kb.nodes)
        for (const auto& [b, nb] : kb.nodes)
            if (a != b && with_link(rng))
                kb.links[{a, b}] = Link{a, b, latency(rng), bandwidth(rng), {}};

    kb.emissions.factors = default_emission_factors();
    return kb;
}

/// Every total assignment of app's services to nodes that check_placement
/// accepts, found by walking the full |nodes|^|services| space.
inline std::set<std::vector<Identifier>> brute_force_placements(
    const KnowledgeBase& kb, const Identifier& app, const SearchContext& ctx) {
    const Application& a = kb.applications.at(app);
    std::vector<Identifier> node_names;
    for (const auto& [name, n] : kb.nodes) node_names.push_back(name);

    std::set<std::vector<Identifier>> accepted;
    const std::size_t ns = a.services.size();
    std::vector<std::size_t> pick(ns, 0);
    while (true) {
        Placement p;
        for (std::size_t i = 0; i < ns; ++i)
            p.assignments.push_back({a.services[i], node_names[pick[i]]});
        if (check_placement(kb, app, p, ctx)) accepted.insert(p.node_names());

        std::size_t i = 0;
        for (; i < ns; ++i) {
            if (++pick[i] < node_names.size()) break;
            pick[i] = 0;
        }
        if (i == ns) break;
    }
    return accepted;
}

inline std::set<std::vector<Identifier>> as_repr_set(
    const std::vector<Placement>& placements) {
    std::set<std::vector<Identifier>> out;
    for (const auto& p : placements) out.insert(p.node_names());
    return out;
}

/// Order-insensitive placement identity, for comparisons across knowledge
/// bases whose application service order differs.
inline std::set<std::map<Identifier, Identifier>> as_map_set(
    const std::vector<Placement>& placements) {
    std::set<std::map<Identifier, Identifier>> out;
    for (const auto& p : placements) {
        std::map<Identifier, Identifier> m;
        for (const auto& a : p.assignments) m[a.service] = a.node;
        out.insert(std::move(m));
    }
    return out;
}

}  // namespace greenplace::tests

#endif  // GREENPLACE_TESTS_INSTANCE_GEN_HPP
