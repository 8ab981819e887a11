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

#include "greenplace/kb_builder.hpp"

#include <map>
#include <set>
#include <utility>

#include "greenplace/errors.hpp"
#include "greenplace/validate.hpp"

namespace greenplace {

Constants ConstantsOverrides::resolve() const {
    Constants c = Constants::preset(preset.value_or(ConstantsPreset::Default));
    if (hw_threshold) c.hw_threshold = *hw_threshold;
    if (bw_threshold) c.bw_threshold = *bw_threshold;
    if (kwh_per_mb) c.kwh_per_mb = *kwh_per_mb;
    if (avg_gci) c.avg_gci = *avg_gci;
    if (mb_per_mbps_hour) c.mb_per_mbps_hour = *mb_per_mbps_hour;
    return c;
}

ConstantsOverrides ConstantsOverrides::pin(const Constants& c) {
    ConstantsOverrides o;
    o.hw_threshold = c.hw_threshold;
    o.bw_threshold = c.bw_threshold;
    o.kwh_per_mb = c.kwh_per_mb;
    o.avg_gci = c.avg_gci;
    o.mb_per_mbps_hour = c.mb_per_mbps_hour;
    return o;
}

namespace {

// Key used for duplicate detection: head category plus the identifying
// arguments. biLink occupies both directed link keys.
std::vector<std::pair<std::string, SourcePos>> fact_keys(const Fact& fact) {
    const SourcePos& pos = fact_pos(fact);
    struct {
        std::vector<std::pair<std::string, SourcePos>> keys;
        const SourcePos& pos;

        void add(std::string key) { keys.emplace_back(std::move(key), pos); }

        void operator()(const ApplicationFact& f) { add("application/" + f.name); }
        void operator()(const ServiceFact& f) { add("service/" + f.name); }
        void operator()(const FlowFact& f) { add("s2s/" + f.from + "/" + f.to); }
        void operator()(const NodeFact& f) { add("node/" + f.name); }
        void operator()(const CostFact& f) { add("cost/" + f.node); }
        void operator()(const TotHwFact& f) { add("totHW/" + f.node); }
        void operator()(const PueFact& f) { add("pue/" + f.node); }
        void operator()(const ProfileFact& f) { add("energyProfile/" + f.node); }
        void operator()(const MixFact& f) { add("energySourceMix/" + f.node); }
        void operator()(const LinkFact& f) {
            add("link/" + f.from + "/" + f.to);
            if (f.bidirectional) add("link/" + f.to + "/" + f.from);
        }
        void operator()(const EmissionsFact& f) { add("emissions/" + f.source); }
    } v{{}, pos};
    std::visit(v, fact);
    return v.keys;
}

struct NodeParts {
    const NodeFact* node = nullptr;
    const CostFact* cost = nullptr;
    const TotHwFact* tot_hw = nullptr;
    const PueFact* pue = nullptr;
    const ProfileFact* profile = nullptr;
    const MixFact* mix = nullptr;
};

}  // namespace

std::vector<Diagnostic> duplicate_diagnostics(const FactFile& facts) {
    std::vector<Diagnostic> diags;
    std::set<std::string> seen;
    for (const auto& fact : facts.facts) {
        for (auto& [key, pos] : fact_keys(fact)) {
            if (!seen.insert(key).second) {
                diags.push_back({Severity::Error, pos, fact_head(fact),
                                 "duplicate fact for key '" + key + "'"});
            }
        }
    }
    return diags;
}

KnowledgeBase build_kb(const FactFile& facts, const ConstantsOverrides& overrides) {
    std::vector<Diagnostic> diags = duplicate_diagnostics(facts);

    KnowledgeBase kb;
    kb.constants = overrides.resolve();

    std::map<Identifier, NodeParts> parts;
    for (const auto& fact : facts.facts) {
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, ApplicationFact>) {
                    kb.applications.insert(
                        {f.name, Application{f.name, f.services, f.pos}});
                } else if constexpr (std::is_same_v<T, ServiceFact>) {
                    kb.services.insert(
                        {f.name,
                         Service{f.name, sorted_unique(f.software_reqs),
                                 f.hardware_reqs, sorted_unique(f.iot_reqs),
                                 f.pos}});
                } else if constexpr (std::is_same_v<T, FlowFact>) {
                    kb.flows.insert({{f.from, f.to},
                                     Flow{f.from, f.to, f.max_latency_ms,
                                          f.min_bandwidth_mbps, f.pos}});
                } else if constexpr (std::is_same_v<T, NodeFact>) {
                    parts[f.name].node = &f;
                } else if constexpr (std::is_same_v<T, CostFact>) {
                    parts[f.node].cost = &f;
                } else if constexpr (std::is_same_v<T, TotHwFact>) {
                    parts[f.node].tot_hw = &f;
                } else if constexpr (std::is_same_v<T, PueFact>) {
                    parts[f.node].pue = &f;
                } else if constexpr (std::is_same_v<T, ProfileFact>) {
                    parts[f.node].profile = &f;
                } else if constexpr (std::is_same_v<T, MixFact>) {
                    parts[f.node].mix = &f;
                } else if constexpr (std::is_same_v<T, LinkFact>) {
                    kb.links.insert({{f.from, f.to},
                                     Link{f.from, f.to, f.latency_ms,
                                          f.bandwidth_mbps, f.pos}});
                    if (f.bidirectional)
                        kb.links.insert({{f.to, f.from},
                                         Link{f.to, f.from, f.latency_ms,
                                              f.bandwidth_mbps, f.pos}});
                } else if constexpr (std::is_same_v<T, EmissionsFact>) {
                    kb.emissions.factors[f.source] = f.factor;
                }
            },
            fact);
    }

    for (const auto& [source, factor] : default_emission_factors())
        kb.emissions.factors.try_emplace(source, factor);

    for (const auto& [name, p] : parts) {
        if (!p.node) {
            SourcePos pos;
            std::string head;
            if (p.cost) { pos = p.cost->pos; head = "cost"; }
            else if (p.tot_hw) { pos = p.tot_hw->pos; head = "totHW"; }
            else if (p.pue) { pos = p.pue->pos; head = "pue"; }
            else if (p.profile) { pos = p.profile->pos; head = "energyProfile"; }
            else if (p.mix) { pos = p.mix->pos; head = "energySourceMix"; }
            diags.push_back({Severity::Error, pos, head + "(" + name + ")",
                             head + " declared for undeclared node '" + name + "'"});
            continue;
        }
        Node node;
        node.name = name;
        node.software_caps = sorted_unique(p.node->software_caps);
        node.free_hw = p.node->free_hw;
        node.iot_caps = sorted_unique(p.node->iot_caps);
        node.origins.node = p.node->pos;
        const std::string subject = "node(" + name + ")";
        if (p.cost) {
            node.unit_cost = p.cost->unit_cost;
            node.origins.cost = p.cost->pos;
        } else {
            diags.push_back({Severity::Error, p.node->pos, subject,
                             "missing cost for node '" + name + "'"});
        }
        if (p.tot_hw) {
            node.tot_hw = p.tot_hw->tot_hw;
            node.origins.tot_hw = p.tot_hw->pos;
        } else {
            diags.push_back({Severity::Error, p.node->pos, subject,
                             "missing totHW for node '" + name + "'"});
        }
        if (p.pue) {
            node.pue = p.pue->pue;
            node.origins.pue = p.pue->pos;
        } else {
            diags.push_back({Severity::Error, p.node->pos, subject,
                             "missing pue for node '" + name + "'"});
        }
        if (p.profile) {
            node.profile = p.profile->profile;
            node.origins.profile = p.profile->pos;
        } else {
            diags.push_back({Severity::Error, p.node->pos, subject,
                             "missing energyProfile for node '" + name + "'"});
        }
        if (p.mix) {
            node.mix = p.mix->mix;
            node.origins.mix = p.mix->pos;
        } else {
            diags.push_back({Severity::Error, p.node->pos, subject,
                             "missing energySourceMix for node '" + name + "'"});
        }
        kb.nodes.insert({name, std::move(node)});
    }

    if (has_errors(diags)) throw ValidationFailed(std::move(diags));

    std::vector<Diagnostic> value_diags = validate(kb);
    if (has_errors(value_diags)) throw ValidationFailed(std::move(value_diags));

    return kb;
}

FactFile to_facts(const KnowledgeBase& kb) {
    FactFile out;
    for (const auto& [name, app] : kb.applications)
        out.facts.push_back(ApplicationFact{name, app.services, app.origin});
    for (const auto& [name, svc] : kb.services)
        out.facts.push_back(ServiceFact{name, svc.software_reqs,
                                        svc.hardware_reqs, svc.iot_reqs,
                                        svc.origin});
    for (const auto& [key, flow] : kb.flows)
        out.facts.push_back(FlowFact{flow.from, flow.to, flow.max_latency_ms,
                                     flow.min_bandwidth_mbps, flow.origin});
    for (const auto& [name, node] : kb.nodes) {
        out.facts.push_back(NodeFact{name, node.software_caps, node.free_hw,
                                     node.iot_caps, node.origins.node});
        out.facts.push_back(CostFact{name, node.unit_cost, node.origins.cost});
        out.facts.push_back(TotHwFact{name, node.tot_hw, node.origins.tot_hw});
        out.facts.push_back(PueFact{name, node.pue, node.origins.pue});
        out.facts.push_back(
            ProfileFact{name, node.profile, node.origins.profile});
        out.facts.push_back(MixFact{name, node.mix, node.origins.mix});
    }
    for (const auto& [key, link] : kb.links)
        out.facts.push_back(LinkFact{link.from, link.to, link.latency_ms,
                                     link.bandwidth_mbps, false, link.origin});
    for (const auto& [source, factor] : kb.emissions.factors)
        out.facts.push_back(EmissionsFact{source, factor, {}});
    return out;
}

}  // namespace greenplace
