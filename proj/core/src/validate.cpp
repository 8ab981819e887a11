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

#include "greenplace/validate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <string>

namespace greenplace {

namespace {

// Deviations below this are floating-point noise from summing fractions,
// not disclosure errors, and produce no diagnostic.
constexpr double kMixSumExact = 1e-9;
constexpr double kMixSumTolerance = 1e-6;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

class Collector {
public:
    explicit Collector(std::vector<Diagnostic>& out) : out_(out) {}

    void error(const SourcePos& pos, std::string subject, std::string msg) {
        out_.push_back({Severity::Error, pos, std::move(subject), std::move(msg)});
    }
    void warning(const SourcePos& pos, std::string subject, std::string msg) {
        out_.push_back({Severity::Warning, pos, std::move(subject), std::move(msg)});
    }

private:
    std::vector<Diagnostic>& out_;
};

void check_name(Collector& c, const SourcePos& pos, const std::string& subject,
                const Identifier& name) {
    if (!is_valid_identifier(name))
        c.error(pos, subject, "invalid identifier '" + name + "'");
}

void check_profile(Collector& c, const Node& n) {
    const EnergyProfile& p = n.profile;
    const std::string subject = "energyProfile(" + n.name + ")";
    const SourcePos& pos = n.origins.profile;
    switch (p.kind) {
        case EnergyProfile::Kind::Constant:
        case EnergyProfile::Kind::Linear:
        case EnergyProfile::Kind::LogAffine:
            break;
        case EnergyProfile::Kind::Step: {
            double prev = 0;
            bool first = true;
            for (const auto& s : p.steps) {
                if (s.threshold <= 0 || s.threshold > 100)
                    c.error(pos, subject,
                            "step threshold " + num(s.threshold) +
                                " outside (0, 100]");
                if (!first && s.threshold <= prev)
                    c.error(pos, subject,
                            "step thresholds not strictly increasing at " +
                                num(s.threshold));
                prev = s.threshold;
                first = false;
            }
            break;
        }
        case EnergyProfile::Kind::Table: {
            if (p.points.size() < 2 || p.points.front().load != 0.0 ||
                p.points.back().load != 100.0) {
                c.error(pos, subject,
                        "table loads must cover [0, 100] at the endpoints");
            }
            for (std::size_t i = 1; i < p.points.size(); ++i) {
                if (p.points[i].load <= p.points[i - 1].load)
                    c.error(pos, subject,
                            "table loads not strictly increasing at " +
                                num(p.points[i].load));
            }
            break;
        }
    }
    if (!profile_non_decreasing(p))
        c.warning(pos, subject, "energy profile not non-decreasing on [0,100]");
    if (p.kind == EnergyProfile::Kind::LogAffine && n.free_hw == n.tot_hw)
        c.warning(pos, subject,
                  "log profile reachable at load 0; the intercept is used there");
}

void check_mix(Collector& c, const Node& n, const EmissionsTable& table) {
    const std::string subject = "energySourceMix(" + n.name + ")";
    const SourcePos& pos = n.origins.mix;
    double sum = 0;
    std::set<Identifier> seen;
    for (const auto& share : n.mix.shares) {
        if (share.fraction < 0 || share.fraction > 1)
            c.error(pos, subject,
                    "mix fraction " + num(share.fraction) + " outside [0, 1]");
        if (!seen.insert(share.source).second)
            c.error(pos, subject, "duplicate mix source '" + share.source + "'");
        if (!table.factors.contains(share.source))
            c.error(pos, subject,
                    "unknown emission source '" + share.source + "'");
        sum += share.fraction;
    }
    const double dev = std::fabs(sum - 1.0);
    if (dev >= kMixSumTolerance)
        c.error(pos, subject, "mix fractions sum to " + num(sum));
    else if (dev > kMixSumExact)
        c.warning(pos, subject,
                  "mix fractions sum deviates from 1 by " + num(dev));
}

}  // namespace

bool profile_non_decreasing(const EnergyProfile& p) {
    switch (p.kind) {
        case EnergyProfile::Kind::Constant:
            return true;
        case EnergyProfile::Kind::Linear:
        case EnergyProfile::Kind::LogAffine:
            return p.b >= 0;
        case EnergyProfile::Kind::Step: {
            double prev = -std::numeric_limits<double>::infinity();
            for (const auto& s : p.steps) {
                if (s.value < prev) return false;
                prev = s.value;
            }
            return p.step_default >= prev;
        }
        case EnergyProfile::Kind::Table: {
            for (std::size_t i = 1; i < p.points.size(); ++i)
                if (p.points[i].value < p.points[i - 1].value) return false;
            return true;
        }
    }
    return true;
}

std::vector<Diagnostic> validate(const KnowledgeBase& kb) {
    std::vector<Diagnostic> diags;
    Collector c(diags);

    for (const auto& [name, app] : kb.applications) {
        const std::string subject = "application(" + name + ")";
        check_name(c, app.origin, subject, name);
        if (app.services.empty())
            c.error(app.origin, subject, "application has no services");
        std::set<Identifier> seen;
        for (const auto& s : app.services) {
            if (!seen.insert(s).second)
                c.error(app.origin, subject, "duplicate service '" + s + "'");
            if (!kb.services.contains(s))
                c.error(app.origin, subject, "unknown service '" + s + "'");
        }
    }

    for (const auto& [name, svc] : kb.services) {
        const std::string subject = "service(" + name + ")";
        check_name(c, svc.origin, subject, name);
        if (svc.hardware_reqs < 0)
            c.error(svc.origin, subject, "hardware requirement is negative");
    }

    // Services reachable from some application; flow endpoints must be.
    std::set<Identifier> deployable;
    for (const auto& [_, app] : kb.applications)
        deployable.insert(app.services.begin(), app.services.end());

    for (const auto& [key, flow] : kb.flows) {
        const std::string subject = "s2s(" + flow.from + ", " + flow.to + ")";
        if (flow.from == flow.to)
            c.error(flow.origin, subject, "flow endpoints must differ");
        for (const Identifier* end : {&flow.from, &flow.to}) {
            if (!kb.services.contains(*end))
                c.error(flow.origin, subject, "unknown service '" + *end + "'");
            else if (!deployable.contains(*end))
                c.error(flow.origin, subject,
                        "service '" + *end + "' is not part of any application");
        }
        if (!(flow.max_latency_ms > 0))
            c.error(flow.origin, subject, "max latency must be positive");
        if (!(flow.min_bandwidth_mbps > 0))
            c.error(flow.origin, subject, "min bandwidth must be positive");
    }

    for (const auto& [name, node] : kb.nodes) {
        const std::string subject = "node(" + name + ")";
        check_name(c, node.origins.node, subject, name);
        if (node.free_hw < 0)
            c.error(node.origins.node, subject, "free hardware is negative");
        if (node.tot_hw <= 0)
            c.error(node.origins.tot_hw, subject, "total hardware must be positive");
        else if (node.free_hw > node.tot_hw)
            c.error(node.origins.node, subject,
                    "free exceeds total (" + std::to_string(node.free_hw) +
                        " > " + std::to_string(node.tot_hw) + ")");
        if (node.pue < 1.0)
            c.error(node.origins.pue, subject,
                    "pue " + num(node.pue) + " is below 1");
        if (node.unit_cost < 0)
            c.error(node.origins.cost, subject, "unit cost is negative");
        check_profile(c, node);
        check_mix(c, node, kb.emissions);
    }

    for (const auto& [key, link] : kb.links) {
        const std::string subject = "link(" + link.from + ", " + link.to + ")";
        if (link.from == link.to)
            c.error(link.origin, subject, "link endpoints must differ");
        if (link.latency_ms < 0)
            c.error(link.origin, subject, "latency is negative");
        if (!(link.bandwidth_mbps > 0))
            c.error(link.origin, subject, "bandwidth must be positive");
        for (const Identifier* end : {&link.from, &link.to})
            if (!kb.nodes.contains(*end))
                c.warning(link.origin, subject,
                          "link references undeclared node '" + *end + "'");
    }

    for (const auto& [source, factor] : kb.emissions.factors) {
        if (factor < 0)
            c.error({}, "emissions(" + source + ")",
                    "emission factor is negative");
        check_name(c, {}, "emissions(" + source + ")", source);
    }

    const Constants& k = kb.constants;
    if (k.hw_threshold < 0)
        c.error({}, "constants", "hw threshold is negative");
    if (k.bw_threshold < 0)
        c.error({}, "constants", "bw threshold is negative");
    if (!(k.kwh_per_mb > 0))
        c.error({}, "constants", "kWh per MB must be positive");
    if (!(k.avg_gci > 0))
        c.error({}, "constants", "average grid carbon intensity must be positive");
    if (!(k.mb_per_mbps_hour > 0))
        c.error({}, "constants", "MB per Mbit/s-hour must be positive");

    return diags;
}

}  // namespace greenplace
