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

#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "greenplace/footprint.hpp"
#include "greenplace/placement.hpp"

namespace greenplace::tools {

using ordered_json = nlohmann::ordered_json;

double round_sig(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string sig(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fixed(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double rounded = std::floor(v * scale + 0.5) / scale;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
    return buf;
}

std::string placement_line(const Placement& p) {
    std::string out;
    for (std::size_t i = 0; i < p.assignments.size(); ++i) {
        if (i) out += ", ";
        out += p.assignments[i].service + " -> " + p.assignments[i].node;
    }
    return out;
}

namespace {

ordered_json assignments_json(const Placement& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : p.assignments)
        arr.push_back({{"service", a.service}, {"node", a.node}});
    return arr;
}

ordered_json footprint_json(const Footprint& fp) {
    ordered_json per_node = ordered_json::array();
    for (const auto& nf : fp.per_node)
        per_node.push_back({{"node", nf.node},
                            {"energy_kwh", round_sig(nf.energy_kwh)},
                            {"carbon_kg", round_sig(nf.carbon_kg)}});
    return {{"carbon_kg", round_sig(fp.carbon_kg)},
            {"cost", round_sig(fp.cost)},
            {"energy_kwh", round_sig(fp.energy_kwh)},
            {"per_node", std::move(per_node)},
            {"network",
             {{"energy_kwh", round_sig(fp.network.energy_kwh)},
              {"carbon_kg", round_sig(fp.network.carbon_kg)}}}};
}

ordered_json constants_json(const Constants& c) {
    return {{"hw_threshold", c.hw_threshold},
            {"bw_threshold", round_sig(c.bw_threshold)},
            {"kwh_per_mb", round_sig(c.kwh_per_mb)},
            {"avg_gci", round_sig(c.avg_gci)},
            {"mb_per_mbps_hour", round_sig(c.mb_per_mbps_hour)}};
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

void append_row(std::vector<std::vector<std::string>>& rows,
                std::initializer_list<std::string> cells) {
    rows.emplace_back(cells);
}

std::string layout_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size())
                out += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render_place_table(const Identifier& app,
                               const std::vector<RankedPlacement>& ranked) {
    std::vector<std::vector<std::string>> rows;
    append_row(rows, {"Id", "Placement", "Emissions", "Cost", "Energy Cons."});
    for (const auto& r : ranked) {
        append_row(rows,
                   {"P" + std::to_string(r.rank), placement_line(r.placement),
                    fixed(r.footprint.carbon_kg, 2) + " kgCO2",
                    fixed(r.footprint.cost, 4),
                    fixed(r.footprint.energy_kwh, 2) + " kWh"});
    }
    return "application " + app + "\n" + layout_table(rows);
}

std::string render_place_json(const Identifier& app, const Constants& constants,
                              const std::vector<RankedPlacement>& ranked) {
    ordered_json placements = ordered_json::array();
    for (const auto& r : ranked) {
        ordered_json row = {{"rank", r.rank},
                            {"assignments", assignments_json(r.placement)}};
        const ordered_json fp = footprint_json(r.footprint);
        for (auto it = fp.begin(); it != fp.end(); ++it) row[it.key()] = *it;
        placements.push_back(std::move(row));
    }
    return dump({{"application", app},
                 {"constants", constants_json(constants)},
                 {"placements", std::move(placements)}});
}

std::string render_explain_text(const KnowledgeBase& kb,
                                const RankedPlacement& selected) {
    std::ostringstream out;
    out << "placement P" << selected.rank << ": "
        << placement_line(selected.placement) << "\n";
    const Footprint& fp = selected.footprint;
    out << "totals: energy " << sig(fp.energy_kwh) << " kWh/h, carbon "
        << sig(fp.carbon_kg) << " kgCO2/h, cost " << sig(fp.cost) << " /h\n";

    for (const NodeDelta& d : node_deltas(kb, selected.placement)) {
        const Node& node = kb.nodes.at(d.node);
        out << "\nnode " << d.node << " (PUE " << sig(node.pue) << ")\n";
        out << "  load: " << sig(d.old_load) << "% -> " << sig(d.new_load)
            << "%\n";
        out << "  profile energy: " << sig(d.old_energy) << " -> "
            << sig(d.new_energy) << " kWh\n";
        out << "  hardware energy: (" << sig(d.new_energy) << " - "
            << sig(d.old_energy) << ") * " << sig(node.pue) << " = "
            << sig(d.energy_kwh) << " kWh\n";
        out << "  mix:";
        for (std::size_t i = 0; i < node.mix.shares.size(); ++i) {
            const auto& share = node.mix.shares[i];
            out << (i ? " + " : " ") << sig(share.fraction) << " * "
                << share.source << " ("
                << sig(kb.emissions.factors.at(share.source)) << ")";
        }
        out << " = " << sig(d.mix_factor) << " kgCO2/kWh\n";
        out << "  carbon: " << sig(d.energy_kwh) << " * " << sig(d.mix_factor)
            << " = " << sig(d.carbon_kg) << " kgCO2\n";
    }

    const Allocation alloc = allocated_resources(kb, selected.placement);
    double tot_bw = 0;
    for (const auto& b : alloc.bw) tot_bw += b.mbps;
    out << "\nnetwork\n";
    out << "  allocated bandwidth: " << sig(tot_bw) << " Mbit/s\n";
    out << "  energy: " << sig(kb.constants.mb_per_mbps_hour) << " * "
        << sig(kb.constants.kwh_per_mb) << " * " << sig(tot_bw) << " = "
        << sig(fp.network.energy_kwh) << " kWh\n";
    out << "  carbon: " << sig(kb.constants.avg_gci) << " * "
        << sig(fp.network.energy_kwh) << " = " << sig(fp.network.carbon_kg)
        << " kgCO2\n";

    out << "\ncost\n";
    for (const auto& a : selected.placement.assignments) {
        const Service& s = kb.services.at(a.service);
        const Node& n = kb.nodes.at(a.node);
        out << "  " << a.service << " on " << a.node << ": "
            << s.hardware_reqs << " * " << sig(n.unit_cost) << " = "
            << sig(static_cast<double>(s.hardware_reqs) * n.unit_cost) << "\n";
    }
    out << "  total: " << sig(fp.cost) << "\n";
    return out.str();
}

std::string render_explain_json(const KnowledgeBase& kb, const Identifier& app,
                                const RankedPlacement& selected) {
    ordered_json nodes = ordered_json::array();
    for (const NodeDelta& d : node_deltas(kb, selected.placement)) {
        const Node& node = kb.nodes.at(d.node);
        ordered_json mix = ordered_json::array();
        for (const auto& share : node.mix.shares)
            mix.push_back({{"fraction", round_sig(share.fraction)},
                           {"source", share.source},
                           {"factor",
                            round_sig(kb.emissions.factors.at(share.source))}});
        nodes.push_back({{"node", d.node},
                         {"pue", round_sig(node.pue)},
                         {"old_load", round_sig(d.old_load)},
                         {"new_load", round_sig(d.new_load)},
                         {"old_energy_kwh", round_sig(d.old_energy)},
                         {"new_energy_kwh", round_sig(d.new_energy)},
                         {"energy_kwh", round_sig(d.energy_kwh)},
                         {"mix_factor", round_sig(d.mix_factor)},
                         {"carbon_kg", round_sig(d.carbon_kg)},
                         {"mix", std::move(mix)}});
    }

    const Allocation alloc = allocated_resources(kb, selected.placement);
    double tot_bw = 0;
    for (const auto& b : alloc.bw) tot_bw += b.mbps;

    ordered_json cost_terms = ordered_json::array();
    for (const auto& a : selected.placement.assignments) {
        const Service& s = kb.services.at(a.service);
        const Node& n = kb.nodes.at(a.node);
        cost_terms.push_back(
            {{"service", a.service},
             {"node", a.node},
             {"units", s.hardware_reqs},
             {"unit_cost", round_sig(n.unit_cost)},
             {"cost", round_sig(static_cast<double>(s.hardware_reqs) *
                                n.unit_cost)}});
    }

    return dump(
        {{"application", app},
         {"rank", selected.rank},
         {"assignments", assignments_json(selected.placement)},
         {"totals",
          {{"carbon_kg", round_sig(selected.footprint.carbon_kg)},
           {"cost", round_sig(selected.footprint.cost)},
           {"energy_kwh", round_sig(selected.footprint.energy_kwh)}}},
         {"nodes", std::move(nodes)},
         {"network",
          {{"total_bandwidth_mbps", round_sig(tot_bw)},
           {"energy_kwh", round_sig(selected.footprint.network.energy_kwh)},
           {"carbon_kg", round_sig(selected.footprint.network.carbon_kg)}}},
         {"cost", {{"terms", std::move(cost_terms)},
                   {"total", round_sig(selected.footprint.cost)}}}});
}

namespace {

std::string signed_sig(double v) {
    return (v >= 0 ? "+" : "") + sig(v);
}

}  // namespace

std::string render_compare_text(const CompareReport& report) {
    if (report.no_changes()) return "no changes\n";
    std::ostringstream out;
    for (const auto& m : report.matched) {
        out << "placement " << placement_line(m.placement) << "\n";
        out << "  rank: " << m.rank_base << " -> " << m.rank_other << "\n";
        out << "  carbon: " << sig(m.base.carbon_kg) << " -> "
            << sig(m.other.carbon_kg) << " (" << signed_sig(m.d_carbon_kg)
            << ")\n";
        out << "  cost: " << sig(m.base.cost) << " -> " << sig(m.other.cost)
            << " (" << signed_sig(m.d_cost) << ")\n";
        out << "  energy: " << sig(m.base.energy_kwh) << " -> "
            << sig(m.other.energy_kwh) << " (" << signed_sig(m.d_energy_kwh)
            << ")\n";
        for (const auto& d : m.per_node) {
            if (d.d_energy_kwh == 0 && d.d_carbon_kg == 0) continue;
            out << "  " << d.node << ": energy " << signed_sig(d.d_energy_kwh)
                << ", carbon " << signed_sig(d.d_carbon_kg) << "\n";
        }
        if (m.d_network_energy_kwh != 0 || m.d_network_carbon_kg != 0)
            out << "  network: energy " << signed_sig(m.d_network_energy_kwh)
                << ", carbon " << signed_sig(m.d_network_carbon_kg) << "\n";
    }
    for (const auto& r : report.disappeared)
        out << "disappeared: " << placement_line(r.placement) << " (was rank "
            << r.rank << ")\n";
    for (const auto& r : report.appeared)
        out << "appeared: " << placement_line(r.placement) << " (rank "
            << r.rank << ")\n";
    return out.str();
}

std::string render_compare_json(const Identifier& app,
                                const CompareReport& report) {
    ordered_json matched = ordered_json::array();
    for (const auto& m : report.matched) {
        ordered_json per_node = ordered_json::array();
        for (const auto& d : m.per_node)
            per_node.push_back({{"node", d.node},
                                {"d_energy_kwh", round_sig(d.d_energy_kwh)},
                                {"d_carbon_kg", round_sig(d.d_carbon_kg)}});
        matched.push_back(
            {{"assignments", assignments_json(m.placement)},
             {"rank_base", m.rank_base},
             {"rank_overlay", m.rank_other},
             {"base", footprint_json(m.base)},
             {"overlay", footprint_json(m.other)},
             {"delta",
              {{"carbon_kg", round_sig(m.d_carbon_kg)},
               {"cost", round_sig(m.d_cost)},
               {"energy_kwh", round_sig(m.d_energy_kwh)},
               {"network_energy_kwh", round_sig(m.d_network_energy_kwh)},
               {"network_carbon_kg", round_sig(m.d_network_carbon_kg)}}},
             {"per_node", std::move(per_node)}});
    }
    ordered_json appeared = ordered_json::array();
    for (const auto& r : report.appeared)
        appeared.push_back({{"rank", r.rank},
                            {"assignments", assignments_json(r.placement)}});
    ordered_json disappeared = ordered_json::array();
    for (const auto& r : report.disappeared)
        disappeared.push_back({{"rank", r.rank},
                               {"assignments", assignments_json(r.placement)}});
    return dump({{"application", app},
                 {"no_changes", report.no_changes()},
                 {"matched", std::move(matched)},
                 {"appeared", std::move(appeared)},
                 {"disappeared", std::move(disappeared)}});
}

}  // namespace greenplace::tools
