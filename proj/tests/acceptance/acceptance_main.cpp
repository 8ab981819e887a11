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
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenplace/footprint.hpp"
#include "greenplace/kb_builder.hpp"
#include "greenplace/parser.hpp"
#include "greenplace/placement.hpp"
#include "greenplace/ranking.hpp"
#include "support/fixtures.hpp"
#include "support/instance_gen.hpp"
#include "support/run_cli.hpp"

using namespace greenplace;
using namespace greenplace::tests;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Checker {
    std::ostringstream notes;
    bool ok = true;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes << (notes.tellp() > 0 ? "; " : "") << what;
        }
    }
    void expect_near(double got, double want, double tol,
                     const std::string& what) {
        if (!(std::fabs(got - want) <= tol)) {
            ok = false;
            notes << (notes.tellp() > 0 ? "; " : "") << what << " got " << got
                  << " want " << want << " +/- " << tol;
        }
    }
};

int failures = 0;

void report(int number, const std::string& title, const Checker& c,
            const std::string& extra = "") {
    std::printf("criterion %d: %s  %s%s%s\n", number, c.ok ? "PASS" : "FAIL",
                title.c_str(), extra.empty() ? "" : " ",
                (c.ok ? extra : c.notes.str()).c_str());
    if (!c.ok) ++failures;
}

std::string fixture_files() {
    return data_dir() + "/lights_app.facts " + data_dir() +
           "/lights_infra.facts";
}

double rel_gap(double a, double b) {
    return std::fabs(a - b) / std::max(a, b);
}

// 1. Table 2 reproduction through the CLI, full precision via the library.
void criterion_1() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    RunResult r =
        run_cli("place " + fixture_files() + " --app lightsApp --format json");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.expect(r.exit_code == 0, "place exited " + std::to_string(r.exit_code));
    c.expect(seconds < 1.0, "runtime " + std::to_string(seconds) + "s");

    if (r.exit_code == 0) {
        ordered_json doc = ordered_json::parse(r.output);
        c.expect(doc["placements"].size() == 2, "expected exactly 2 placements");
        if (doc["placements"].size() == 2) {
            const auto& p1 = doc["placements"][0];
            const auto& p2 = doc["placements"][1];
            c.expect(p1["assignments"][0]["node"] == "privateCloud" &&
                         p1["assignments"][1]["node"] == "edgenode",
                     "P1 is not the edgenode placement");
            c.expect(p2["assignments"][0]["node"] == "privateCloud" &&
                         p2["assignments"][1]["node"] == "accesspoint",
                     "P2 is not the accesspoint placement");
            c.expect_near(p1["carbon_kg"], 0.29, 0.01, "P1 carbon (rounded)");
            c.expect_near(p2["carbon_kg"], 0.32, 0.01, "P2 carbon (rounded)");
            c.expect_near(p1["energy_kwh"], 0.60, 0.01, "P1 energy (rounded)");
            c.expect_near(p2["energy_kwh"], 0.63, 0.01, "P2 energy (rounded)");
        }
    }

    // Full-precision oracle values through the library.
    KnowledgeBase kb = lights_kb();
    const auto ranked = rank(kb, "lightsApp");
    c.expect(ranked.size() == 2, "library rank size");
    if (ranked.size() == 2) {
        c.expect_near(ranked[0].footprint.carbon_kg, 0.2903, 1e-4, "P1 carbon");
        c.expect_near(ranked[1].footprint.carbon_kg, 0.3197, 1e-4, "P2 carbon");
        c.expect_near(ranked[0].footprint.energy_kwh, 0.6044, 1e-4, "P1 energy");
        c.expect_near(ranked[1].footprint.energy_kwh, 0.6356, 1e-4, "P2 energy");
        c.expect_near(ranked[0].footprint.cost, 0.0356, 1e-9, "P1 cost");
        c.expect_near(ranked[1].footprint.cost, 0.0316, 1e-9, "P2 cost");
    }
    char extra[64];
    std::snprintf(extra, sizeof extra, "(%.3fs)", seconds);
    report(1, "Table 2 reproduction", c, extra);
}

// 2. Footprint decomposition surfaced by `explain`.
void criterion_2() {
    Checker c;
    RunResult r = run_cli("explain " + fixture_files() +
                          " --app lightsApp --rank-id 1 --format json");
    c.expect(r.exit_code == 0, "explain exited " + std::to_string(r.exit_code));
    if (r.exit_code == 0) {
        ordered_json doc = ordered_json::parse(r.output);
        double pc_energy = -1, edge_energy = -1;
        for (const auto& node : doc["nodes"]) {
            if (node["node"] == "privateCloud") pc_energy = node["energy_kwh"];
            if (node["node"] == "edgenode") edge_energy = node["energy_kwh"];
        }
        c.expect_near(pc_energy, 0.010384, 1e-5, "privateCloud hardware energy");
        c.expect(edge_energy == 0.0, "edgenode energy not exactly 0");
        c.expect_near(doc["network"]["energy_kwh"], 0.594, 1e-6,
                      "network energy");
        c.expect_near(doc["network"]["carbon_kg"], 0.28215, 1e-6,
                      "network carbon");
    }
    report(2, "footprint decomposition via explain", c);
}

// 3. The worked example's percentage gaps, measured on full precision
// against the larger value of each pair.
void criterion_3() {
    Checker c;
    KnowledgeBase kb = lights_kb();
    const auto ranked = rank(kb, "lightsApp");
    c.expect(ranked.size() == 2, "needs both placements");
    if (ranked.size() == 2) {
        const Footprint& p1 = ranked[0].footprint;
        const Footprint& p2 = ranked[1].footprint;
        const double carbon_gap = rel_gap(p1.carbon_kg, p2.carbon_kg);
        const double energy_gap = rel_gap(p1.energy_kwh, p2.energy_kwh);
        const double cost_gap = rel_gap(p1.cost, p2.cost);
        c.expect(p1.carbon_kg < p2.carbon_kg && carbon_gap >= 0.09,
                 "carbon gap " + std::to_string(carbon_gap) + " below 9%");
        c.expect_near(energy_gap, 0.05, 0.01, "energy gap");
        c.expect(p1.cost > p2.cost, "P1 should cost more");
        c.expect_near(cost_gap, 0.11, 0.015, "cost gap");
    }
    report(3, "example comparison claims (>=9% carbon, ~5% energy, ~11% cost)", c);
}

// 4. Search equals brute force on 200 randomized instances.
void criterion_4() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260810);
    for (int round = 0; round < 200 && c.ok; ++round) {
        KnowledgeBase kb = random_kb(rng);
        SearchContext ctx = SearchContext::fresh(kb);
        const auto got = as_repr_set(enumerate_placements(kb, "app", ctx));
        const auto want = brute_force_placements(kb, "app", ctx);
        c.expect(got == want,
                 "mismatch on instance " + std::to_string(round) + " (" +
                     std::to_string(got.size()) + " vs " +
                     std::to_string(want.size()) + ")");
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.expect(seconds < 30.0, "runtime " + std::to_string(seconds) + "s");
    char extra[64];
    std::snprintf(extra, sizeof extra, "(200 instances, %.2fs)", seconds);
    report(4, "oracle equivalence on randomized instances", c, extra);
}

// 5. Property suites, >= 1000 cases each.
void criterion_5() {
    Checker c;
    std::mt19937 rng(5);

    // Permutation invariance of the placement set.
    for (int round = 0; round < 1000 && c.ok; ++round) {
        KnowledgeBase kb = random_kb(rng);
        SearchContext ctx = SearchContext::fresh(kb);
        const auto baseline = as_map_set(enumerate_placements(kb, "app", ctx));

        KnowledgeBase shuffled = kb;
        std::shuffle(shuffled.applications["app"].services.begin(),
                     shuffled.applications["app"].services.end(), rng);
        c.expect(as_map_set(enumerate_placements(shuffled, "app", ctx)) ==
                     baseline,
                 "service permutation changed the placement set");

        FactFile facts = to_facts(kb);
        std::shuffle(facts.facts.begin(), facts.facts.end(), rng);
        c.expect(as_map_set(enumerate_placements(build_kb(facts), "app",
                                                 ctx)) == baseline,
                 "fact reordering changed the placement set");
    }

    // Node-removal monotonicity.
    for (int round = 0; round < 1000 && c.ok; ++round) {
        KnowledgeBase kb = random_kb(rng);
        SearchContext ctx = SearchContext::fresh(kb);
        const auto baseline = as_repr_set(enumerate_placements(kb, "app", ctx));
        KnowledgeBase smaller = kb;
        auto victim = smaller.nodes.begin();
        std::erase_if(smaller.links, [&](const auto& entry) {
            return entry.second.from == victim->first ||
                   entry.second.to == victim->first;
        });
        smaller.nodes.erase(victim);
        const auto reduced =
            as_repr_set(enumerate_placements(smaller, "app", ctx));
        c.expect(std::includes(baseline.begin(), baseline.end(),
                               reduced.begin(), reduced.end()),
                 "node removal added a placement");
    }

    // Co-location exemption: with every service on one omnipotent node the
    // link checks pass and the network footprint is exactly zero.
    for (int round = 0; round < 1000 && c.ok; ++round) {
        KnowledgeBase kb = random_kb(rng);
        Node super_node;
        super_node.name = "zsuper";
        super_node.software_caps = software_universe();
        super_node.iot_caps = iot_universe();
        super_node.free_hw = 1000;
        super_node.tot_hw = 2000;
        super_node.unit_cost = 0.001;
        super_node.pue = 1.1;
        super_node.profile.kind = EnergyProfile::Kind::Linear;
        super_node.profile.a = 0.05;
        super_node.profile.b = 0.001;
        super_node.mix.shares = {{1.0, "solar"}};
        kb.nodes["zsuper"] = super_node;

        SearchContext ctx = SearchContext::fresh(kb);
        Placement all_on_one;
        Placement partial;
        for (const auto& svc : kb.applications["app"].services) {
            c.expect(links_ok(kb, svc, "zsuper", partial, ctx),
                     "co-located links_ok rejected");
            partial.assignments.push_back({svc, "zsuper"});
        }
        all_on_one = partial;
        c.expect(check_placement(kb, "app", all_on_one, ctx),
                 "co-located placement rejected");
        const Footprint fp = footprint(kb, all_on_one);
        c.expect(fp.network.energy_kwh == 0.0 && fp.network.carbon_kg == 0.0,
                 "co-located network footprint not zero");
    }

    // Additivity of totals and linearity of the network/emission formulas.
    std::uniform_real_distribution<double> scale(0.25, 8.0);
    for (int round = 0; round < 1000 && c.ok; ++round) {
        KnowledgeBase kb = random_kb(rng);
        SearchContext ctx = SearchContext::fresh(kb);
        const auto placements = enumerate_placements(kb, "app", ctx);
        if (placements.empty()) continue;
        const Footprint fp = footprint(kb, placements.front());
        double energy = fp.network.energy_kwh, carbon = fp.network.carbon_kg;
        for (const auto& nf : fp.per_node) {
            energy += nf.energy_kwh;
            carbon += nf.carbon_kg;
        }
        c.expect(std::fabs(fp.energy_kwh - energy) <=
                     1e-12 * std::max(1.0, std::fabs(energy)),
                 "energy total not additive");
        c.expect(std::fabs(fp.carbon_kg - carbon) <=
                     1e-12 * std::max(1.0, std::fabs(carbon)),
                 "carbon total not additive");

        Allocation alloc = allocated_resources(kb, placements.front());
        const double k = scale(rng);
        Allocation scaled = alloc;
        for (auto& b : scaled.bw) b.mbps *= k;
        const NetworkFootprint base = network_footprint(alloc, kb.constants);
        const NetworkFootprint big = network_footprint(scaled, kb.constants);
        c.expect(std::fabs(big.energy_kwh - k * base.energy_kwh) <=
                     1e-12 * std::max(1.0, std::fabs(big.energy_kwh)),
                 "network energy not linear");
        const Node& n = kb.nodes.begin()->second;
        const double e = scale(rng);
        c.expect(std::fabs(hardware_emissions(n.mix, kb.emissions, k * e) -
                           k * hardware_emissions(n.mix, kb.emissions, e)) <=
                     1e-12 * std::max(1.0, k * e),
                 "emissions not linear in energy");
    }

    // Mix identity against every built-in factor.
    std::uniform_real_distribution<double> energy_dist(0.0, 5.0);
    EmissionsTable table;
    table.factors = default_emission_factors();
    for (int round = 0; round < 1000 && c.ok; ++round) {
        const double e = energy_dist(rng);
        for (const auto& [source, mu] : table.factors) {
            EnergyMix pure;
            pure.shares = {{1.0, source}};
            c.expect(hardware_emissions(pure, table, e) == e * mu,
                     "mix identity violated for " + source);
        }
    }

    report(5, "property suites (1000+ cases each)", c);
}

// 6. Parser round-trip and crash-freedom under fuzzing.
void criterion_6() {
    Checker c;
    std::mt19937 rng(6);

    for (int round = 0; round < 1000 && c.ok; ++round) {
        KnowledgeBase kb = random_kb(rng);
        FactFile facts = to_facts(kb);
        if (round % 3 == 0)
            facts.facts.push_back(LinkFact{"zz8", "zz9", 1.5, 64, true, {}});
        const std::string text = render(facts);
        FactFile reparsed = parse_facts(text);
        c.expect(structurally_equal(facts, reparsed), "round-trip mismatch");
        c.expect(render(reparsed) == text, "render not a fixed point");
    }

    const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyzABC0123456789_()[],.%+-eE \n\t\"'~@#$";
    std::uniform_int_distribution<std::size_t> len(0, 48);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> byte(0, 255);
    long fuzzed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (long round = 0; round < 1000000 && c.ok; ++round) {
        std::string input;
        const std::size_t n = len(rng);
        input.reserve(n);
        const bool token_soup = round % 2 == 0;
        for (std::size_t i = 0; i < n; ++i)
            input.push_back(token_soup ? alphabet[pick(rng)]
                                       : static_cast<char>(byte(rng)));
        try {
            (void)parse_facts(input);
        } catch (const SyntaxError&) {
            // The only acceptable failure mode.
        } catch (...) {
            c.expect(false, "non-SyntaxError escape on fuzz input");
        }
        ++fuzzed;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    char extra[96];
    std::snprintf(extra, sizeof extra, "(%ld fuzz inputs, %.1fs)", fuzzed,
                  seconds);
    report(6, "parser round-trip and fuzz robustness", c, extra);
}

// 7. Preliminaries preset network constants.
void criterion_7() {
    Checker c;
    Allocation one_mbps;
    one_mbps.bw = {{"a", "b", 1.0}};
    const NetworkFootprint net = network_footprint(
        one_mbps, Constants::preset(ConstantsPreset::Preliminaries));
    c.expect_near(net.energy_kwh, 1.035, 1e-6, "network energy");
    c.expect_near(net.carbon_kg, 0.491625, 1e-6, "network carbon");

    // Cross-check: 450 MB/h at 1.0925 gCO2 per MB.
    c.expect_near(net.carbon_kg, 450.0 * 1.0925 / 1000.0, 1e-6,
                  "gCO2/MB consistency");

    // And through the CLI flag.
    const std::string facts = write_temp(
        "prelim.facts",
        "application(a, [x, y]).\n"
        "service(x, [], 1, []). service(y, [], 1, []).\n"
        "s2s(x, y, 50, 1).\n"
        "node(n1, [], 4, []). cost(n1, 0.01). totHW(n1, 8). pue(n1, 1.0).\n"
        "energyProfile(n1, const(0.1)). energySourceMix(n1, [(1.0, solar)]).\n"
        "node(n2, [], 4, []). cost(n2, 0.01). totHW(n2, 8). pue(n2, 1.0).\n"
        "energyProfile(n2, const(0.1)). energySourceMix(n2, [(1.0, solar)]).\n"
        "biLink(n1, n2, 5, 100).\n");
    RunResult r = run_cli("place " + facts +
                          " --app a --preset preliminaries --format json");
    c.expect(r.exit_code == 0, "place exited " + std::to_string(r.exit_code));
    if (r.exit_code == 0) {
        ordered_json doc = ordered_json::parse(r.output);
        bool saw_cross = false;
        for (const auto& p : doc["placements"]) {
            const double e = p["network"]["energy_kwh"];
            if (e > 0) {
                saw_cross = true;
                c.expect_near(e, 1.035, 1e-6, "CLI network energy");
                c.expect_near(p["network"]["carbon_kg"], 0.491625, 1e-6,
                              "CLI network carbon");
            }
        }
        c.expect(saw_cross, "no cross-node placement in preset check");
    }
    report(7, "preliminaries preset cross-check", c);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
