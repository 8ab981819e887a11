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
// greenplace: rank multi-service application placements on a Cloud-IoT
// infrastructure by carbon, cost and energy.
//
// Exit codes: 0 success, 1 domain outcome (no eligible placement, or
// validation findings from `validate`), 2 usage/parse/IO failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greenplace/errors.hpp"
#include "greenplace/kb_builder.hpp"
#include "greenplace/overlay.hpp"
#include "greenplace/parser.hpp"
#include "greenplace/placement.hpp"
#include "greenplace/ranking.hpp"
#include "greenplace/validate.hpp"
#include "output.hpp"

namespace {

using namespace greenplace;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Multiple input files concatenate into one fact base; operators keep the
// application and the infrastructure in separate files.
FactFile load_facts(const std::vector<std::string>& paths) {
    FactFile merged;
    for (const auto& path : paths) {
        FactFile one = parse_facts(read_file(path), path);
        merged.facts.insert(merged.facts.end(), one.facts.begin(),
                            one.facts.end());
    }
    const auto dups = duplicate_diagnostics(merged);
    for (const auto& d : dups)
        if (d.severity == Severity::Error)
            throw DuplicateFactError(d.location, d.message);
    return merged;
}

struct ConstantsFlags {
    std::optional<std::string> preset_name;
    std::optional<std::int64_t> hw_threshold;
    std::optional<double> bw_threshold;
    std::optional<double> kwh_per_mb;
    std::optional<double> gci;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--preset", preset_name,
                        "Constants preset: default | preliminaries "
                        "(env GREENPLACE_PRESET)");
        cmd->add_option("--hw-th", hw_threshold,
                        "Hardware units to keep free per node");
        cmd->add_option("--bw-th", bw_threshold,
                        "Bandwidth to keep free per link, Mbit/s");
        cmd->add_option("--kwh-per-mb", kwh_per_mb,
                        "Network energy intensity, kWh per MB");
        cmd->add_option("--gci", gci,
                        "Grid carbon intensity for traffic, kgCO2 per kWh");
    }

    ConstantsOverrides resolve() const {
        ConstantsOverrides o;
        std::optional<std::string> name = preset_name;
        if (!name) {
            if (const char* env = std::getenv("GREENPLACE_PRESET");
                env && *env)
                name = std::string(env);
        }
        if (name) {
            if (*name == "default")
                o.preset = ConstantsPreset::Default;
            else if (*name == "preliminaries")
                o.preset = ConstantsPreset::Preliminaries;
            else
                throw std::invalid_argument("unknown preset '" + *name + "'");
        }
        o.hw_threshold = hw_threshold;
        o.bw_threshold = bw_threshold;
        o.kwh_per_mb = kwh_per_mb;
        o.avg_gci = gci;
        return o;
    }
};

void print_diagnostics(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) std::cerr << d.to_string() << "\n";
}

int cmd_validate(const std::vector<std::string>& files) {
    FactFile facts;
    try {
        facts = load_facts(files);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        KnowledgeBase kb = build_kb(facts);
        print_diagnostics(validate(kb));  // warnings only at this point
        return kExitOk;
    } catch (const ValidationFailed& e) {
        print_diagnostics(e.diagnostics());
        return kExitDomain;
    }
}

RankKey parse_rank_flag(const std::string& spec) {
    return spec.empty() ? RankKey{} : RankKey::parse(spec);
}

int cmd_place(const std::vector<std::string>& files, const std::string& app,
              const std::string& rank_spec, const std::string& format,
              const ConstantsFlags& constants) {
    KnowledgeBase kb = build_kb(load_facts(files), constants.resolve());
    const auto ranked = rank(kb, app, parse_rank_flag(rank_spec));
    if (ranked.empty()) {
        std::cerr << "no eligible placement\n";
        return kExitDomain;
    }
    if (format == "json")
        std::cout << tools::render_place_json(app, kb.constants, ranked);
    else
        std::cout << tools::render_place_table(app, ranked);
    return kExitOk;
}

// "s1=n1,s2=n2" -> assignments in the given order.
std::vector<Assignment> parse_assign_flag(const std::string& spec) {
    std::vector<Assignment> out;
    std::size_t start = 0;
    while (start < spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        std::string pair = spec.substr(start, comma - start);
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size())
            throw std::invalid_argument("malformed --assign entry '" + pair +
                                        "'");
        out.push_back({pair.substr(0, eq), pair.substr(eq + 1)});
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--assign is empty");
    return out;
}

int cmd_explain(const std::vector<std::string>& files, const std::string& app,
                const std::string& rank_spec, int rank_id,
                const std::string& assign_spec, const std::string& format,
                const ConstantsFlags& constants) {
    KnowledgeBase kb = build_kb(load_facts(files), constants.resolve());
    const auto ranked = rank(kb, app, parse_rank_flag(rank_spec));

    const RankedPlacement* selected = nullptr;
    if (!assign_spec.empty()) {
        const std::vector<Assignment> wanted = parse_assign_flag(assign_spec);
        for (const auto& r : ranked) {
            const bool match = std::all_of(
                wanted.begin(), wanted.end(), [&](const Assignment& a) {
                    const Identifier* node = r.placement.node_of(a.service);
                    return node && *node == a.node;
                });
            if (match && wanted.size() == r.placement.assignments.size()) {
                selected = &r;
                break;
            }
        }
    } else {
        for (const auto& r : ranked)
            if (r.rank == rank_id) selected = &r;
    }
    if (!selected) {
        std::cerr << "selector matches no eligible placement\n";
        return kExitDomain;
    }
    if (format == "json")
        std::cout << tools::render_explain_json(kb, app, *selected);
    else
        std::cout << tools::render_explain_text(kb, *selected);
    return kExitOk;
}

int cmd_whatif(const std::vector<std::string>& files,
               const std::string& overlay_path, const std::string& app,
               const std::string& rank_spec, const std::string& format,
               const ConstantsFlags& constants) {
    KnowledgeBase base = build_kb(load_facts(files), constants.resolve());
    const Overlay overlay =
        parse_overlay(read_file(overlay_path), overlay_path);
    KnowledgeBase other = apply_overlay(base, overlay);
    const CompareReport report =
        compare(base, other, app, parse_rank_flag(rank_spec));
    if (format == "json")
        std::cout << tools::render_compare_json(app, report);
    else
        std::cout << tools::render_compare_text(report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Carbon-, cost- and energy-aware placement of multi-service "
                 "applications on Cloud-IoT infrastructures"};
    cli.require_subcommand(1);

    std::vector<std::string> files;
    std::string app_name;
    std::string rank_spec;
    std::string format = "table";
    std::string overlay_path;
    std::string assign_spec;
    int rank_id = 1;
    ConstantsFlags constants;

    CLI::App* validate_cmd =
        cli.add_subcommand("validate", "Parse and validate fact files");
    validate_cmd->add_option("files", files, "Fact files")
        ->required()
        ->expected(-1);

    CLI::App* place_cmd = cli.add_subcommand(
        "place", "Enumerate and rank eligible placements");
    place_cmd->add_option("files", files, "Fact files")->required()->expected(-1);
    place_cmd->add_option("--app", app_name, "Application name")->required();
    place_cmd->add_option("--rank", rank_spec,
                          "Rank key, e.g. carbon,cost,energy");
    place_cmd->add_option("--format", format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    constants.add_to(place_cmd);

    CLI::App* explain_cmd = cli.add_subcommand(
        "explain", "Show the footprint derivation of one placement");
    explain_cmd->add_option("files", files, "Fact files")->required()->expected(-1);
    explain_cmd->add_option("--app", app_name, "Application name")->required();
    explain_cmd->add_option("--rank", rank_spec, "Rank key");
    CLI::Option* rank_id_opt =
        explain_cmd->add_option("--rank-id", rank_id, "Rank of the placement");
    CLI::Option* assign_opt = explain_cmd->add_option(
        "--assign", assign_spec, "Explicit assignments s1=n1,s2=n2");
    rank_id_opt->excludes(assign_opt);
    explain_cmd->add_option("--format", format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    constants.add_to(explain_cmd);

    CLI::App* whatif_cmd = cli.add_subcommand(
        "whatif", "Compare placements before and after an overlay");
    whatif_cmd->add_option("files", files, "Fact files")->required()->expected(-1);
    whatif_cmd->add_option("--overlay", overlay_path, "Overlay file")
        ->required();
    whatif_cmd->add_option("--app", app_name, "Application name")->required();
    whatif_cmd->add_option("--rank", rank_spec, "Rank key");
    whatif_cmd->add_option("--format", format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    constants.add_to(whatif_cmd);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(files);
        if (place_cmd->parsed())
            return cmd_place(files, app_name, rank_spec, format, constants);
        if (explain_cmd->parsed())
            return cmd_explain(files, app_name, rank_spec, rank_id,
                               assign_spec, format, constants);
        if (whatif_cmd->parsed())
            return cmd_whatif(files, overlay_path, app_name, rank_spec, format,
                              constants);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationFailed& e) {
        print_diagnostics(e.diagnostics());
        return kExitUsage;
    } catch (const KeyNotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownApplication& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
