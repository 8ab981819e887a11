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

#ifndef GREENPLACE_MODEL_HPP
#define GREENPLACE_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace greenplace {

/// Position of a fact in its source file. line == 0 means "unknown"
/// (e.g. for knowledge bases assembled programmatically).
struct SourcePos {
    std::string file;
    int line = 0;
    int column = 0;

    bool known() const { return line > 0; }
    std::string to_string() const;
};

/// Names of services, nodes, applications, software, IoT devices and
/// energy sources. Lowercase letter first, then letters, digits and
/// underscores; unique within their fact category.
using Identifier = std::string;

bool is_valid_identifier(std::string_view name);

/// A service and its software, hardware and IoT requirements.
/// Hardware is measured in abstract integer units.
struct Service {
    Identifier name;
    std::vector<Identifier> software_reqs;  // sorted, unique
    std::int64_t hardware_reqs = 0;
    std::vector<Identifier> iot_reqs;       // sorted, unique
    SourcePos origin;
};

/// A multi-service application; `services` keeps declaration order,
/// which also fixes the placement search order.
struct Application {
    Identifier name;
    std::vector<Identifier> services;
    SourcePos origin;
};

/// A directed service-to-service interaction with its QoS bounds.
struct Flow {
    Identifier from;
    Identifier to;
    double max_latency_ms = 0;
    double min_bandwidth_mbps = 0;
    SourcePos origin;
};

/// Node energy consumption (kWh) as a function of load percent in [0, 100].
struct EnergyProfile {
    enum class Kind { Constant, Linear, LogAffine, Step, Table };

    struct StepLevel {
        double threshold = 0;  // strictly increasing, in (0, 100]
        double value = 0;
    };
    struct TablePoint {
        double load = 0;  // strictly increasing, endpoints 0 and 100
        double value = 0;
    };

    Kind kind = Kind::Constant;
    double a = 0;  // Constant: the value; Linear/LogAffine: intercept
    double b = 0;  // Linear: slope; LogAffine: log coefficient
    std::vector<StepLevel> steps;     // Step only
    double step_default = 0;          // Step: value above the last threshold
    std::vector<TablePoint> points;   // Table only

    friend bool operator==(const EnergyProfile&, const EnergyProfile&) = default;
};

bool operator==(const EnergyProfile::StepLevel&, const EnergyProfile::StepLevel&);
bool operator==(const EnergyProfile::TablePoint&, const EnergyProfile::TablePoint&);

/// One share of a node's energy supply.
struct MixShare {
    double fraction = 0;  // in [0, 1]
    Identifier source;

    friend bool operator==(const MixShare&, const MixShare&) = default;
};

/// A node's energy supply; fractions sum to 1.
struct EnergyMix {
    std::vector<MixShare> shares;

    friend bool operator==(const EnergyMix&, const EnergyMix&) = default;
};

/// Emission factors per energy source, in kgCO2 per kWh.
struct EmissionsTable {
    std::map<Identifier, double> factors;
};

/// The factors every knowledge base starts from (gas, coal, onshorewind,
/// offshorewind, solar); declared `emissions` facts override them.
const std::map<Identifier, double>& default_emission_factors();

/// An infrastructure node: capabilities, capacity, cost and energy data.
struct Node {
    Identifier name;
    std::vector<Identifier> software_caps;  // sorted, unique
    std::int64_t free_hw = 0;
    std::vector<Identifier> iot_caps;       // sorted, unique
    double unit_cost = 0;   // currency per hardware unit per hour
    std::int64_t tot_hw = 1;
    double pue = 1.0;       // >= 1; typical range 1.2 to 1.9, no upper bound
    EnergyProfile profile;
    EnergyMix mix;

    // Positions of the individual facts a node is assembled from.
    struct Origins {
        SourcePos node, cost, tot_hw, pue, profile, mix;
    } origins;
};

/// A directed end-to-end link between two nodes.
struct Link {
    Identifier from;
    Identifier to;
    double latency_ms = 0;
    double bandwidth_mbps = 0;
    SourcePos origin;
};

enum class ConstantsPreset { Default, Preliminaries };

/// Global model constants. The `Preliminaries` preset swaps the network
/// energy intensity for the 0.0023 kWh/MB figure; everything else is shared.
struct Constants {
    std::int64_t hw_threshold = 0;    // spare hardware units kept free per node
    double bw_threshold = 0.0;        // spare bandwidth kept free per link, Mbit/s
    double kwh_per_mb = 0.00008;      // network energy intensity
    double avg_gci = 0.475;           // global carbon intensity, kgCO2/kWh
    double mb_per_mbps_hour = 450.0;  // MB transferred per Mbit/s sustained for 1h

    static Constants preset(ConstantsPreset p);

    friend bool operator==(const Constants&, const Constants&) = default;
};

/// The validated fact base shared by the engine, the estimator and the CLI.
/// Immutable after validation; all containers iterate in name order, which
/// makes every downstream computation deterministic.
struct KnowledgeBase {
    std::map<Identifier, Application> applications;
    std::map<Identifier, Service> services;
    std::map<std::pair<Identifier, Identifier>, Flow> flows;
    std::map<Identifier, Node> nodes;
    std::map<std::pair<Identifier, Identifier>, Link> links;
    EmissionsTable emissions;
    Constants constants;

    const Application* find_application(const Identifier& name) const;
    const Service* find_service(const Identifier& name) const;
    const Node* find_node(const Identifier& name) const;
    const Link* find_link(const Identifier& from, const Identifier& to) const;
};

/// One service mapped onto one node.
struct Assignment {
    Identifier service;
    Identifier node;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// A total mapping of an application's services onto nodes, kept in the
/// application's service declaration order.
struct Placement {
    std::vector<Assignment> assignments;

    /// Node the given service is mapped to, or nullptr if absent.
    const Identifier* node_of(const Identifier& service) const;

    /// Node names in assignment order; the canonical representation used
    /// for tie-breaking and placement identity.
    std::vector<Identifier> node_names() const;

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Hardware allocated on one node by one assignment (not aggregated).
struct HwAlloc {
    Identifier node;
    std::int64_t units = 0;

    friend bool operator==(const HwAlloc&, const HwAlloc&) = default;
};

/// Bandwidth required on one directed node pair by one flow.
struct BwAlloc {
    Identifier from;
    Identifier to;
    double mbps = 0;

    friend bool operator==(const BwAlloc&, const BwAlloc&) = default;
};

/// Resources a placement takes from the infrastructure. Flows between
/// co-located services contribute no bandwidth entries.
struct Allocation {
    std::vector<HwAlloc> hw;
    std::vector<BwAlloc> bw;

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct NodeFootprint {
    Identifier node;
    double energy_kwh = 0;
    double carbon_kg = 0;
};

struct NetworkFootprint {
    double energy_kwh = 0;
    double carbon_kg = 0;
};

/// Hourly energy, carbon and cost of a placement, with the per-node and
/// network breakdown the totals are summed from.
struct Footprint {
    double energy_kwh = 0;
    double carbon_kg = 0;
    double cost = 0;  // currency is opaque
    std::vector<NodeFootprint> per_node;  // distinct nodes, assignment order
    NetworkFootprint network;
};

enum class Severity { Error, Warning };

/// One validation finding. Errors make a knowledge base unusable;
/// warnings are surfaced but do not block.
struct Diagnostic {
    Severity severity = Severity::Error;
    SourcePos location;
    std::string subject;  // e.g. "node(edgenode)"
    std::string message;

    std::string to_string() const;
};

bool has_errors(const std::vector<Diagnostic>& diags);

// Sorted-unique vector helpers used for capability sets.
std::vector<Identifier> sorted_unique(std::vector<Identifier> items);
bool is_subset(const std::vector<Identifier>& reqs, const std::vector<Identifier>& caps);

}  // namespace greenplace

#endif  // GREENPLACE_MODEL_HPP
