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
// Hourly energy, carbon and cost estimation. Hardware energy of a node is
// the profile delta between the load before and after placing the services
// assigned to it, scaled by the node's PUE; all services on a node form a
// single load transition, which matters for non-linear profiles. Carbon
// weighs that energy by the node's energy mix. Network energy charges a
// flat kWh/MB intensity on the bandwidth crossing node boundaries.

#ifndef GREENPLACE_FOOTPRINT_HPP
#define GREENPLACE_FOOTPRINT_HPP

#include <vector>

#include "greenplace/errors.hpp"
#include "greenplace/model.hpp"

namespace greenplace {

/// Profile value at a load percentage. Throws DomainError outside [0, 100].
/// A log-affine profile returns its intercept at load 0 (idle baseline);
/// the formula itself is undefined there.
double eval_profile(const EnergyProfile& profile, double load);

/// One node's load transition under a placement.
struct NodeDelta {
    Identifier node;
    double old_load = 0;    // percent, 100 * (tot - free) / tot
    double new_load = 0;    // percent, after adding the placed units
    double old_energy = 0;  // kWh, profile at old_load
    double new_energy = 0;  // kWh, profile at new_load
    double energy_kwh = 0;  // (new_energy - old_energy) * PUE
    double carbon_kg = 0;   // energy_kwh * mix_factor
    double mix_factor = 0;  // sum of fraction * emission factor, kgCO2/kWh
};

/// Load transition of `node` under `alloc`. Negative profile deltas are
/// reported as-is, never clamped.
NodeDelta node_delta(const KnowledgeBase& kb, const Identifier& node,
                     const Allocation& alloc);

/// PUE-scaled hardware energy of `node` under `alloc`, in kWh.
double hardware_energy(const KnowledgeBase& kb, const Identifier& node,
                       const Allocation& alloc);

/// energy * sum(fraction_i * factor_i). Throws UnknownSource for a mix
/// source absent from the table (validation prevents this for built KBs).
double hardware_emissions(const EnergyMix& mix, const EmissionsTable& table,
                          double energy_kwh);

/// Energy and carbon of the allocated inter-node traffic for one hour.
NetworkFootprint network_footprint(const Allocation& alloc,
                                   const Constants& constants);

/// Sum over assignments of hardware_reqs(service) * unit_cost(node).
double hourly_cost(const KnowledgeBase& kb, const Placement& placement);

/// One delta per distinct deployment node, in first-assignment order.
std::vector<NodeDelta> node_deltas(const KnowledgeBase& kb,
                                   const Placement& placement);

/// Full footprint of a placement; totals are the sums of the per-node and
/// network breakdown entries.
Footprint footprint(const KnowledgeBase& kb, const Placement& placement);

}  // namespace greenplace

#endif  // GREENPLACE_FOOTPRINT_HPP
