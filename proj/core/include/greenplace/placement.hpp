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
// Backtracking placement search. Services are placed in application
// declaration order, candidate nodes are tried in lexicographic name
// order, and every partial extension must pass the node and link checks.
// The search is exhaustive: it returns every eligible total placement.

#ifndef GREENPLACE_PLACEMENT_HPP
#define GREENPLACE_PLACEMENT_HPP

#include <vector>

#include "greenplace/errors.hpp"
#include "greenplace/model.hpp"

namespace greenplace {

/// Search parameters. prior_alloc discounts resources an external
/// allocation already holds (kept empty for fresh placement, the only
/// mode the tooling ships); constants supply the hw/bw thresholds.
struct SearchContext {
    Allocation prior_alloc;
    Constants constants;

    /// Fresh placement over kb: empty prior allocation, kb's constants.
    static SearchContext fresh(const KnowledgeBase& kb);
};

/// All eligible placements of `app`, in deterministic depth-first order.
/// Throws UnknownApplication.
std::vector<Placement> enumerate_placements(const KnowledgeBase& kb,
                                            const Identifier& app,
                                            const SearchContext& ctx);

/// True iff the node covers the service's software and IoT requirements
/// and hw_ok holds. `partial` holds the services placed so far.
bool node_ok(const KnowledgeBase& kb, const Identifier& service,
             const Identifier& node, const Placement& partial,
             const SearchContext& ctx);

/// Hardware feasibility:
///   free_hw >= reqs + hw_threshold - prior_alloc(node) + placed(node, partial)
bool hw_ok(const KnowledgeBase& kb, const Identifier& node,
           const Identifier& service, const Placement& partial,
           const SearchContext& ctx);

/// Network feasibility for placing `service` on `node` given `partial`:
/// every flow to or from an already-placed service on another node needs a
/// link in that direction whose latency meets the flow's bound, and each
/// distinct directed node pair needs
///   link_bw >= sum of flow bandwidths on the pair - prior_alloc(pair) + bw_threshold
/// Flows between co-located services impose nothing.
bool links_ok(const KnowledgeBase& kb, const Identifier& service,
              const Identifier& node, const Placement& partial,
              const SearchContext& ctx);

/// Resources a total placement takes: one hw entry per assignment, one bw
/// entry per flow crossing distinct nodes (sorted by node pair).
Allocation allocated_resources(const KnowledgeBase& kb,
                               const Placement& placement);

/// Re-validates a complete assignment by replaying the search checks in
/// service order. This is the filter the brute-force test oracle uses.
/// Throws UnknownApplication.
bool check_placement(const KnowledgeBase& kb, const Identifier& app,
                     const Placement& placement, const SearchContext& ctx);

}  // namespace greenplace

#endif  // GREENPLACE_PLACEMENT_HPP
