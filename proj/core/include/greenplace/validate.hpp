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

#ifndef GREENPLACE_VALIDATE_HPP
#define GREENPLACE_VALIDATE_HPP

#include <vector>

#include "greenplace/model.hpp"

namespace greenplace {

/// Checks every model invariant and returns the findings, errors first
/// within each fact, facts in name order. Empty result means the knowledge
/// base is safe for every downstream operation. Idempotent and independent
/// of fact declaration order.
std::vector<Diagnostic> validate(const KnowledgeBase& kb);

/// True if the profile never decreases on [0, 100]. Decreasing profiles
/// are legal but make hardware energy deltas negative, so validate() flags
/// them with a warning.
bool profile_non_decreasing(const EnergyProfile& profile);

}  // namespace greenplace

#endif  // GREENPLACE_VALIDATE_HPP
