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

#ifndef GREENPLACE_TESTS_FIXTURES_HPP
#define GREENPLACE_TESTS_FIXTURES_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "greenplace/kb_builder.hpp"
#include "greenplace/model.hpp"
#include "greenplace/parser.hpp"

namespace greenplace::tests {

inline std::string data_dir() {
#ifdef GREENPLACE_DATA_DIR
    return GREENPLACE_DATA_DIR;
#else
    return "data";
#endif
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// The lightsApp fixture: application and infrastructure files parsed and
/// concatenated, exactly as the CLI would load them.
inline FactFile lights_facts() {
    FactFile app = parse_facts(read_file(data_dir() + "/lights_app.facts"),
                               "lights_app.facts");
    FactFile infra = parse_facts(read_file(data_dir() + "/lights_infra.facts"),
                                 "lights_infra.facts");
    FactFile merged = app;
    merged.facts.insert(merged.facts.end(), infra.facts.begin(),
                        infra.facts.end());
    return merged;
}

inline KnowledgeBase lights_kb() { return build_kb(lights_facts()); }

/// Service -> node map, the order-insensitive placement identity used when
/// comparing placement sets.
inline std::map<Identifier, Identifier> as_map(const Placement& p) {
    std::map<Identifier, Identifier> m;
    for (const auto& a : p.assignments) m[a.service] = a.node;
    return m;
}

// Golden values for the fixture, frozen from an independent recomputation
// of the energy, carbon and cost formulas (see footprint_test.cpp for the
// in-test recomputation).
namespace golden {
inline constexpr double kPrivateCloudEnergy = 0.010384330420993362;
inline constexpr double kPrivateCloudCarbon = 0.00815169938047979;
inline constexpr double kAccessPointEnergy = 0.031191623125197576;
inline constexpr double kAccessPointCarbon = 0.029381573235242365;
inline constexpr double kNetworkEnergy = 0.594;
inline constexpr double kNetworkCarbon = 0.28215;
inline constexpr double kP1Energy = 0.6043843304209935;
inline constexpr double kP1Carbon = 0.2903016993804798;
inline constexpr double kP1Cost = 0.0356;
inline constexpr double kP2Energy = 0.635575953546191;
inline constexpr double kP2Carbon = 0.31968327261572216;
inline constexpr double kP2Cost = 0.0316;
}  // namespace golden

}  // namespace greenplace::tests

#endif  // GREENPLACE_TESTS_FIXTURES_HPP
