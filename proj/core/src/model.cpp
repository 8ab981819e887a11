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

#include "greenplace/model.hpp"

#include <algorithm>
#include <cctype>

#include "greenplace/errors.hpp"

namespace greenplace {

std::string SourcePos::to_string() const {
    if (!known()) return file.empty() ? "<kb>" : file;
    std::string out = file.empty() ? "<input>" : file;
    out += ":" + std::to_string(line) + ":" + std::to_string(column);
    return out;
}

bool is_valid_identifier(std::string_view name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
        return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

bool operator==(const EnergyProfile::StepLevel& a,
                const EnergyProfile::StepLevel& b) {
    return a.threshold == b.threshold && a.value == b.value;
}

bool operator==(const EnergyProfile::TablePoint& a,
                const EnergyProfile::TablePoint& b) {
    return a.load == b.load && a.value == b.value;
}

const std::map<Identifier, double>& default_emission_factors() {
    static const std::map<Identifier, double> factors = {
        {"gas", 0.610},         {"coal", 1.100},  {"onshorewind", 0.0097},
        {"offshorewind", 0.0165}, {"solar", 0.05},
    };
    return factors;
}

Constants Constants::preset(ConstantsPreset p) {
    Constants c;
    if (p == ConstantsPreset::Preliminaries) c.kwh_per_mb = 0.0023;
    return c;
}

const Application* KnowledgeBase::find_application(const Identifier& name) const {
    auto it = applications.find(name);
    return it == applications.end() ? nullptr : &it->second;
}

const Service* KnowledgeBase::find_service(const Identifier& name) const {
    auto it = services.find(name);
    return it == services.end() ? nullptr : &it->second;
}

const Node* KnowledgeBase::find_node(const Identifier& name) const {
    auto it = nodes.find(name);
    return it == nodes.end() ? nullptr : &it->second;
}

const Link* KnowledgeBase::find_link(const Identifier& from,
                                     const Identifier& to) const {
    auto it = links.find({from, to});
    return it == links.end() ? nullptr : &it->second;
}

const Identifier* Placement::node_of(const Identifier& service) const {
    for (const auto& a : assignments)
        if (a.service == service) return &a.node;
    return nullptr;
}

std::vector<Identifier> Placement::node_names() const {
    std::vector<Identifier> names;
    names.reserve(assignments.size());
    for (const auto& a : assignments) names.push_back(a.node);
    return names;
}

std::string Diagnostic::to_string() const {
    std::string out = location.to_string();
    out += severity == Severity::Error ? ": error: " : ": warning: ";
    out += message;
    if (!subject.empty()) out += " (" + subject + ")";
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    });
}

std::vector<Identifier> sorted_unique(std::vector<Identifier> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

bool is_subset(const std::vector<Identifier>& reqs,
               const std::vector<Identifier>& caps) {
    return std::includes(caps.begin(), caps.end(), reqs.begin(), reqs.end());
}

// errors.hpp implementations live here; the types are small enough that a
// separate translation unit would be noise.

namespace {

std::string format_syntax_message(const SourcePos& pos, const std::string& message) {
    return pos.to_string() + ": " + message;
}

std::string format_validation_message(const std::vector<Diagnostic>& diags) {
    std::size_t errors = 0;
    for (const auto& d : diags)
        if (d.severity == Severity::Error) ++errors;
    std::string out = "knowledge base validation failed: " +
                      std::to_string(errors) + " error(s)";
    for (const auto& d : diags) {
        if (d.severity == Severity::Error) {
            out += "; first: " + d.to_string();
            break;
        }
    }
    return out;
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::string message,
                         std::vector<std::string> expected)
    : std::runtime_error(format_syntax_message(pos, message)),
      pos_(std::move(pos)),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

ValidationFailed::ValidationFailed(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(format_validation_message(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

UnknownApplication::UnknownApplication(const Identifier& name)
    : std::runtime_error("unknown application '" + name + "'") {}

UnknownSource::UnknownSource(const Identifier& source)
    : std::runtime_error("unknown emission source '" + source + "'") {}

}  // namespace greenplace
