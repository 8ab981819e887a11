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

#include "greenplace/overlay.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "greenplace/errors.hpp"
#include "greenplace/kb_builder.hpp"

namespace greenplace {

namespace {

struct HeadInfo {
    FactHead head;
    const char* name;
    int key_arity;
};

constexpr HeadInfo kHeads[] = {
    {FactHead::Application, "application", 1},
    {FactHead::Service, "service", 1},
    {FactHead::S2s, "s2s", 2},
    {FactHead::Node, "node", 1},
    {FactHead::Cost, "cost", 1},
    {FactHead::TotHw, "totHW", 1},
    {FactHead::Pue, "pue", 1},
    {FactHead::EnergyProfile, "energyProfile", 1},
    {FactHead::EnergySourceMix, "energySourceMix", 1},
    {FactHead::Link, "link", 2},
    {FactHead::BiLink, "biLink", 2},
    {FactHead::Emissions, "emissions", 1},
};

const HeadInfo* head_info(std::string_view name) {
    for (const auto& h : kHeads)
        if (name == h.name) return &h;
    return nullptr;
}

const HeadInfo& head_info(FactHead head) {
    for (const auto& h : kHeads)
        if (head == h.head) return h;
    return kHeads[0];
}

FactHead head_of(const Fact& fact) {
    return head_info(fact_head(fact))->head;
}

// Key of a fact within its head category.
std::vector<Identifier> key_of(const Fact& fact) {
    struct {
        std::vector<Identifier> operator()(const ApplicationFact& f) { return {f.name}; }
        std::vector<Identifier> operator()(const ServiceFact& f) { return {f.name}; }
        std::vector<Identifier> operator()(const FlowFact& f) { return {f.from, f.to}; }
        std::vector<Identifier> operator()(const NodeFact& f) { return {f.name}; }
        std::vector<Identifier> operator()(const CostFact& f) { return {f.node}; }
        std::vector<Identifier> operator()(const TotHwFact& f) { return {f.node}; }
        std::vector<Identifier> operator()(const PueFact& f) { return {f.node}; }
        std::vector<Identifier> operator()(const ProfileFact& f) { return {f.node}; }
        std::vector<Identifier> operator()(const MixFact& f) { return {f.node}; }
        std::vector<Identifier> operator()(const LinkFact& f) { return {f.from, f.to}; }
        std::vector<Identifier> operator()(const EmissionsFact& f) { return {f.source}; }
    } v;
    return std::visit(v, fact);
}

std::string key_string(FactHead head, const std::vector<Identifier>& key) {
    std::string out = head_info(head).name;
    out += "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += ", ";
        out += key[i];
    }
    out += ")";
    return out;
}

// Directed-link lookup; overlay facts and the kb fact view only hold
// directed links (biLink is expanded on both sides).
std::optional<std::size_t> find_fact(const std::vector<Fact>& facts,
                                     FactHead head,
                                     const std::vector<Identifier>& key) {
    for (std::size_t i = 0; i < facts.size(); ++i) {
        if (head_of(facts[i]) != head) continue;
        if (key_of(facts[i]) == key) return i;
    }
    return std::nullopt;
}

void remove_node_cascade(std::vector<Fact>& facts, const Identifier& name) {
    std::erase_if(facts, [&](const Fact& fact) {
        switch (head_of(fact)) {
            case FactHead::Node:
                return std::get<NodeFact>(fact).name == name;
            case FactHead::Cost:
                return std::get<CostFact>(fact).node == name;
            case FactHead::TotHw:
                return std::get<TotHwFact>(fact).node == name;
            case FactHead::Pue:
                return std::get<PueFact>(fact).node == name;
            case FactHead::EnergyProfile:
                return std::get<ProfileFact>(fact).node == name;
            case FactHead::EnergySourceMix:
                return std::get<MixFact>(fact).node == name;
            case FactHead::Link: {
                const auto& l = std::get<LinkFact>(fact);
                return l.from == name || l.to == name;
            }
            default:
                return false;
        }
    });
}

void apply_remove(std::vector<Fact>& facts, const OverlayDirective& d) {
    const FactHead head = d.remove_head;
    if (head == FactHead::Node) {
        if (!find_fact(facts, FactHead::Node, d.remove_key))
            throw KeyNotFound("no fact " + key_string(head, d.remove_key));
        remove_node_cascade(facts, d.remove_key[0]);
        return;
    }
    if (head == FactHead::BiLink) {
        // Both directions must exist.
        auto fwd = find_fact(facts, FactHead::Link, d.remove_key);
        auto rev = find_fact(facts, FactHead::Link,
                             {d.remove_key[1], d.remove_key[0]});
        if (!fwd || !rev)
            throw KeyNotFound("no fact " + key_string(head, d.remove_key));
        std::vector<std::size_t> idx{*fwd, *rev};
        std::sort(idx.rbegin(), idx.rend());
        for (std::size_t i : idx) facts.erase(facts.begin() + i);
        return;
    }
    auto at = find_fact(facts, head, d.remove_key);
    if (!at) throw KeyNotFound("no fact " + key_string(head, d.remove_key));
    facts.erase(facts.begin() + *at);
}

void apply_replace(std::vector<Fact>& facts, const OverlayDirective& d) {
    const FactHead head = head_of(d.fact);
    const std::vector<Identifier> key = key_of(d.fact);
    if (head == FactHead::BiLink) {
        auto fwd = find_fact(facts, FactHead::Link, key);
        auto rev = find_fact(facts, FactHead::Link, {key[1], key[0]});
        if (!fwd || !rev)
            throw KeyNotFound("no fact " + key_string(head, key));
        LinkFact l = std::get<LinkFact>(d.fact);
        l.bidirectional = false;
        facts[*fwd] = l;
        std::swap(l.from, l.to);
        facts[*rev] = l;
        return;
    }
    auto at = find_fact(facts, head, key);
    if (!at) throw KeyNotFound("no fact " + key_string(head, key));
    facts[*at] = d.fact;
}

void apply_add(std::vector<Fact>& facts, const OverlayDirective& d) {
    if (head_of(d.fact) == FactHead::BiLink) {
        LinkFact l = std::get<LinkFact>(d.fact);
        l.bidirectional = false;
        facts.push_back(l);
        std::swap(l.from, l.to);
        facts.push_back(l);
        return;
    }
    facts.push_back(d.fact);
}

}  // namespace

std::string to_string(FactHead head) { return head_info(head).name; }

Overlay parse_overlay(std::string_view text, std::string file) {
    Overlay overlay;
    std::size_t pos = 0;
    int line = 1;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);

        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || raw[first] == '%') {
            pos = eol + 1;
            ++line;
            continue;
        }
        const char marker = raw[first];
        const int marker_col = static_cast<int>(first) + 1;
        if (marker != '+' && marker != '!' && marker != '-')
            throw SyntaxError({file, line, marker_col},
                              std::string("expected directive marker but found '") +
                                  marker + "'",
                              {"+", "!", "-"});
        std::string_view body = raw.substr(first + 1);

        OverlayDirective d;
        d.pos = {file, line, marker_col};
        if (marker == '+' || marker == '!') {
            d.op = marker == '+' ? OverlayDirective::Op::Add
                                 : OverlayDirective::Op::Replace;
            FactFile parsed;
            try {
                parsed = parse_facts(body, file);
            } catch (const SyntaxError& e) {
                throw SyntaxError({file, line, marker_col + e.position().column},
                                  e.raw_message());
            }
            if (parsed.facts.size() != 1)
                throw SyntaxError(d.pos, "expected exactly one fact per directive");
            d.fact = parsed.facts.front();
        } else {
            d.op = OverlayDirective::Op::Remove;
            // head "(" key { "," key } ")" "."
            std::string spec(body);
            std::size_t open = spec.find('(');
            std::size_t close = spec.find(')');
            std::size_t dot = spec.rfind('.');
            if (open == std::string::npos || close == std::string::npos ||
                dot == std::string::npos || close < open)
                throw SyntaxError(d.pos, "malformed remove directive, "
                                         "expected '- head(key).'");
            std::string head_name = spec.substr(0, open);
            head_name.erase(std::remove_if(head_name.begin(), head_name.end(),
                                           [](unsigned char c) {
                                               return std::isspace(c);
                                           }),
                            head_name.end());
            const HeadInfo* info = head_info(head_name);
            if (!info)
                throw SyntaxError(d.pos, "unknown fact head '" + head_name + "'");
            d.remove_head = info->head;
            std::string keys = spec.substr(open + 1, close - open - 1);
            std::size_t start = 0;
            while (start <= keys.size()) {
                std::size_t comma = keys.find(',', start);
                std::string k = keys.substr(
                    start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
                k.erase(std::remove_if(k.begin(), k.end(),
                                       [](unsigned char c) {
                                           return std::isspace(c);
                                       }),
                        k.end());
                if (!is_valid_identifier(k))
                    throw SyntaxError(d.pos, "invalid key '" + k + "'");
                d.remove_key.push_back(k);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (static_cast<int>(d.remove_key.size()) != info->key_arity)
                throw SyntaxError(d.pos, std::string("remove key for ") +
                                             info->name + " takes " +
                                             std::to_string(info->key_arity) +
                                             " identifier(s)");
        }
        overlay.directives.push_back(std::move(d));
        pos = eol + 1;
        ++line;
    }
    return overlay;
}

KnowledgeBase apply_overlay(const KnowledgeBase& kb, const Overlay& overlay) {
    std::vector<Fact> facts = to_facts(kb).facts;
    for (const auto& d : overlay.directives) {
        switch (d.op) {
            case OverlayDirective::Op::Add: apply_add(facts, d); break;
            case OverlayDirective::Op::Replace: apply_replace(facts, d); break;
            case OverlayDirective::Op::Remove: apply_remove(facts, d); break;
        }
    }
    return build_kb(FactFile{std::move(facts)},
                    ConstantsOverrides::pin(kb.constants));
}

}  // namespace greenplace
