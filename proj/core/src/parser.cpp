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

#include "greenplace/parser.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "greenplace/kb_builder.hpp"

namespace greenplace {

namespace {

enum class TokenKind {
    Ident, Number, LParen, RParen, LBracket, RBracket, Comma, Period, End,
};

const char* kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::Number: return "number";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::Comma: return "','";
        case TokenKind::Period: return "'.'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    double number = 0;
    bool integral = false;  // number had no fraction/exponent part
    SourcePos pos;

    std::string describe() const {
        if (kind == TokenKind::Ident) return "'" + text + "'";
        if (kind == TokenKind::Number) return "number '" + text + "'";
        return kind_name(kind);
    }
};

class Lexer {
public:
    Lexer(std::string_view text, std::string file)
        : text_(text), file_(std::move(file)) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.pos = here();
        if (at_end()) return t;
        const char c = text_[i_];
        switch (c) {
            case '(': t.kind = TokenKind::LParen; advance(); return t;
            case ')': t.kind = TokenKind::RParen; advance(); return t;
            case '[': t.kind = TokenKind::LBracket; advance(); return t;
            case ']': t.kind = TokenKind::RBracket; advance(); return t;
            case ',': t.kind = TokenKind::Comma; advance(); return t;
            case '.': t.kind = TokenKind::Period; advance(); return t;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return lex_ident(t);
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
            return lex_number(t);
        throw SyntaxError(t.pos, std::string("unexpected character '") + c + "'");
    }

private:
    bool at_end() const { return i_ >= text_.size(); }

    SourcePos here() const { return {file_, line_, col_}; }

    void advance() {
        if (at_end()) return;
        if (text_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_ws_and_comments() {
        while (!at_end()) {
            const char c = text_[i_];
            if (c == '%') {
                while (!at_end() && text_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token lex_ident(Token t) {
        const std::size_t start = i_;
        while (!at_end()) {
            const char c = text_[i_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                advance();
            else
                break;
        }
        t.kind = TokenKind::Ident;
        t.text = std::string(text_.substr(start, i_ - start));
        if (!is_valid_identifier(t.text))
            throw SyntaxError(t.pos, "invalid identifier '" + t.text +
                                         "' (must start with a lowercase letter)");
        return t;
    }

    Token lex_number(Token t) {
        const std::size_t start = i_;
        if (text_[i_] == '-' || text_[i_] == '+') advance();
        std::size_t digits = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            advance();
            ++digits;
        }
        if (digits == 0)
            throw SyntaxError(t.pos, "malformed number", {"number"});
        bool integral = true;
        if (!at_end() && text_[i_] == '.' && i_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
            integral = false;
            advance();  // '.'
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                advance();
        }
        if (!at_end() && (text_[i_] == 'e' || text_[i_] == 'E')) {
            std::size_t save_i = i_;
            int save_line = line_, save_col = col_;
            advance();
            if (!at_end() && (text_[i_] == '+' || text_[i_] == '-')) advance();
            if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                integral = false;
                while (!at_end() &&
                       std::isdigit(static_cast<unsigned char>(text_[i_])))
                    advance();
            } else {
                // Not an exponent after all; the 'e' belongs to what follows.
                i_ = save_i;
                line_ = save_line;
                col_ = save_col;
            }
        }
        t.kind = TokenKind::Number;
        t.text = std::string(text_.substr(start, i_ - start));
        t.number = std::strtod(t.text.c_str(), nullptr);
        t.integral = integral;
        return t;
    }

    std::string_view text_;
    std::string file_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, std::string file)
        : lexer_(text, std::move(file)) {
        cur_ = lexer_.next();
    }

    FactFile parse_file() {
        FactFile out;
        while (cur_.kind != TokenKind::End) out.facts.push_back(parse_fact());
        return out;
    }

    // Single fact, shared with the overlay parser.
    Fact parse_fact() {
        const Token head = expect(TokenKind::Ident, "fact head");
        Fact fact = parse_fact_body(head);
        expect(TokenKind::Period);
        return fact;
    }

    Token current() const { return cur_; }

    Token expect(TokenKind kind, const char* what = nullptr) {
        if (cur_.kind != kind) {
            const std::string expected = what ? what : kind_name(kind);
            throw SyntaxError(cur_.pos,
                              "expected " + expected + " but found " +
                                  cur_.describe(),
                              {expected});
        }
        Token t = cur_;
        cur_ = lexer_.next();
        return t;
    }

private:
    Fact parse_fact_body(const Token& head) {
        const std::string& h = head.text;
        expect(TokenKind::LParen);
        Fact fact;
        if (h == "application") {
            ApplicationFact f;
            f.pos = head.pos;
            f.name = ident();
            comma();
            f.services = ident_list();
            fact = std::move(f);
        } else if (h == "service") {
            ServiceFact f;
            f.pos = head.pos;
            f.name = ident();
            comma();
            f.software_reqs = ident_list();
            comma();
            f.hardware_reqs = integer();
            comma();
            f.iot_reqs = ident_list();
            fact = std::move(f);
        } else if (h == "s2s") {
            FlowFact f;
            f.pos = head.pos;
            f.from = ident();
            comma();
            f.to = ident();
            comma();
            f.max_latency_ms = number();
            comma();
            f.min_bandwidth_mbps = number();
            fact = std::move(f);
        } else if (h == "node") {
            NodeFact f;
            f.pos = head.pos;
            f.name = ident();
            comma();
            f.software_caps = ident_list();
            comma();
            f.free_hw = integer();
            comma();
            f.iot_caps = ident_list();
            fact = std::move(f);
        } else if (h == "cost") {
            CostFact f;
            f.pos = head.pos;
            f.node = ident();
            comma();
            f.unit_cost = number();
            fact = std::move(f);
        } else if (h == "totHW") {
            TotHwFact f;
            f.pos = head.pos;
            f.node = ident();
            comma();
            f.tot_hw = integer();
            fact = std::move(f);
        } else if (h == "pue") {
            PueFact f;
            f.pos = head.pos;
            f.node = ident();
            comma();
            f.pue = number();
            fact = std::move(f);
        } else if (h == "energyProfile") {
            ProfileFact f;
            f.pos = head.pos;
            f.node = ident();
            comma();
            f.profile = profile_expr();
            fact = std::move(f);
        } else if (h == "energySourceMix") {
            MixFact f;
            f.pos = head.pos;
            f.node = ident();
            comma();
            f.mix = mix_list();
            fact = std::move(f);
        } else if (h == "link" || h == "biLink") {
            LinkFact f;
            f.pos = head.pos;
            f.bidirectional = (h == "biLink");
            f.from = ident();
            comma();
            f.to = ident();
            comma();
            f.latency_ms = number();
            comma();
            f.bandwidth_mbps = number();
            fact = std::move(f);
        } else if (h == "emissions") {
            EmissionsFact f;
            f.pos = head.pos;
            f.source = ident();
            comma();
            f.factor = number();
            fact = std::move(f);
        } else {
            throw SyntaxError(
                head.pos, "unknown fact head '" + h + "'",
                {"application", "service", "s2s", "node", "cost", "totHW",
                 "pue", "energyProfile", "energySourceMix", "link", "biLink",
                 "emissions"});
        }
        expect(TokenKind::RParen);
        return fact;
    }

    void comma() { expect(TokenKind::Comma); }

    Identifier ident() { return expect(TokenKind::Ident).text; }

    double number() { return expect(TokenKind::Number).number; }

    std::int64_t integer() {
        const Token t = expect(TokenKind::Number, "integer");
        double int_part = 0;
        if (!t.integral || std::modf(t.number, &int_part) != 0.0)
            throw SyntaxError(t.pos, "expected integer but found '" + t.text + "'",
                              {"integer"});
        return static_cast<std::int64_t>(t.number);
    }

    std::vector<Identifier> ident_list() {
        expect(TokenKind::LBracket);
        std::vector<Identifier> items;
        if (cur_.kind != TokenKind::RBracket) {
            items.push_back(ident());
            while (cur_.kind == TokenKind::Comma) {
                comma();
                items.push_back(ident());
            }
        }
        expect(TokenKind::RBracket);
        return items;
    }

    EnergyMix mix_list() {
        expect(TokenKind::LBracket);
        EnergyMix mix;
        if (cur_.kind != TokenKind::RBracket) {
            mix.shares.push_back(mix_share());
            while (cur_.kind == TokenKind::Comma) {
                comma();
                mix.shares.push_back(mix_share());
            }
        }
        expect(TokenKind::RBracket);
        return mix;
    }

    MixShare mix_share() {
        expect(TokenKind::LParen);
        MixShare share;
        share.fraction = number();
        comma();
        share.source = ident();
        expect(TokenKind::RParen);
        return share;
    }

    EnergyProfile profile_expr() {
        const Token kind = expect(TokenKind::Ident, "profile expression");
        EnergyProfile p;
        expect(TokenKind::LParen);
        if (kind.text == "const") {
            p.kind = EnergyProfile::Kind::Constant;
            p.a = number();
        } else if (kind.text == "linear") {
            p.kind = EnergyProfile::Kind::Linear;
            p.a = number();
            comma();
            p.b = number();
        } else if (kind.text == "loglinear") {
            p.kind = EnergyProfile::Kind::LogAffine;
            p.a = number();
            comma();
            p.b = number();
        } else if (kind.text == "step") {
            p.kind = EnergyProfile::Kind::Step;
            parse_step_entries(p);
        } else if (kind.text == "table") {
            p.kind = EnergyProfile::Kind::Table;
            expect(TokenKind::LBracket);
            do {
                expect(TokenKind::LParen);
                EnergyProfile::TablePoint pt;
                pt.load = number();
                comma();
                pt.value = number();
                expect(TokenKind::RParen);
                p.points.push_back(pt);
            } while (cur_.kind == TokenKind::Comma && (comma(), true));
            expect(TokenKind::RBracket);
        } else {
            throw SyntaxError(kind.pos,
                              "unknown profile expression '" + kind.text + "'",
                              {"const", "linear", "loglinear", "step", "table"});
        }
        expect(TokenKind::RParen);
        return p;
    }

    void parse_step_entries(EnergyProfile& p) {
        expect(TokenKind::LBracket);
        bool saw_default = false;
        do {
            const Token open = expect(TokenKind::LParen);
            if (saw_default)
                throw SyntaxError(open.pos,
                                  "step entries after the default entry");
            if (cur_.kind == TokenKind::Ident && cur_.text == "default") {
                expect(TokenKind::Ident);
                comma();
                p.step_default = number();
                saw_default = true;
            } else {
                EnergyProfile::StepLevel level;
                level.threshold = number();
                comma();
                level.value = number();
                p.steps.push_back(level);
            }
            expect(TokenKind::RParen);
        } while (cur_.kind == TokenKind::Comma && (comma(), true));
        const Token close = expect(TokenKind::RBracket);
        if (!saw_default)
            throw SyntaxError(close.pos,
                              "step profile needs a final (default, value) entry");
    }

    Lexer lexer_;
    Token cur_;
};

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    std::array<char, 40> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

void render_ident_list(std::ostringstream& out,
                       const std::vector<Identifier>& items) {
    out << '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out << ", ";
        out << items[i];
    }
    out << ']';
}

void render_profile(std::ostringstream& out, const EnergyProfile& p) {
    switch (p.kind) {
        case EnergyProfile::Kind::Constant:
            out << "const(" << format_number(p.a) << ')';
            break;
        case EnergyProfile::Kind::Linear:
            out << "linear(" << format_number(p.a) << ", " << format_number(p.b)
                << ')';
            break;
        case EnergyProfile::Kind::LogAffine:
            out << "loglinear(" << format_number(p.a) << ", "
                << format_number(p.b) << ')';
            break;
        case EnergyProfile::Kind::Step:
            out << "step([";
            for (const auto& s : p.steps)
                out << '(' << format_number(s.threshold) << ", "
                    << format_number(s.value) << "), ";
            out << "(default, " << format_number(p.step_default) << ")])";
            break;
        case EnergyProfile::Kind::Table:
            out << "table([";
            for (std::size_t i = 0; i < p.points.size(); ++i) {
                if (i) out << ", ";
                out << '(' << format_number(p.points[i].load) << ", "
                    << format_number(p.points[i].value) << ')';
            }
            out << "])";
            break;
    }
}

struct RenderVisitor {
    std::ostringstream& out;

    void operator()(const ApplicationFact& f) {
        out << "application(" << f.name << ", ";
        render_ident_list(out, f.services);
        out << ").";
    }
    void operator()(const ServiceFact& f) {
        out << "service(" << f.name << ", ";
        render_ident_list(out, f.software_reqs);
        out << ", " << f.hardware_reqs << ", ";
        render_ident_list(out, f.iot_reqs);
        out << ").";
    }
    void operator()(const FlowFact& f) {
        out << "s2s(" << f.from << ", " << f.to << ", "
            << format_number(f.max_latency_ms) << ", "
            << format_number(f.min_bandwidth_mbps) << ").";
    }
    void operator()(const NodeFact& f) {
        out << "node(" << f.name << ", ";
        render_ident_list(out, f.software_caps);
        out << ", " << f.free_hw << ", ";
        render_ident_list(out, f.iot_caps);
        out << ").";
    }
    void operator()(const CostFact& f) {
        out << "cost(" << f.node << ", " << format_number(f.unit_cost) << ").";
    }
    void operator()(const TotHwFact& f) {
        out << "totHW(" << f.node << ", " << f.tot_hw << ").";
    }
    void operator()(const PueFact& f) {
        out << "pue(" << f.node << ", " << format_number(f.pue) << ").";
    }
    void operator()(const ProfileFact& f) {
        out << "energyProfile(" << f.node << ", ";
        render_profile(out, f.profile);
        out << ").";
    }
    void operator()(const MixFact& f) {
        out << "energySourceMix(" << f.node << ", [";
        for (std::size_t i = 0; i < f.mix.shares.size(); ++i) {
            if (i) out << ", ";
            out << '(' << format_number(f.mix.shares[i].fraction) << ", "
                << f.mix.shares[i].source << ')';
        }
        out << "]).";
    }
    void operator()(const LinkFact& f) {
        out << (f.bidirectional ? "biLink(" : "link(") << f.from << ", "
            << f.to << ", " << format_number(f.latency_ms) << ", "
            << format_number(f.bandwidth_mbps) << ").";
    }
    void operator()(const EmissionsFact& f) {
        out << "emissions(" << f.source << ", " << format_number(f.factor)
            << ").";
    }
};

template <typename T>
bool eq(const T& a, const T& b);

template <>
bool eq(const ApplicationFact& a, const ApplicationFact& b) {
    return a.name == b.name && a.services == b.services;
}
template <>
bool eq(const ServiceFact& a, const ServiceFact& b) {
    return a.name == b.name && a.software_reqs == b.software_reqs &&
           a.hardware_reqs == b.hardware_reqs && a.iot_reqs == b.iot_reqs;
}
template <>
bool eq(const FlowFact& a, const FlowFact& b) {
    return a.from == b.from && a.to == b.to &&
           a.max_latency_ms == b.max_latency_ms &&
           a.min_bandwidth_mbps == b.min_bandwidth_mbps;
}
template <>
bool eq(const NodeFact& a, const NodeFact& b) {
    return a.name == b.name && a.software_caps == b.software_caps &&
           a.free_hw == b.free_hw && a.iot_caps == b.iot_caps;
}
template <>
bool eq(const CostFact& a, const CostFact& b) {
    return a.node == b.node && a.unit_cost == b.unit_cost;
}
template <>
bool eq(const TotHwFact& a, const TotHwFact& b) {
    return a.node == b.node && a.tot_hw == b.tot_hw;
}
template <>
bool eq(const PueFact& a, const PueFact& b) {
    return a.node == b.node && a.pue == b.pue;
}
template <>
bool eq(const ProfileFact& a, const ProfileFact& b) {
    return a.node == b.node && a.profile == b.profile;
}
template <>
bool eq(const MixFact& a, const MixFact& b) {
    return a.node == b.node && a.mix == b.mix;
}
template <>
bool eq(const LinkFact& a, const LinkFact& b) {
    return a.from == b.from && a.to == b.to && a.latency_ms == b.latency_ms &&
           a.bandwidth_mbps == b.bandwidth_mbps &&
           a.bidirectional == b.bidirectional;
}
template <>
bool eq(const EmissionsFact& a, const EmissionsFact& b) {
    return a.source == b.source && a.factor == b.factor;
}

}  // namespace

const SourcePos& fact_pos(const Fact& fact) {
    return std::visit([](const auto& f) -> const SourcePos& { return f.pos; },
                      fact);
}

std::string fact_head(const Fact& fact) {
    struct {
        std::string operator()(const ApplicationFact&) { return "application"; }
        std::string operator()(const ServiceFact&) { return "service"; }
        std::string operator()(const FlowFact&) { return "s2s"; }
        std::string operator()(const NodeFact&) { return "node"; }
        std::string operator()(const CostFact&) { return "cost"; }
        std::string operator()(const TotHwFact&) { return "totHW"; }
        std::string operator()(const PueFact&) { return "pue"; }
        std::string operator()(const ProfileFact&) { return "energyProfile"; }
        std::string operator()(const MixFact&) { return "energySourceMix"; }
        std::string operator()(const LinkFact& f) {
            return f.bidirectional ? "biLink" : "link";
        }
        std::string operator()(const EmissionsFact&) { return "emissions"; }
    } v;
    return std::visit(v, fact);
}

FactFile parse_facts(std::string_view text, std::string file) {
    Parser parser(text, std::move(file));
    FactFile out = parser.parse_file();
    const auto dups = duplicate_diagnostics(out);
    for (const auto& d : dups) {
        if (d.severity == Severity::Error)
            throw DuplicateFactError(d.location, d.message);
    }
    return out;
}

std::string render(const Fact& fact) {
    std::ostringstream out;
    std::visit(RenderVisitor{out}, fact);
    return out.str();
}

std::string render(const FactFile& facts) {
    std::string out;
    for (const auto& f : facts.facts) {
        out += render(f);
        out += '\n';
    }
    return out;
}

bool structurally_equal(const Fact& lhs, const Fact& rhs) {
    if (lhs.index() != rhs.index()) return false;
    return std::visit(
        [&rhs](const auto& l) {
            using T = std::decay_t<decltype(l)>;
            return eq<T>(l, std::get<T>(rhs));
        },
        lhs);
}

bool structurally_equal(const FactFile& lhs, const FactFile& rhs) {
    if (lhs.facts.size() != rhs.facts.size()) return false;
    for (std::size_t i = 0; i < lhs.facts.size(); ++i)
        if (!structurally_equal(lhs.facts[i], rhs.facts[i])) return false;
    return true;
}

}  // namespace greenplace
