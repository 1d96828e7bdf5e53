// Copyright 2026 The fsp Authors.
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

#include "fsp/parser_io.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "fsp/ht_semantics.hpp"

namespace fsp {

ParseError::ParseError(int line, int column, std::string message, std::string snippet)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                         (snippet.empty() ? std::string() : " near '" + snippet + "'")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      snippet_(std::move(snippet)) {}

namespace {

enum class Tok { Ident, Pipe, Comma, Dot, If, End };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            const int l = line_, c = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", l, c});
                return out;
            }
            const char ch = src_[pos_];
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string word;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    word += src_[pos_];
                    advance();
                }
                if (!std::islower(static_cast<unsigned char>(word[0]))) {
                    throw ParseError(l, c, "atoms must start with a lowercase letter", word);
                }
                out.push_back({Tok::Ident, std::move(word), l, c});
            } else if (ch == '|') {
                advance();
                out.push_back({Tok::Pipe, "|", l, c});
            } else if (ch == ',') {
                advance();
                out.push_back({Tok::Comma, ",", l, c});
            } else if (ch == '.') {
                advance();
                out.push_back({Tok::Dot, ".", l, c});
            } else if (ch == ':' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                advance();
                advance();
                out.push_back({Tok::If, ":-", l, c});
            } else {
                throw ParseError(l, c, "unexpected character", snippet_at(pos_));
            }
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_blank() {
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (ch == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }
    std::string snippet_at(std::size_t p) const {
        std::size_t e = p;
        while (e < src_.size() && e - p < 16 && src_[e] != '\n') ++e;
        return std::string(src_.substr(p, std::max<std::size_t>(e - p, 1)));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program() {
        Program p;
        while (peek().kind != Tok::End) p.insert(rule());
        return p;
    }

    Rule single_rule() {
        Rule r = rule();
        if (peek().kind != Tok::End) fail(peek(), "expected end of input after rule");
        return r;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.column, msg, t.kind == Tok::End ? "<end of input>" : t.text);
    }

    Atom atom() {
        const Token& t = next();
        if (t.kind != Tok::Ident) fail(t, "expected atom");
        if (t.text == "not") fail(t, "'not' is reserved and cannot be used as an atom");
        return Atom(t.text);
    }

    BodyLiteral literal() {
        int nots = 0;
        while (peek().kind == Tok::Ident && peek().text == "not") {
            next();
            ++nots;
        }
        const Atom a = atom();
        if (nots == 0) return BodyLiteral::pos(a);
        return nots % 2 == 1 ? BodyLiteral::naf(a) : BodyLiteral::nafnaf(a);
    }

    LiteralSet body() {
        std::vector<BodyLiteral> lits{literal()};
        while (peek().kind == Tok::Comma) {
            next();
            lits.push_back(literal());
        }
        return LiteralSet(std::move(lits));
    }

    Rule rule() {
        std::vector<Atom> head;
        if (peek().kind == Tok::Ident) {
            head.push_back(atom());
            while (peek().kind == Tok::Pipe) {
                next();
                head.push_back(atom());
            }
        }
        LiteralSet b;
        const Token& t = next();
        if (t.kind == Tok::If) {
            b = body();
            const Token& d = next();
            if (d.kind != Tok::Dot) fail(d, "expected '.' at end of rule");
        } else if (t.kind != Tok::Dot) {
            fail(t, head.empty() ? "expected atom, ':-' or '.'" : "expected '|', ':-' or '.'");
        }
        return Rule::from_body(AtomSet(std::move(head)), b);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> names(const AtomSet& s) {
    std::vector<std::string> out;
    for (Atom a : s) out.push_back(a.name());
    return out;
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(Lexer(text).run()).program(); }

Program parse_program(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_program(text);
}

Rule parse_rule(std::string_view text) { return Parser(Lexer(text).run()).single_rule(); }

AtomSet parse_atom_list(std::string_view text) {
    std::vector<Atom> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view part = text.substr(start, end - start);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
        if (!part.empty()) {
            if (!Atom::valid_name(part)) {
                throw ParseError(1, static_cast<int>(start) + 1, "invalid atom name", std::string(part));
            }
            out.emplace_back(part);
        }
        start = end + 1;
    }
    return AtomSet(std::move(out));
}

std::string print_literal(const BodyLiteral& l) {
    switch (l.kind) {
        case LiteralKind::Pos: return l.atom.name();
        case LiteralKind::Naf: return "not " + l.atom.name();
        case LiteralKind::NafNaf: return "not not " + l.atom.name();
    }
    return l.atom.name();
}

std::string print_literals(const LiteralSet& ls) {
    std::vector<std::string> parts;
    for (auto kind : {LiteralKind::Pos, LiteralKind::Naf, LiteralKind::NafNaf}) {
        for (const auto& l : ls) {
            if (l.kind == kind) parts.push_back(print_literal(l));
        }
    }
    return join(parts, ", ");
}

std::string print_atoms(const AtomSet& s) { return "{" + join(names(s), ",") + "}"; }

std::string print_rule(const Rule& r) {
    std::string out = join(names(r.head()), " | ");
    const std::string body = print_literals(r.body());
    if (!body.empty()) out += out.empty() ? ":- " + body : " :- " + body;
    return out + ".";
}

std::string print_program(const Program& p) {
    std::vector<std::string> lines;
    lines.reserve(p.size());
    for (const auto& r : p) lines.push_back(print_rule(r));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

std::string answer_sets_to_json(const AtomSet& signature, const std::vector<AtomSet>& answer_sets) {
    std::vector<std::vector<std::string>> sets;
    for (const auto& s : answer_sets) sets.push_back(names(s));
    std::sort(sets.begin(), sets.end());
    nlohmann::ordered_json doc;
    doc["signature"] = names(signature);
    doc["answer_sets"] = sets;
    return doc.dump();
}

std::string ht_models_to_json(const HTModelSet& models) {
    using Pair = std::vector<std::vector<std::string>>;
    std::vector<Pair> pairs;
    for (const auto& m : models.members()) {
        pairs.push_back({names(models.sigma().set_of(m.here)), names(models.sigma().set_of(m.there))});
    }
    std::sort(pairs.begin(), pairs.end());
    nlohmann::ordered_json doc;
    doc["signature"] = names(models.sigma().atoms());
    doc["ht_models"] = pairs;
    return doc.dump();
}

}  // namespace fsp
