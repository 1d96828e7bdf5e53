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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/flat_set.hpp"

namespace fsp {

// Interned propositional atom. Equality is identity of the interned name;
// ordering is lexicographic on the name so that every printed set is stable
// regardless of interning order.
class Atom {
public:
    // Interns `name`. Throws std::invalid_argument unless the name matches
    // [a-z][A-Za-z0-9_]* and is not the reserved word `not`.
    explicit Atom(std::string_view name);

    const std::string& name() const { return *name_; }

    friend bool operator==(Atom a, Atom b) { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(Atom a, Atom b) {
        if (a.name_ == b.name_) return std::strong_ordering::equal;
        return *a.name_ <=> *b.name_;
    }

    static bool valid_name(std::string_view name);

private:
    const std::string* name_;
};

using AtomSet = FlatSet<Atom>;

// Builds an atom set from names; convenience for tests and tools.
AtomSet atoms(std::initializer_list<std::string_view> names);

enum class LiteralKind : std::uint8_t { Pos = 0, Naf = 1, NafNaf = 2 };

struct BodyLiteral {
    LiteralKind kind;
    Atom atom;

    static BodyLiteral pos(Atom a) { return {LiteralKind::Pos, a}; }
    static BodyLiteral naf(Atom a) { return {LiteralKind::Naf, a}; }
    static BodyLiteral nafnaf(Atom a) { return {LiteralKind::NafNaf, a}; }

    // `not l`, with not not not p = not p.
    BodyLiteral negated() const;
    // `not not l`, with not not not p = not p and not not not not p = not not p.
    BodyLiteral double_negated() const;

    friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
    friend auto operator<=>(const BodyLiteral&, const BodyLiteral&) = default;
};

using LiteralSet = FlatSet<BodyLiteral>;

LiteralSet negate_all(const LiteralSet& s);
LiteralSet double_negate_all(const LiteralSet& s);
LiteralSet naf_of(const AtomSet& s);
LiteralSet nafnaf_of(const AtomSet& s);

// H(r) <- B+(r), not B-(r), not not B--(r). An empty head is a constraint.
class Rule {
public:
    Rule() = default;
    Rule(AtomSet head, AtomSet pos, AtomSet neg = {}, AtomSet nneg = {})
        : head_(std::move(head)), pos_(std::move(pos)), neg_(std::move(neg)), nneg_(std::move(nneg)) {}
    static Rule from_body(AtomSet head, const LiteralSet& body);

    const AtomSet& head() const { return head_; }
    const AtomSet& pos() const { return pos_; }
    const AtomSet& neg() const { return neg_; }
    const AtomSet& nneg() const { return nneg_; }

    LiteralSet body() const;
    AtomSet atoms() const;
    bool mentions(Atom a) const;
    std::size_t size() const { return head_.size() + pos_.size() + neg_.size() + nneg_.size(); }

    bool is_tautological() const;
    bool is_constraint() const { return head_.empty(); }

    Rule& set_head(AtomSet h) { head_ = std::move(h); return *this; }
    Rule& set_nneg(AtomSet s) { nneg_ = std::move(s); return *this; }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;

private:
    AtomSet head_, pos_, neg_, nneg_;
};

// r' subsumes r when H(r')⊆H(r) and B(r')⊂B(r), or H(r')⊂H(r) and B(r')⊆B(r).
bool subsumes(const Rule& r2, const Rule& r);

// Finite set of rules. The signature is the union of the rule signatures plus
// any atoms it was explicitly widened with.
class Program {
public:
    Program() = default;
    Program(std::initializer_list<Rule> rs) : rules_(rs) {}
    explicit Program(std::vector<Rule> rs) : rules_(std::move(rs)) {}

    const FlatSet<Rule>& rules() const { return rules_; }
    auto begin() const { return rules_.begin(); }
    auto end() const { return rules_.end(); }
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    bool contains(const Rule& r) const { return rules_.contains(r); }

    bool insert(const Rule& r) { return rules_.insert(r); }
    void insert_all(const Program& o);
    void widen(const AtomSet& extra) { widened_ |= extra; }
    const AtomSet& widening() const { return widened_; }

    AtomSet signature() const;

    // Set equality on rules; widening is not part of program identity.
    friend bool operator==(const Program& a, const Program& b) { return a.rules_ == b.rules_; }

private:
    FlatSet<Rule> rules_;
    AtomSet widened_;
};

Program operator|(const Program& a, const Program& b);

inline AtomSet signature(const Program& p) { return p.signature(); }
inline bool is_tautological(const Rule& r) { return r.is_tautological(); }

// Returns a strict subsumer of `r` from `p`, if any.
std::optional<Rule> subsumer_in(const Rule& r, const Program& p);
inline bool is_minimal_in(const Rule& r, const Program& p) { return !subsumer_in(r, p).has_value(); }

}  // namespace fsp
