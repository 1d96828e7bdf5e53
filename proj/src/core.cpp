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

#include "fsp/core.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace fsp {
namespace {

class InternTable {
public:
    const std::string* intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mutex_);
        return &*names_.emplace(name).first;
    }

private:
    std::mutex mutex_;
    std::unordered_set<std::string> names_;  // node-based: element addresses are stable
};

InternTable& table() {
    static InternTable t;
    return t;
}

}  // namespace

bool Atom::valid_name(std::string_view name) {
    if (name.empty() || name == "not") return false;
    if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

Atom::Atom(std::string_view name) {
    if (!valid_name(name)) throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
    name_ = table().intern(name);
}

AtomSet atoms(std::initializer_list<std::string_view> names) {
    std::vector<Atom> v;
    for (auto n : names) v.emplace_back(n);
    return AtomSet(std::move(v));
}

BodyLiteral BodyLiteral::negated() const {
    switch (kind) {
        case LiteralKind::Pos: return naf(atom);
        case LiteralKind::Naf: return nafnaf(atom);
        case LiteralKind::NafNaf: return naf(atom);
    }
    return *this;
}

BodyLiteral BodyLiteral::double_negated() const {
    switch (kind) {
        case LiteralKind::Pos: return nafnaf(atom);
        case LiteralKind::Naf: return naf(atom);
        case LiteralKind::NafNaf: return nafnaf(atom);
    }
    return *this;
}

LiteralSet negate_all(const LiteralSet& s) {
    std::vector<BodyLiteral> out;
    out.reserve(s.size());
    for (const auto& l : s) out.push_back(l.negated());
    return LiteralSet(std::move(out));
}

LiteralSet double_negate_all(const LiteralSet& s) {
    std::vector<BodyLiteral> out;
    out.reserve(s.size());
    for (const auto& l : s) out.push_back(l.double_negated());
    return LiteralSet(std::move(out));
}

LiteralSet naf_of(const AtomSet& s) {
    std::vector<BodyLiteral> out;
    for (Atom a : s) out.push_back(BodyLiteral::naf(a));
    return LiteralSet(std::move(out));
}

LiteralSet nafnaf_of(const AtomSet& s) {
    std::vector<BodyLiteral> out;
    for (Atom a : s) out.push_back(BodyLiteral::nafnaf(a));
    return LiteralSet(std::move(out));
}

Rule Rule::from_body(AtomSet head, const LiteralSet& body) {
    std::vector<Atom> pos, neg, nneg;
    for (const auto& l : body) {
        switch (l.kind) {
            case LiteralKind::Pos: pos.push_back(l.atom); break;
            case LiteralKind::Naf: neg.push_back(l.atom); break;
            case LiteralKind::NafNaf: nneg.push_back(l.atom); break;
        }
    }
    return Rule(std::move(head), AtomSet(std::move(pos)), AtomSet(std::move(neg)), AtomSet(std::move(nneg)));
}

LiteralSet Rule::body() const {
    std::vector<BodyLiteral> out;
    out.reserve(pos_.size() + neg_.size() + nneg_.size());
    for (Atom a : pos_) out.push_back(BodyLiteral::pos(a));
    for (Atom a : neg_) out.push_back(BodyLiteral::naf(a));
    for (Atom a : nneg_) out.push_back(BodyLiteral::nafnaf(a));
    return LiteralSet(std::move(out));
}

AtomSet Rule::atoms() const { return head_ | pos_ | neg_ | nneg_; }

bool Rule::mentions(Atom a) const {
    return head_.contains(a) || pos_.contains(a) || neg_.contains(a) || nneg_.contains(a);
}

bool Rule::is_tautological() const {
    return head_.intersects(pos_) || pos_.intersects(neg_) || neg_.intersects(nneg_);
}

bool subsumes(const Rule& r2, const Rule& r) {
    if (!r2.head().subset_of(r.head())) return false;
    const bool head_strict = r2.head().size() < r.head().size();
    // B(r2) ⊆ B(r) componentwise, since literal kinds never mix.
    if (!r2.pos().subset_of(r.pos()) || !r2.neg().subset_of(r.neg()) || !r2.nneg().subset_of(r.nneg())) return false;
    const bool body_strict = r2.pos().size() + r2.neg().size() + r2.nneg().size() <
                             r.pos().size() + r.neg().size() + r.nneg().size();
    return head_strict || body_strict;
}

void Program::insert_all(const Program& o) {
    rules_ |= o.rules_;
    widened_ |= o.widened_;
}

AtomSet Program::signature() const {
    std::vector<Atom> all(widened_.begin(), widened_.end());
    for (const auto& r : rules_) {
        for (const AtomSet* s : {&r.head(), &r.pos(), &r.neg(), &r.nneg()}) all.insert(all.end(), s->begin(), s->end());
    }
    return AtomSet(std::move(all));
}

Program operator|(const Program& a, const Program& b) {
    Program p = a;
    p.insert_all(b);
    return p;
}

std::optional<Rule> subsumer_in(const Rule& r, const Program& p) {
    for (const auto& other : p) {
        if (subsumes(other, r)) return other;
    }
    return std::nullopt;
}

}  // namespace fsp
