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

#include "fsp/forget.hpp"

#include <stdexcept>

#include "fsp/normalform.hpp"

namespace fsp {
namespace {

AtomSet head_without(const Rule& r, Atom q) {
    AtomSet h = r.head();
    h.erase(q);
    return h;
}

LiteralSet body_without(const Rule& r, Atom q) {
    LiteralSet b = r.body();
    b.erase_if([q](const BodyLiteral& l) { return l.atom == q; });
    return b;
}

std::vector<Rule> without(std::vector<Rule> rules, const Rule& r) {
    std::erase(rules, r);
    return rules;
}

std::vector<Rule> concat(const std::vector<Rule>& a, const std::vector<Rule>& b) {
    std::vector<Rule> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

class Deriver {
public:
    Deriver(Atom q, const Partition& parts, bool fast, ForgetTrace* trace)
        : q_(q), pt_(parts), fast_(fast), trace_(trace) {}

    Program run() {
        for (const auto& r : pt_.plain) emit("R", r, {r});
        for (const auto& r0 : pt_.r0) from_positive(r0);
        for (const auto& r2 : pt_.r2) from_double_negative(r2);
        for (const auto& r : concat(pt_.r1, pt_.r4)) from_negative(r);
        if (!fast_) {
            for (const auto& r0 : pt_.r0) family7(r0);
        }
        return Program(std::move(out_));
    }

private:
    AtomSet hq(const Rule& r) const { return head_without(r, q_); }
    LiteralSet bq(const Rule& r) const { return body_without(r, q_); }

    void emit(const char* tag, Rule r, std::vector<Rule> sources, LiteralSet dual = {},
              std::optional<Atom> h = std::nullopt) {
        if (trace_) trace_->push_back({tag, r, std::move(sources), std::move(dual), h, false});
        out_.push_back(std::move(r));
    }

    // r0: q occurs positively in the body.
    void from_positive(const Rule& r0) {
        for (const auto& r4 : pt_.r4) {  // 1a
            emit("1a", Rule::from_body(r0.head() | hq(r4), bq(r0) | r4.body()), {r0, r4});
        }
        if (fast_) return;
        const auto r1r4 = concat(pt_.r1, pt_.r4);
        for (const auto& r3 : pt_.r3) {
            for (const auto& rp : r1r4) {  // 2a
                emit("2a",
                     Rule::from_body(r0.head() | hq(r3),
                                     bq(r0) | bq(r3) | naf_of(hq(rp)) | double_negate_all(bq(rp))),
                     {r0, r3, rp});
            }
        }
        if (pt_.r3.empty()) return;
        const AsDual duals = as_dual(q_, without(concat(pt_.r0, pt_.r2), r0));
        for (const auto& r3 : pt_.r3) {
            for (Atom h : r0.head()) {
                for (const auto& d : duals) {  // 3a
                    emit("3a",
                         Rule::from_body(r0.head(), bq(r0) | LiteralSet{BodyLiteral::nafnaf(h)} | d | bq(r3) |
                                                        naf_of(hq(r3))),
                         {r0, r3}, d, h);
                }
            }
        }
    }

    // r2: not not q in the body, q not in the head.
    void from_double_negative(const Rule& r2) {
        for (const auto& r4 : pt_.r4) {  // 1b
            emit("1b", Rule::from_body(r2.head(), bq(r2) | naf_of(hq(r4)) | double_negate_all(r4.body())),
                 {r2, r4});
        }
        if (fast_) return;
        const auto r1r4 = concat(pt_.r1, pt_.r4);
        for (const auto& r3 : pt_.r3) {
            for (const auto& rp : r1r4) {  // 2b
                emit("2b",
                     Rule::from_body(r2.head(),
                                     bq(r2) | naf_of(hq(r3) | hq(rp)) | double_negate_all(bq(r3) | bq(rp))),
                     {r2, r3, rp});
            }
        }
        if (pt_.r3.empty()) return;
        const AsDual duals = as_dual(q_, without(concat(pt_.r0, pt_.r2), r2));
        for (const auto& r3 : pt_.r3) {
            for (Atom h : r2.head()) {
                for (const auto& d : duals) {  // 3b
                    emit("3b",
                         Rule::from_body(r2.head(), bq(r2) | naf_of(hq(r3)) |
                                                        double_negate_all(bq(r3) | LiteralSet{BodyLiteral::pos(h)}) |
                                                        d),
                         {r2, r3}, d, h);
                }
            }
        }
    }

    // r': not q in the body, or q in the head without not not q.
    void from_negative(const Rule& rp) {
        const LiteralSet blocked = negate_all(bq(rp));
        for (const auto& d : as_dual(q_, concat(pt_.r3, pt_.r4))) {  // 4
            if (d.intersects(blocked)) continue;
            emit("4", Rule::from_body(hq(rp), bq(rp) | d), {rp}, d);
        }
        if (fast_ || pt_.r3.empty()) return;
        const AsDual r4_duals = as_dual(q_, pt_.r4);
        const auto r0r2 = concat(pt_.r0, pt_.r2);
        for (const auto& r3 : pt_.r3) {
            for (const auto& r : r0r2) {
                for (const auto& d : r4_duals) {  // 5
                    if (d.intersects(blocked)) continue;
                    emit("5",
                         Rule::from_body(hq(rp), bq(rp) | naf_of(r.head() | hq(r3)) |
                                                     double_negate_all(bq(r) | bq(r3)) | d),
                         {rp, r3, r}, d);
                }
            }
        }
        // h(r') ranges over H(r')∖{q}: choosing q itself would reintroduce it.
        const AsDual rest_duals = as_dual(q_, without(concat(pt_.r1, pt_.r4), rp));
        for (const auto& r3 : pt_.r3) {
            for (Atom h : hq(rp)) {
                for (const auto& d : rest_duals) {  // 6
                    emit("6",
                         Rule::from_body(hq(rp), bq(rp) | naf_of(hq(r3)) |
                                                     double_negate_all(bq(r3) | LiteralSet{BodyLiteral::pos(h)}) |
                                                     d),
                         {rp, r3}, d, h);
                }
            }
        }
    }

    // Two distinct self-cycles; ordered pairs, duplicates collapse in the set.
    void family7(const Rule& r0) {
        if (pt_.r3.size() < 2) return;
        const AsDual duals = as_dual(q_, without(concat(pt_.r0, pt_.r2), r0));
        for (const auto& r3 : pt_.r3) {
            for (const auto& r3b : pt_.r3) {
                if (r3 == r3b) continue;
                for (const auto& d : duals) {
                    for (Atom h : r0.head()) {
                        emit("7",
                             Rule::from_body(r0.head() | hq(r3),
                                             bq(r0) | bq(r3) | naf_of(hq(r3b)) |
                                                 double_negate_all(bq(r3b) | LiteralSet{BodyLiteral::pos(h)}) | d),
                             {r0, r3, r3b}, d, h);
                    }
                }
            }
        }
    }

    Atom q_;
    const Partition& pt_;
    bool fast_;
    ForgetTrace* trace_;
    std::vector<Rule> out_;
};

Program run_forget(const Program& p, Atom q, bool fast, ForgetTrace* trace) {
    const Program normal = normal_form(p);
    const Partition parts = partition(normal, q);
    const std::size_t first = trace ? trace->size() : 0;
    Program result = normal_form(Deriver(q, parts, fast, trace).run());
    if (trace) {
        for (std::size_t i = first; i < trace->size(); ++i) (*trace)[i].kept = result.contains((*trace)[i].produced);
    }
    AtomSet sigma = p.signature();
    sigma.erase(q);
    result.widen(sigma);
    return result;
}

}  // namespace

Partition partition(const Program& normal, Atom q) {
    if (!is_normal_form(normal)) throw std::invalid_argument("partition requires a program in normal form");
    Partition pt;
    for (const auto& r : normal) {
        const bool in_head = r.head().contains(q);
        if (!r.mentions(q)) pt.plain.push_back(r);
        else if (r.pos().contains(q)) pt.r0.push_back(r);
        else if (r.neg().contains(q)) pt.r1.push_back(r);
        else if (r.nneg().contains(q)) (in_head ? pt.r3 : pt.r2).push_back(r);
        else pt.r4.push_back(r);
    }
    return pt;
}

Program forget(const Program& p, Atom q, ForgetTrace* trace) { return run_forget(p, q, false, trace); }

bool is_q_forgettable(const Program& p, Atom q) {
    bool only_cycles = true, has_fact = false, has_cycle = false;
    for (const auto& r : normal_form(p)) {
        if (!r.mentions(q)) continue;
        const bool cycle = r.head().contains(q) && r.nneg().contains(q);
        has_cycle = has_cycle || cycle;
        only_cycles = only_cycles && cycle;
        has_fact = has_fact || (r.head().size() == 1 && r.head().contains(q) && r.body().empty());
    }
    return only_cycles || has_fact || !has_cycle;
}

Program forget_fast(const Program& p, Atom q, ForgetTrace* trace) {
    if (!is_q_forgettable(p, q)) {
        throw std::invalid_argument("program is not " + q.name() + "-forgettable");
    }
    return run_forget(p, q, true, trace);
}

Program forget_each(const Program& p, const std::vector<Atom>& atoms) {
    Program cur = p;
    for (Atom a : atoms) cur = forget(cur, a);
    return cur;
}

}  // namespace fsp
