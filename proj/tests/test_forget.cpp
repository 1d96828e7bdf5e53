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

#include "doctest.h"

#include <set>

#include "fsp/forget.hpp"
#include "fsp/harness.hpp"
#include "fsp/normalform.hpp"
#include "fsp/semantic.hpp"
#include "oracles.hpp"

using namespace fsp;
using oracle::P;

namespace {

const Atom q("q");

std::set<std::string> tags(const ForgetTrace& t) {
    std::set<std::string> out;
    for (const auto& e : t) out.insert(e.tag);
    return out;
}

}  // namespace

TEST_CASE("worked examples") {
    CHECK(forget(P("t :- q. v :- not q. q :- s. q :- w."), q) == P("t :- s. t :- w. v :- not s, not w."));
    CHECK(forget(P("v :- not q. q :- s, t. q | u :- w."), q) ==
          P("v :- not s, not w. v :- not s, not not u. v :- not t, not w. v :- not t, not not u."
            "u :- w, not s, not not u. u :- w, not t, not not u."));
    CHECK(forget(P("q :- not not q. a :- q."), q) == P("a :- not not a."));
    CHECK(forget(P("q :- not not q. u :- q. s :- q. t :- not q."), q) ==
          P("u :- not t. s :- not t. t :- not u. t :- not s."
            "u :- not not u, not not s. s :- not not s, not not u. t :- not not t."));
    CHECK(forget(P("q :- s. q | u :- r. t :- q. v :- not q."), q) ==
          P("t :- s. t | u :- r. u :- r, not s, not not u. v :- not s, not not u. v :- not s, not r."));
}

TEST_CASE("introduction example is close to the obvious answer") {
    const Program r = forget(P("d :- not c. a :- q. q :- b."), q);
    CHECK(strongly_equivalent(r, P("d :- not c. a :- b.")));
}

TEST_CASE("partition") {
    const Partition pt = partition(P("a. b :- q. c :- not q. d :- not not q. q :- not not q, e. q | f :- g."), q);
    CHECK(pt.plain.size() == 1);
    CHECK(pt.r0.size() == 1);
    CHECK(pt.r1.size() == 1);
    CHECK(pt.r2.size() == 1);
    CHECK(pt.r3.size() == 1);
    CHECK(pt.r4.size() == 1);
    CHECK_THROWS_AS(partition(P("a :- a."), q), std::invalid_argument);
}

TEST_CASE("forgetting an absent atom normalizes only") {
    const Program p = P("a :- b, c. a :- b. x | y :- not z.");
    CHECK(forget(p, q) == normal_form(p));
}

TEST_CASE("trace records every family that fires") {
    ForgetTrace t;
    forget(P("q :- not not q. u :- q. s :- q. t :- not q."), q, &t);
    CHECK(tags(t) == std::set<std::string>{"2a", "3a", "5", "6"});
    CHECK(std::any_of(t.begin(), t.end(), [](const TraceEntry& e) { return e.kept; }));

    ForgetTrace t1;
    forget(P("t :- q. v :- not q. q :- s. q :- w."), q, &t1);
    CHECK(tags(t1) == std::set<std::string>{"1a", "4"});
    for (const auto& e : t1) {
        CHECK(e.kept);
        CHECK_FALSE(e.produced.mentions(q));
    }
}

TEST_CASE("q-forgettable class") {
    CHECK(is_q_forgettable(P("t :- q. v :- not q. q :- s."), q));
    CHECK(is_q_forgettable(P("q :- not not q."), q));
    CHECK(is_q_forgettable(P("q. q :- not not q. a :- q."), q));
    CHECK_FALSE(is_q_forgettable(P("q :- not not q. a :- q."), q));
    CHECK_THROWS_AS(forget_fast(P("q :- not not q. a :- q."), q), std::invalid_argument);
    CHECK(forget_fast(P("t :- q. v :- not q. q :- s. q :- w."), q) == P("t :- s. t :- w. v :- not s, not w."));
}

TEST_CASE("iterated forgetting runs left to right") {
    const Program p = P("a :- q. q :- r. r :- b.");
    CHECK(forget_each(p, {q, Atom("r")}) == P("a :- b."));
    CHECK(forget_each(p, {}) == p);
}

TEST_CASE("properties over a random corpus") {
    CorpusSpec spec;
    spec.count = 600;
    spec.seed = 21;
    for (const auto& np : generate_corpus(spec)) {
        const Program& p = np.program;
        CAPTURE(print_program(p));
        const Program f = forget(p, q);
        CHECK_FALSE(f.signature().contains(q));
        CHECK(is_normal_form(f));
        AtomSet rest = p.signature();
        rest.erase(q);
        CHECK(f.signature() == rest);
        CHECK(oracle::as_pairs(ht_models(f, rest)) == oracle::target_models(p, q));
        if (is_q_forgettable(p, q)) {
            CHECK(forget_fast(p, q) == f);
            CHECK_FALSE(satisfies_omega(p, AtomSet{q}));
        }
    }
}

TEST_CASE("rules on fresh atoms pass through unchanged") {
    CorpusSpec spec;
    spec.count = 100;
    spec.seed = 4;
    const Program extra = P("x1 :- y1, not z1. z1 | y1 :- not not x1. :- x1, y1.");
    for (const auto& np : generate_corpus(spec)) {
        CAPTURE(print_program(np.program));
        const Program base = forget(np.program, q);
        // The empty rule subsumes every other rule, so it absorbs R as well.
        const Program expected = base.contains(Rule()) ? base : (base | extra);
        CHECK(forget(np.program | extra, q) == expected);
    }
}
