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

#include "fsp/forget.hpp"
#include "fsp/harness.hpp"
#include "fsp/semantic.hpp"
#include "oracles.hpp"

using namespace fsp;
using oracle::P;

namespace {

const Atom q("q");
const AtomSet Q{q};

const char* const kChoice = "q :- not not q. u :- q. s :- q. t :- not q.";
const char* const kIntro = "d :- not c. a :- q. q :- b.";
const char* const kFinal = "q :- s. q | u :- r. t :- q. v :- not q.";

// Number of HT-interpretations over sigma outside `m`, each of which yields
// one counter-model rule.
std::size_t counter_models(const std::set<oracle::HTPair>& m, const AtomSet& sigma) {
    std::size_t n = 0;
    for (const auto& y : oracle::subsets(sigma)) {
        if (!m.count({y, y})) {
            ++n;
            continue;
        }
        for (const auto& x : oracle::subsets(y)) {
            if (x != y && !m.count({x, y})) ++n;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("omega on the choice example") {
    const OmegaReport r = omega_report(P(kChoice), Q);
    CHECK(r.satisfied);
    REQUIRE(r.witness);
    CHECK(*r.witness == atoms({"s", "t", "u"}));
    CHECK(rel_sets(P(kChoice), Q, atoms({"s", "t", "u"})) == std::vector<AtomSet>{{}, Q});
    CHECK(r_family(P(kChoice), Q, atoms({"s", "t", "u"}), Q) ==
          FlatSet<AtomSet>{atoms({"s", "t", "u"}), atoms({"s", "u"})});
}

TEST_CASE("omega fails on the simple choice example") {
    const OmegaReport r = omega_report(P("q :- not not q. a :- q."), Q);
    CHECK_FALSE(r.satisfied);
    CHECK_FALSE(r.witness);
    CHECK(r.candidates.size() == 2);
    CHECK_THROWS_AS(rel_sets(P(kChoice), Q, Q), std::invalid_argument);
}

TEST_CASE("target models with empty Rel contribute nothing") {
    // {q.} forces q: no Y over ∅ has a relevant extension other than {q}.
    CHECK(fsp_target_models(P("q."), Q).size() == 1);
    CHECK(fsp_target_models(P(":- a. :- not a."), Q).size() == 0);
    CHECK(fsp_target_models(P("a."), Q) == ht_models(P("a.")));
}

TEST_CASE("target models match the set-based oracle") {
    CorpusSpec spec;
    spec.count = 300;
    spec.seed = 17;
    for (const auto& np : generate_corpus(spec)) {
        CAPTURE(print_program(np.program));
        CHECK(oracle::as_pairs(fsp_target_models(np.program, Q)) == oracle::target_models(np.program, q));
    }
}

TEST_CASE("counter-model program realises any HT-model set") {
    CorpusSpec spec;
    spec.count = 150;
    spec.seed = 8;
    for (const auto& np : generate_corpus(spec)) {
        const HTModelSet m = ht_models(np.program);
        const Program c = counter_model_program(m);
        CHECK(ht_models(c, m.sigma().atoms()) == m);
    }
}

TEST_CASE("f_sem emits one rule per counter-model without normalizing") {
    for (const char* text : {kIntro, kFinal, kChoice}) {
        const Program p = P(text);
        AtomSet rest = p.signature();
        rest.erase(q);
        const Program fs = f_sem(p, Q);
        CHECK(fs.size() == counter_models(oracle::target_models(p, q), rest));
        CHECK(fs.signature() == rest);
        CHECK(strongly_equivalent(fs, forget(p, q), rest));
    }
    // the two worked instances
    CHECK(f_sem(P(kIntro), Q).size() == 21);
    CHECK(f_sem(P(kFinal), Q).size() == 76);
    CHECK(f_sem(P("a :- not not a."), Q) == P("a :- not not a."));
    CHECK(f_sem(P("a :- not b, not not b."), Q).empty());
}

TEST_CASE("f_sem rule size floor and per-rule blow-up") {
    CorpusSpec spec;
    spec.count = 200;
    spec.seed = 23;
    for (const auto& np : generate_corpus(spec)) {
        AtomSet rest = np.program.signature();
        rest.erase(q);
        for (const auto& r : f_sem(np.program, Q)) CHECK(r.size() >= rest.size());
    }
    for (const auto& np : golden_corpus()) {
        AtomSet rest = np.program.signature();
        rest.erase(q);
        const std::size_t sem = f_sem(np.program, Q).size();
        for (const auto& r : forget(np.program, q)) {
            const std::size_t d = std::min(r.head().size(), (rest - r.atoms()).size());
            CAPTURE(np.name);
            CHECK(sem >= (std::size_t{1} << d));
        }
    }
}
