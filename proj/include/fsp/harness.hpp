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

#include <cstdint>
#include <string>
#include <vector>

#include "fsp/core.hpp"

namespace fsp {

struct CorpusSpec {
    std::size_t max_atoms = 4;  // atom pool is q, a, b, c, ... (q always first)
    std::size_t max_rules = 5;
    std::size_t max_body = 3;
    bool allow_disjunction = true;
    bool allow_double_negation = true;
    std::uint64_t seed = 1;
    std::size_t count = 0;  // random programs after the golden ones
};

struct NamedProgram {
    std::string name;
    Program program;
};

// Worked examples used throughout the test suites. Each one forgets `q`.
std::vector<NamedProgram> golden_corpus();

// Golden programs followed by `spec.count` pseudorandom programs. Identical
// specs give identical sequences.
std::vector<NamedProgram> generate_corpus(const CorpusSpec& spec);

// Bounded stand-in for "every program R over sigma":
//   depth 0: every set of facts over sigma
//   depth 1: plus every single normal rule with at most two body literals
//   depth 2: plus every pair of such rules
// Throws GuardError if the family would exceed `max_contexts`.
std::vector<Program> enumerate_contexts(const AtomSet& sigma, int depth, std::size_t max_contexts = 250000);

struct SPFailure {
    Program context;
    std::vector<AtomSet> expected;  // AS(P ∪ R) with q removed
    std::vector<AtomSet> actual;    // AS(forget(P,q) ∪ R)
};

struct SPReport {
    std::string instance;
    Atom forgotten{"q"};
    bool omega = false;  // Ω holds: only inclusion is demanded
    std::size_t contexts_checked = 0;
    std::vector<SPFailure> failures;

    bool ok() const { return failures.empty(); }
};

struct SPOptions {
    int depth = 1;
    bool accept_exponential = false;  // lifts the |Σ(P)| ≤ 6 guard
};

// Compares AS(forget(P,q) ∪ R) with AS(P ∪ R) minus q for every context R:
// equality when Ω fails, superset when it holds.
SPReport verify_sp(const Program& p, Atom q, const SPOptions& opts = {}, std::string instance = {});

// HT(forget(P,q)) over Σ(P)∖{q} equals the target model set of the class.
bool oracle_agrees(const Program& p, Atom q);

std::string sp_report_to_json(const std::vector<SPReport>& reports);

}  // namespace fsp
