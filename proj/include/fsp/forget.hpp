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

#include <optional>
#include <string>
#include <vector>

#include "fsp/asdual.hpp"
#include "fsp/core.hpp"

namespace fsp {

// Classification of the rules of a normal-form program by how q occurs.
struct Partition {
    std::vector<Rule> plain;  // q ∉ Σ(r)
    std::vector<Rule> r0;     // q ∈ B+(r)
    std::vector<Rule> r1;     // q ∈ B-(r)
    std::vector<Rule> r2;     // q ∈ B--(r), q ∉ H(r)
    std::vector<Rule> r3;     // q ∈ B--(r), q ∈ H(r)   (self-cycle)
    std::vector<Rule> r4;     // q ∈ H(r),  q ∉ B--(r)
};

// Throws std::invalid_argument if `normal` is not in normal form.
Partition partition(const Program& normal, Atom q);

// One derivation step of the operator. `tag` is one of
// R, 1a, 2a, 3a, 1b, 2b, 3b, 4, 5, 6, 7.
struct TraceEntry {
    std::string tag;
    Rule produced;
    std::vector<Rule> sources;
    LiteralSet dual;                 // the as-dual member used, if any
    std::optional<Atom> head_choice; // h(·), if any
    bool kept = false;               // survived the closing normalization
};

using ForgetTrace = std::vector<TraceEntry>;

// Syntactic forgetting of a single atom. The result is in normal form, does
// not mention q, and has signature Σ(P)∖{q}. When `trace` is given, every
// generated rule is recorded there.
Program forget(const Program& p, Atom q, ForgetTrace* trace = nullptr);

// True iff, in NF(P), every rule mentioning q is a self-cycle, or the fact
// `q.` is present, or there is no self-cycle on q. One pass over the rules.
bool is_q_forgettable(const Program& p, Atom q);

// Same result as forget() for q-forgettable programs, built with families
// 1a, 1b and 4 only. Throws std::invalid_argument otherwise.
Program forget_fast(const Program& p, Atom q, ForgetTrace* trace = nullptr);

// Left-to-right iteration of forget(). Carries no persistence guarantee for
// the set as a whole.
Program forget_each(const Program& p, const std::vector<Atom>& atoms);

}  // namespace fsp
