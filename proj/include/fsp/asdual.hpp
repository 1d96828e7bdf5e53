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

#include <vector>

#include "fsp/core.hpp"

namespace fsp {

// Family of literal sets, each of which satisfies every input rule without
// relying on q: one `not l` for a body literal l of each falsified rule, or
// one `not not h` for a head atom h ≠ q of each rule satisfied by its head.
// Every member contains only Naf/NafNaf literals and never mentions q.
using AsDual = FlatSet<LiteralSet>;

// Input rules are expected in normal form. The empty rule set yields {∅};
// a rule with nothing but q (e.g. the fact q.) yields ∅.
AsDual as_dual(Atom q, const std::vector<Rule>& rules);

// Options a single rule contributes to the dual: not(B∖q) ∪ not not(H∖q).
std::vector<BodyLiteral> dual_choices(Atom q, const Rule& r);

}  // namespace fsp
