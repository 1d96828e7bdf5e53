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

#include <cstddef>
#include <utility>
#include <vector>

#include "fsp/core.hpp"

namespace fsp {

// |H(r) ⊖ H(r')| + |B(r) ⊖ B(r')|, bodies compared as literal sets.
std::size_t rule_distance(const Rule& a, const Rule& b);
// |H(r)| + |B(r)|
std::size_t rule_size(const Rule& r);

struct ProgramDistance {
    std::size_t distance = 0;
    std::vector<std::pair<Rule, Rule>> mapping;  // matched pairs (left, right)
    std::vector<Rule> unmatched_left, unmatched_right;
};

// Minimum over partial injective mappings m: P1 → P2 of the matched rule
// distances plus the sizes of all unmatched rules on both sides. Solved
// exactly as a square assignment problem with dummy rows and columns.
ProgramDistance program_distance(const Program& p1, const Program& p2);

// Minimum-cost perfect matching on a square cost matrix. Returns, for each
// row, its assigned column.
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<long long>>& cost);

}  // namespace fsp
