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

#include "fsp/core.hpp"

namespace fsp {

// Holds iff (i) no atom occurs in two body forms of one rule, (ii) no head
// atom occurs positively or under a single `not` in the body, and (iii) every
// rule is minimal.
bool is_normal_form(const Program& p);

// Strongly equivalent program in normal form. Steps run once, in order:
// drop tautological rules; drop a from B-- when a ∈ B+; drop a from H when
// a ∈ B-; drop non-minimal rules. Step three may leave a constraint.
Program normal_form(const Program& p);

}  // namespace fsp
