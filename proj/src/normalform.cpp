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

#include "fsp/normalform.hpp"

#include <cassert>

namespace fsp {

bool is_normal_form(const Program& p) {
    for (const auto& r : p) {
        if (r.pos().intersects(r.neg()) || r.pos().intersects(r.nneg()) || r.neg().intersects(r.nneg())) return false;
        if (r.head().intersects(r.pos()) || r.head().intersects(r.neg())) return false;
        if (!is_minimal_in(r, p)) return false;
    }
    return true;
}

Program normal_form(const Program& p) {
    std::vector<Rule> stage;
    stage.reserve(p.size());
    for (const auto& r : p) {
        if (r.is_tautological()) continue;
        Rule s = r;
        if (s.nneg().intersects(s.pos())) s.set_nneg(s.nneg() - s.pos());
        if (s.head().intersects(s.neg())) s.set_head(s.head() - s.neg());
        stage.push_back(std::move(s));
    }
    const Program reduced(std::move(stage));

    std::vector<Rule> kept;
    kept.reserve(reduced.size());
    for (const auto& r : reduced) {
        if (is_minimal_in(r, reduced)) kept.push_back(r);
    }
    Program out(std::move(kept));
    out.widen(p.widening());
    assert(is_normal_form(out));
    return out;
}

}  // namespace fsp
