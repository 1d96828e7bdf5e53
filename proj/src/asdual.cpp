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

#include "fsp/asdual.hpp"

namespace fsp {

std::vector<BodyLiteral> dual_choices(Atom q, const Rule& r) {
    std::vector<BodyLiteral> out;
    for (const auto& l : r.body()) {
        if (l.atom != q) out.push_back(l.negated());
    }
    for (Atom h : r.head()) {
        if (h != q) out.push_back(BodyLiteral::nafnaf(h));
    }
    return out;
}

AsDual as_dual(Atom q, const std::vector<Rule>& rules) {
    // A partition ⟨F,T⟩ plus a choice per rule is the same as picking one
    // option per rule from the union of its F- and T-options.
    std::vector<LiteralSet> acc{LiteralSet{}};
    for (const auto& r : rules) {
        const auto choices = dual_choices(q, r);
        std::vector<LiteralSet> next;
        next.reserve(acc.size() * choices.size());
        for (const auto& partial : acc) {
            for (const auto& c : choices) {
                LiteralSet s = partial;
                s.insert(c);
                next.push_back(std::move(s));
            }
        }
        acc = AsDual(std::move(next)).items();
        if (acc.empty()) break;
    }
    return AsDual(std::move(acc));
}

}  // namespace fsp
