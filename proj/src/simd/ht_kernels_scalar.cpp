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

#include "fsp/simd/ht_kernels.hpp"

#include <cassert>

namespace fsp::simd {

void ht_check_scalar(const RuleMasks& rules, std::span<const std::uint64_t> here,
                     std::span<const std::uint64_t> there, std::span<std::uint8_t> out) {
    assert(here.size() == there.size() && out.size() >= there.size());
    const std::size_t n = rules.size();
    for (std::size_t i = 0; i < there.size(); ++i) {
        const std::uint64_t x = here[i], y = there[i];
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            // neg/nneg are evaluated in Y for both worlds (reduct by Y).
            const bool applies = (y & rules.neg[j]) == 0 && (y & rules.nneg[j]) == rules.nneg[j];
            if (!applies) continue;
            const std::uint64_t p = rules.pos[j], h = rules.head[j];
            if ((y & p) == p && (y & h) == 0) ok = false;
            else if ((x & p) == p && (x & h) == 0) ok = false;
        }
        out[i] = ok ? 1 : 0;
    }
}

}  // namespace fsp::simd
