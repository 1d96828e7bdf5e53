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

#include <immintrin.h>

#include <cassert>

#include "fsp/simd/ht_kernels.hpp"

namespace fsp::simd {

// Four interpretation pairs per iteration, one per 64-bit lane. The rule loop
// accumulates a per-lane violation mask; the tail falls back to scalar.
void ht_check_avx2(const RuleMasks& rules, std::span<const std::uint64_t> here,
                   std::span<const std::uint64_t> there, std::span<std::uint8_t> out) {
    assert(here.size() == there.size() && out.size() >= there.size());
    const std::size_t count = there.size();
    const std::size_t n = rules.size();
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(here.data() + i));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(there.data() + i));
        __m256i fail = zero;
        for (std::size_t j = 0; j < n; ++j) {
            const __m256i p = _mm256_set1_epi64x(static_cast<long long>(rules.pos[j]));
            const __m256i ng = _mm256_set1_epi64x(static_cast<long long>(rules.neg[j]));
            const __m256i nn = _mm256_set1_epi64x(static_cast<long long>(rules.nneg[j]));
            const __m256i h = _mm256_set1_epi64x(static_cast<long long>(rules.head[j]));

            const __m256i applies = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_and_si256(y, ng), zero),
                                                     _mm256_cmpeq_epi64(_mm256_and_si256(y, nn), nn));
            const __m256i body_y = _mm256_cmpeq_epi64(_mm256_and_si256(y, p), p);
            const __m256i head_y_false = _mm256_cmpeq_epi64(_mm256_and_si256(y, h), zero);
            const __m256i body_x = _mm256_cmpeq_epi64(_mm256_and_si256(x, p), p);
            const __m256i head_x_false = _mm256_cmpeq_epi64(_mm256_and_si256(x, h), zero);

            const __m256i viol = _mm256_or_si256(_mm256_and_si256(body_y, head_y_false),
                                                 _mm256_and_si256(body_x, head_x_false));
            fail = _mm256_or_si256(fail, _mm256_and_si256(applies, viol));
        }
        const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(fail));
        out[i + 0] = (bits & 1) ? 0 : 1;
        out[i + 1] = (bits & 2) ? 0 : 1;
        out[i + 2] = (bits & 4) ? 0 : 1;
        out[i + 3] = (bits & 8) ? 0 : 1;
    }
    if (i < count) ht_check_scalar(rules, here.subspan(i), there.subspan(i), out.subspan(i));
}

}  // namespace fsp::simd
