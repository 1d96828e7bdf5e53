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

#include <cstdlib>
#include <string>

#include "fsp/ht_semantics.hpp"
#include "fsp/simd/ht_kernels.hpp"

namespace fsp::simd {

RuleMasks compile_rules(const Program& p, const Signature& sigma) {
    RuleMasks m;
    for (const auto& r : p) {
        m.push_back(sigma.mask_of(r.head()), sigma.mask_of(r.pos()), sigma.mask_of(r.neg()), sigma.mask_of(r.nneg()));
    }
    return m;
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(FSP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

HTCheckFn ht_check_for(Isa isa) {
#if defined(FSP_HAVE_AVX2)
    if (isa == Isa::Avx2) return &ht_check_avx2;
#endif
    (void)isa;
    return &ht_check_scalar;
}

Isa active_isa() {
    static const Isa selected = [] {
        if (const char* env = std::getenv("FSP_SIMD"); env && std::string(env) == "scalar") return Isa::Scalar;
        return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return selected;
}

void ht_check(const RuleMasks& rules, std::span<const std::uint64_t> here, std::span<const std::uint64_t> there,
              std::span<std::uint8_t> out) {
    static const HTCheckFn fn = ht_check_for(active_isa());
    fn(rules, here, there, out);
}

}  // namespace fsp::simd
