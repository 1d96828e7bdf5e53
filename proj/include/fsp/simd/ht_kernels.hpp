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
#include <span>
#include <string_view>
#include <vector>

#include "fsp/core.hpp"

namespace fsp {
class Signature;
}

namespace fsp::simd {

// Rule set flattened to structure-of-arrays bitmasks over a signature.
struct RuleMasks {
    std::vector<std::uint64_t> head, pos, neg, nneg;

    std::size_t size() const { return head.size(); }
    void push_back(std::uint64_t h, std::uint64_t p, std::uint64_t n, std::uint64_t nn) {
        head.push_back(h);
        pos.push_back(p);
        neg.push_back(n);
        nneg.push_back(nn);
    }
};

RuleMasks compile_rules(const Program& p, const Signature& sigma);

// out[i] = 1 iff ⟨here[i], there[i]⟩ satisfies every rule, i.e. there[i]
// classically models the rules and here[i] models their reduct by there[i].
// Passing here == there checks classical satisfaction.
using HTCheckFn = void (*)(const RuleMasks& rules, std::span<const std::uint64_t> here,
                           std::span<const std::uint64_t> there, std::span<std::uint8_t> out);

void ht_check_scalar(const RuleMasks& rules, std::span<const std::uint64_t> here,
                     std::span<const std::uint64_t> there, std::span<std::uint8_t> out);
#if defined(FSP_HAVE_AVX2)
void ht_check_avx2(const RuleMasks& rules, std::span<const std::uint64_t> here,
                   std::span<const std::uint64_t> there, std::span<std::uint8_t> out);
#endif

enum class Isa { Scalar, Avx2 };

// Best variant supported by this CPU, unless FSP_SIMD=scalar forces the
// reference kernel.
Isa active_isa();
bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);
HTCheckFn ht_check_for(Isa isa);

void ht_check(const RuleMasks& rules, std::span<const std::uint64_t> here, std::span<const std::uint64_t> there,
              std::span<std::uint8_t> out);

}  // namespace fsp::simd
