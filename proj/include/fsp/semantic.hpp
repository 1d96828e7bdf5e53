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

#include <map>
#include <optional>
#include <vector>

#include "fsp/core.hpp"
#include "fsp/ht_semantics.hpp"

namespace fsp {

// Ω bookkeeping for one candidate Y ⊆ Σ(P)∖V.
struct OmegaCandidate {
    AtomSet y;
    std::vector<AtomSet> rel;                         // Rel^Y
    std::map<AtomSet, FlatSet<AtomSet>> families;     // A ↦ R^{Y,A}
    bool has_least = false;                           // family set has a ⊆-least element
    bool witnesses = false;                           // non-empty and no least element
};

struct OmegaReport {
    AtomSet forgotten;
    std::vector<OmegaCandidate> candidates;
    bool satisfied = false;
    std::optional<AtomSet> witness;
};

// Rel^Y: the A ⊆ V with ⟨Y∪A,Y∪A⟩ ∈ HT(P) and no A' ⊂ A such that
// ⟨Y∪A',Y∪A⟩ ∈ HT(P). Y must avoid V.
std::vector<AtomSet> rel_sets(const Program& p, const AtomSet& v, const AtomSet& y);

// R^{Y,A} = { X∖V : ⟨X,Y∪A⟩ ∈ HT(P) }.
FlatSet<AtomSet> r_family(const Program& p, const AtomSet& v, const AtomSet& y, const AtomSet& a);

// Exhaustive over Y; exponential in |Σ(P)| and guarded accordingly.
OmegaReport omega_report(const Program& p, const AtomSet& v);
inline bool satisfies_omega(const Program& p, const AtomSet& v) { return omega_report(p, v).satisfied; }

// HT-models every operator of the strongly persistent class must produce,
// over Σ(P)∖V. A Y with empty Rel^Y contributes no models.
HTModelSet fsp_target_models(const Program& p, const AtomSet& v);

// Counter-model program realising fsp_target_models(P,V) over Σ' = Σ(P)∖V:
//   (Y∖X) <- X, not (Σ'∖Y), not not (Y∖X)  for ⟨X,Y⟩ ∉ M with ⟨Y,Y⟩ ∈ M
//   <- Y, not (Σ'∖Y)                        for ⟨Y,Y⟩ ∉ M
// No normalization is applied.
Program f_sem(const Program& p, const AtomSet& v);
Program counter_model_program(const HTModelSet& models);

}  // namespace fsp
