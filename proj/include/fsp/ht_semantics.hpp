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
#include <stdexcept>
#include <vector>

#include "fsp/core.hpp"

namespace fsp {

namespace simd {
struct RuleMasks;
}

// Raised when an exhaustive enumeration would exceed the configured ceiling.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Largest signature the brute-force oracles accept. Defaults to 12, or the
// value of FSP_ENUM_LIMIT when set. Hard ceiling is 62 (bitmask width).
std::size_t enumeration_limit();
void set_enumeration_limit(std::size_t n);
void check_enumeration_limit(std::size_t n);

using Mask = std::uint64_t;

// Ordered atom list giving each atom a bit position. Position order equals
// atom order, so mask order on singletons matches name order.
class Signature {
public:
    Signature() = default;
    explicit Signature(AtomSet atoms);

    const AtomSet& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    Mask full() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }

    // Bits of the atoms of `s` that belong to this signature.
    Mask mask_of(const AtomSet& s) const;
    AtomSet set_of(Mask m) const;
    int index_of(Atom a) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    AtomSet atoms_;
};

// Re-expresses `m` (over `from`) over `to`, dropping atoms absent from `to`.
Mask project(Mask m, const Signature& from, const Signature& to);

struct HTInterpretation {
    Mask here = 0;   // X
    Mask there = 0;  // Y, with X ⊆ Y

    friend bool operator==(const HTInterpretation&, const HTInterpretation&) = default;
    friend auto operator<=>(const HTInterpretation& a, const HTInterpretation& b) {
        if (auto c = a.there <=> b.there; c != 0) return c;
        return a.here <=> b.here;
    }
};

// Set of HT-interpretations over a fixed signature, sorted by (Y, X).
class HTModelSet {
public:
    HTModelSet() = default;
    HTModelSet(Signature sigma, std::vector<HTInterpretation> members);

    const Signature& sigma() const { return sigma_; }
    const std::vector<HTInterpretation>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(HTInterpretation i) const;
    bool contains(const AtomSet& x, const AtomSet& y) const {
        return contains({sigma_.mask_of(x), sigma_.mask_of(y)});
    }

    friend bool operator==(const HTModelSet&, const HTModelSet&) = default;

private:
    Signature sigma_;
    std::vector<HTInterpretation> members_;
};

// P^I = { H(r) <- B+(r) : nbody(r) ∩ I = ∅, nnbody(r) ⊆ I }.
Program reduct(const Program& p, const AtomSet& interpretation);

bool classically_satisfies(const AtomSet& y, const Rule& r);
bool ht_satisfies(const AtomSet& x, const AtomSet& y, const Rule& r);

// All HT-models over `sigma`. `sigma` must include Σ(P).
HTModelSet ht_models(const Program& p, const AtomSet& sigma);
inline HTModelSet ht_models(const Program& p) { return ht_models(p, p.signature()); }

// Answer sets in lexicographic order. Atoms outside Σ(P) never occur in an
// answer set, so the result does not depend on any widening.
std::vector<AtomSet> answer_sets(const Program& p);

// Answer sets of precompiled rules over `sigma`, as sorted masks.
std::vector<Mask> answer_set_masks(const simd::RuleMasks& rules, const Signature& sigma);

// HT(P1) = HT(P2) over Σ(P1) ∪ Σ(P2) ∪ extra.
bool strongly_equivalent(const Program& p1, const Program& p2, const AtomSet& extra = {});
// AS(P1) = AS(P2).
bool weakly_equivalent(const Program& p1, const Program& p2);

std::vector<AtomSet> v_exclusion(const std::vector<AtomSet>& sets, const AtomSet& v);
// Result signature is sigma ∖ V.
HTModelSet v_exclusion(const HTModelSet& models, const AtomSet& v);

// Per-there-world listing of HT-models over a signature: for each Y (as a
// mask), the sorted list of X with ⟨X,Y⟩ ⊨ P. Empty when Y ⊭ P.
class HTTable {
public:
    HTTable(const Program& p, const Signature& sigma);

    const Signature& sigma() const { return sigma_; }
    bool is_model(Mask x, Mask y) const;
    bool is_total_model(Mask y) const { return !here_by_there_[y].empty(); }
    const std::vector<Mask>& heres(Mask y) const { return here_by_there_[y]; }
    HTModelSet to_model_set() const;

private:
    Signature sigma_;
    std::vector<std::vector<Mask>> here_by_there_;
};

}  // namespace fsp
