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

#include "fsp/ht_semantics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "fsp/simd/ht_kernels.hpp"

namespace fsp {
namespace {

constexpr std::size_t kHardCeiling = 62;

std::size_t initial_limit() {
    if (const char* env = std::getenv("FSP_ENUM_LIMIT")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kHardCeiling);
    }
    return 12;
}

std::atomic<std::size_t>& limit_slot() {
    static std::atomic<std::size_t> slot{initial_limit()};
    return slot;
}

}  // namespace

std::size_t enumeration_limit() { return limit_slot().load(); }
void set_enumeration_limit(std::size_t n) { limit_slot().store(std::min(n, kHardCeiling)); }

void check_enumeration_limit(std::size_t n) {
    if (n > enumeration_limit()) {
        throw GuardError("signature of " + std::to_string(n) + " atoms exceeds the enumeration limit of " +
                         std::to_string(enumeration_limit()) + " (raise FSP_ENUM_LIMIT to override)");
    }
}

Signature::Signature(AtomSet atoms) : atoms_(std::move(atoms)) {
    if (atoms_.size() > kHardCeiling) throw GuardError("signature too large for bitmask encoding");
}

int Signature::index_of(Atom a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end() || *it != a) return -1;
    return static_cast<int>(it - atoms_.begin());
}

Mask Signature::mask_of(const AtomSet& s) const {
    Mask m = 0;
    for (Atom a : s) {
        if (int i = index_of(a); i >= 0) m |= Mask{1} << i;
    }
    return m;
}

AtomSet Signature::set_of(Mask m) const {
    std::vector<Atom> out;
    while (m) {
        const int i = std::countr_zero(m);
        out.push_back(atoms_[static_cast<std::size_t>(i)]);
        m &= m - 1;
    }
    return AtomSet(std::move(out));
}

Mask project(Mask m, const Signature& from, const Signature& to) {
    Mask out = 0;
    while (m) {
        const int i = std::countr_zero(m);
        if (int j = to.index_of(from.atoms()[static_cast<std::size_t>(i)]); j >= 0) out |= Mask{1} << j;
        m &= m - 1;
    }
    return out;
}

HTModelSet::HTModelSet(Signature sigma, std::vector<HTInterpretation> members)
    : sigma_(std::move(sigma)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool HTModelSet::contains(HTInterpretation i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

Program reduct(const Program& p, const AtomSet& interpretation) {
    Program out;
    for (const auto& r : p) {
        if (!r.neg().intersects(interpretation) && r.nneg().subset_of(interpretation)) {
            out.insert(Rule(r.head(), r.pos()));
        }
    }
    return out;
}

bool classically_satisfies(const AtomSet& y, const Rule& r) {
    const bool body = r.pos().subset_of(y) && !r.neg().intersects(y) && r.nneg().subset_of(y);
    return !body || r.head().intersects(y);
}

bool ht_satisfies(const AtomSet& x, const AtomSet& y, const Rule& r) {
    if (!classically_satisfies(y, r)) return false;
    if (r.neg().intersects(y) || !r.nneg().subset_of(y)) return true;
    return !r.pos().subset_of(x) || r.head().intersects(x);
}

HTTable::HTTable(const Program& p, const Signature& sigma) : sigma_(sigma) {
    check_enumeration_limit(sigma.size());
    if (!p.signature().subset_of(sigma.atoms())) {
        throw std::invalid_argument("HT enumeration signature must contain the program signature");
    }
    const simd::RuleMasks rules = simd::compile_rules(p, sigma);
    const std::size_t worlds = std::size_t{1} << sigma.size();
    here_by_there_.assign(worlds, {});

    std::vector<Mask> there(worlds);
    for (std::size_t y = 0; y < worlds; ++y) there[y] = y;
    std::vector<std::uint8_t> total(worlds);
    simd::ht_check(rules, there, there, total);

    std::vector<Mask> xs, ys;
    std::vector<std::uint8_t> ok;
    for (std::size_t yi = 0; yi < worlds; ++yi) {
        if (!total[yi]) continue;
        const Mask y = yi;
        xs.clear();
        for (Mask x = y;; x = (x - 1) & y) {
            xs.push_back(x);
            if (x == 0) break;
        }
        ys.assign(xs.size(), y);
        ok.resize(xs.size());
        simd::ht_check(rules, xs, ys, ok);
        auto& dst = here_by_there_[yi];
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (ok[k]) dst.push_back(xs[k]);
        }
        std::sort(dst.begin(), dst.end());
    }
}

bool HTTable::is_model(Mask x, Mask y) const {
    const auto& v = here_by_there_[y];
    return std::binary_search(v.begin(), v.end(), x);
}

HTModelSet HTTable::to_model_set() const {
    std::vector<HTInterpretation> out;
    for (std::size_t y = 0; y < here_by_there_.size(); ++y) {
        for (Mask x : here_by_there_[y]) out.push_back({x, y});
    }
    return HTModelSet(sigma_, std::move(out));
}

HTModelSet ht_models(const Program& p, const AtomSet& sigma) {
    return HTTable(p, Signature(sigma)).to_model_set();
}

std::vector<AtomSet> answer_sets(const Program& p) {
    const Signature sigma(p.signature());
    const HTTable table(p, sigma);
    std::vector<AtomSet> out;
    for (Mask y = 0; y <= sigma.full(); ++y) {
        // ⟨Y,Y⟩ is always listed for a total model, so a singleton means minimal.
        if (table.heres(y).size() == 1) out.push_back(sigma.set_of(y));
        if (y == sigma.full()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> answer_set_masks(const simd::RuleMasks& rules, const Signature& sigma) {
    check_enumeration_limit(sigma.size());
    const std::size_t worlds = std::size_t{1} << sigma.size();
    std::vector<Mask> there(worlds);
    for (std::size_t y = 0; y < worlds; ++y) there[y] = y;
    std::vector<std::uint8_t> total(worlds);
    simd::ht_check(rules, there, there, total);

    std::vector<Mask> out, xs, ys;
    std::vector<std::uint8_t> ok;
    for (std::size_t yi = 0; yi < worlds; ++yi) {
        if (!total[yi]) continue;
        const Mask y = yi;
        xs.clear();
        if (y != 0) {
            for (Mask x = (y - 1) & y;; x = (x - 1) & y) {
                xs.push_back(x);
                if (x == 0) break;
            }
        }
        ys.assign(xs.size(), y);
        ok.resize(xs.size());
        simd::ht_check(rules, xs, ys, ok);
        if (std::none_of(ok.begin(), ok.end(), [](std::uint8_t b) { return b != 0; })) out.push_back(y);
    }
    return out;
}

bool strongly_equivalent(const Program& p1, const Program& p2, const AtomSet& extra) {
    const AtomSet sigma = p1.signature() | p2.signature() | extra;
    return ht_models(p1, sigma) == ht_models(p2, sigma);
}

bool weakly_equivalent(const Program& p1, const Program& p2) { return answer_sets(p1) == answer_sets(p2); }

std::vector<AtomSet> v_exclusion(const std::vector<AtomSet>& sets, const AtomSet& v) {
    std::vector<AtomSet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s - v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HTModelSet v_exclusion(const HTModelSet& models, const AtomSet& v) {
    const Signature to(models.sigma().atoms() - v);
    std::vector<HTInterpretation> out;
    out.reserve(models.size());
    for (const auto& m : models.members()) {
        out.push_back({project(m.here, models.sigma(), to), project(m.there, models.sigma(), to)});
    }
    return HTModelSet(to, std::move(out));
}

}  // namespace fsp
