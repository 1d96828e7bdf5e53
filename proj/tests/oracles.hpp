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

// Brute-force reference implementations used as test oracles. They work on
// plain atom sets and share no code with the bitmask machinery of the library.

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "fsp/core.hpp"
#include "fsp/ht_semantics.hpp"
#include "fsp/parser_io.hpp"

namespace oracle {

using fsp::AtomSet;
using fsp::Program;
using fsp::Rule;
using HTPair = std::pair<AtomSet, AtomSet>;  // (X, Y)

inline Program P(std::string_view text) { return fsp::parse_program(text); }

inline std::vector<AtomSet> subsets(const AtomSet& s) {
    std::vector<fsp::Atom> items(s.begin(), s.end());
    std::vector<AtomSet> out;
    const std::size_t n = items.size();
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        std::vector<fsp::Atom> pick;
        for (std::size_t i = 0; i < n; ++i) {
            if (m >> i & 1) pick.push_back(items[i]);
        }
        out.emplace_back(std::move(pick));
    }
    return out;
}

inline bool body_true(const Rule& r, const AtomSet& pos_world, const AtomSet& neg_world) {
    for (auto a : r.pos()) {
        if (!pos_world.contains(a)) return false;
    }
    for (auto a : r.neg()) {
        if (neg_world.contains(a)) return false;
    }
    for (auto a : r.nneg()) {
        if (!neg_world.contains(a)) return false;
    }
    return true;
}

inline bool head_true(const Rule& r, const AtomSet& w) {
    for (auto a : r.head()) {
        if (w.contains(a)) return true;
    }
    return false;
}

// Y ⊨ r classically.
inline bool models(const AtomSet& y, const Rule& r) { return !body_true(r, y, y) || head_true(r, y); }

inline bool models(const AtomSet& y, const Program& p) {
    return std::all_of(p.begin(), p.end(), [&](const Rule& r) { return models(y, r); });
}

// Gelfond-Lifschitz style reduct written out directly.
inline Program plain_reduct(const Program& p, const AtomSet& y) {
    Program out;
    for (const auto& r : p) {
        bool keep = true;
        for (auto a : r.neg()) keep = keep && !y.contains(a);
        for (auto a : r.nneg()) keep = keep && y.contains(a);
        if (keep) out.insert(Rule(r.head(), r.pos()));
    }
    return out;
}

inline bool ht_model(const AtomSet& x, const AtomSet& y, const Program& p) {
    return x.subset_of(y) && models(y, p) && models(x, plain_reduct(p, y));
}

inline std::set<HTPair> ht_models(const Program& p, const AtomSet& sigma) {
    std::set<HTPair> out;
    for (const auto& y : subsets(sigma)) {
        if (!models(y, p)) continue;
        const Program red = plain_reduct(p, y);
        for (const auto& x : subsets(y)) {
            if (models(x, red)) out.insert({x, y});
        }
    }
    return out;
}

inline std::set<AtomSet> answer_sets(const Program& p) {
    std::set<AtomSet> out;
    for (const auto& y : subsets(p.signature())) {
        if (!models(y, p)) continue;
        const Program red = plain_reduct(p, y);
        bool minimal = true;
        for (const auto& x : subsets(y)) {
            if (x != y && models(x, red)) minimal = false;
        }
        if (minimal) out.insert(y);
    }
    return out;
}

inline std::set<HTPair> as_pairs(const fsp::HTModelSet& m) {
    std::set<HTPair> out;
    for (const auto& i : m.members()) out.insert({m.sigma().set_of(i.here), m.sigma().set_of(i.there)});
    return out;
}

// Target HT-models for forgetting a single atom q, straight from the
// definitions of Rel^Y and R^{Y,A}.
inline std::set<HTPair> target_models(const Program& p, fsp::Atom q) {
    const AtomSet sigma = p.signature();
    AtomSet rest = sigma;
    rest.erase(q);
    const AtomSet qs{q};
    std::set<HTPair> out;
    for (const auto& y : subsets(rest)) {
        std::vector<AtomSet> rel;
        for (const AtomSet& a : {AtomSet{}, qs & sigma}) {
            const AtomSet ya = y | a;
            if (!ht_model(ya, ya, p)) continue;
            bool minimal = true;
            for (const auto& a2 : subsets(a)) {
                if (a2 != a && ht_model(y | a2, ya, p)) minimal = false;
            }
            if (minimal && std::find(rel.begin(), rel.end(), a) == rel.end()) rel.push_back(a);
        }
        if (rel.empty()) continue;
        for (const auto& x : subsets(y)) {
            bool everywhere = true;
            for (const auto& a : rel) {
                bool found = false;
                for (const auto& x2 : subsets(y | a)) {
                    if (x2 - qs == x && ht_model(x2, y | a, p)) found = true;
                }
                everywhere = everywhere && found;
            }
            if (everywhere) out.insert({x, y});
        }
    }
    return out;
}

// Minimum over all partial injective mappings, by exhaustive search.
inline std::size_t brute_distance(const Program& p1, const Program& p2) {
    const auto& l = p1.rules().items();
    const auto& r = p2.rules().items();
    auto sym = [](const auto& a, const auto& b) { return (a ^ b).size(); };
    std::vector<bool> used(r.size(), false);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t acc) {
        if (acc >= best) return;
        if (i == l.size()) {
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (!used[j]) acc += r[j].size();
            }
            best = std::min(best, acc);
            return;
        }
        go(i + 1, acc + l[i].size());
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            go(i + 1, acc + sym(l[i].head(), r[j].head()) + sym(l[i].body(), r[j].body()));
            used[j] = false;
        }
    };
    go(0, 0);
    return best;
}

}  // namespace oracle
