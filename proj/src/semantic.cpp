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

#include "fsp/semantic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsp {
namespace {

template <class F>
void for_each_submask(Mask m, F&& f) {
    for (Mask s = m;; s = (s - 1) & m) {
        f(s);
        if (s == 0) break;
    }
}

using MaskFamily = std::vector<Mask>;  // sorted, unique

class Analysis {
public:
    Analysis(const Program& p, const AtomSet& v)
        : sigma_(p.signature()), vmask_(sigma_.mask_of(v)), table_(p, sigma_) {}

    const Signature& sigma() const { return sigma_; }
    Mask vmask() const { return vmask_; }
    Mask rest() const { return sigma_.full() & ~vmask_; }

    std::vector<Mask> rel(Mask y) const {
        std::vector<Mask> out;
        for_each_submask(vmask_, [&](Mask a) {
            const Mask ya = y | a;
            if (!table_.is_total_model(ya)) return;
            bool minimal = true;
            for_each_submask(a, [&](Mask a2) {
                if (a2 != a && table_.is_model(y | a2, ya)) minimal = false;
            });
            if (minimal) out.push_back(a);
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    MaskFamily family(Mask y, Mask a) const {
        MaskFamily out;
        for (Mask x : table_.heres(y | a)) out.push_back(x & ~vmask_);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    Signature sigma_;
    Mask vmask_;
    HTTable table_;
};

bool includes(const MaskFamily& big, const MaskFamily& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

FlatSet<AtomSet> to_sets(const MaskFamily& f, const Signature& sigma) {
    std::vector<AtomSet> out;
    for (Mask m : f) out.push_back(sigma.set_of(m));
    return FlatSet<AtomSet>(std::move(out));
}

void require_disjoint(const AtomSet& y, const AtomSet& v) {
    if (y.intersects(v)) throw std::invalid_argument("Y must not contain forgotten atoms");
}

}  // namespace

std::vector<AtomSet> rel_sets(const Program& p, const AtomSet& v, const AtomSet& y) {
    require_disjoint(y, v);
    const Analysis an(p, v);
    std::vector<AtomSet> out;
    for (Mask a : an.rel(an.sigma().mask_of(y))) out.push_back(an.sigma().set_of(a));
    std::sort(out.begin(), out.end());
    return out;
}

FlatSet<AtomSet> r_family(const Program& p, const AtomSet& v, const AtomSet& y, const AtomSet& a) {
    require_disjoint(y, v);
    const Analysis an(p, v);
    return to_sets(an.family(an.sigma().mask_of(y), an.sigma().mask_of(a)), an.sigma());
}

OmegaReport omega_report(const Program& p, const AtomSet& v) {
    const Analysis an(p, v);
    OmegaReport report;
    report.forgotten = v;
    std::vector<Mask> ys;
    for_each_submask(an.rest(), [&](Mask y) { ys.push_back(y); });
    std::sort(ys.begin(), ys.end());
    for (Mask y : ys) {
        OmegaCandidate cand;
        cand.y = an.sigma().set_of(y);
        std::vector<MaskFamily> fams;
        for (Mask a : an.rel(y)) {
            const AtomSet aset = an.sigma().set_of(a);
            cand.rel.push_back(aset);
            MaskFamily f = an.family(y, a);
            cand.families[aset] = to_sets(f, an.sigma());
            fams.push_back(std::move(f));
        }
        std::sort(cand.rel.begin(), cand.rel.end());
        std::sort(fams.begin(), fams.end());
        fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
        cand.has_least = std::any_of(fams.begin(), fams.end(), [&](const MaskFamily& f) {
            return std::all_of(fams.begin(), fams.end(), [&](const MaskFamily& g) { return includes(g, f); });
        });
        cand.witnesses = !fams.empty() && !cand.has_least;
        if (cand.witnesses && !report.satisfied) {
            report.satisfied = true;
            report.witness = cand.y;
        }
        report.candidates.push_back(std::move(cand));
    }
    return report;
}

HTModelSet fsp_target_models(const Program& p, const AtomSet& v) {
    const Analysis an(p, v);
    const Signature target(an.sigma().atoms() - v);
    std::vector<HTInterpretation> out;
    for_each_submask(an.rest(), [&](Mask y) {
        const auto rel = an.rel(y);
        if (rel.empty()) return;
        MaskFamily common = an.family(y, rel.front());
        for (std::size_t i = 1; i < rel.size() && !common.empty(); ++i) {
            const MaskFamily f = an.family(y, rel[i]);
            MaskFamily next;
            std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
            common = std::move(next);
        }
        const Mask ty = project(y, an.sigma(), target);
        for (Mask x : common) out.push_back({project(x, an.sigma(), target), ty});
    });
    return HTModelSet(target, std::move(out));
}

Program counter_model_program(const HTModelSet& models) {
    const Signature& sigma = models.sigma();
    const Mask full = sigma.full();
    std::vector<Rule> rules;
    for (Mask y = 0;; ++y) {
        const AtomSet ys = sigma.set_of(y);
        const AtomSet outside = sigma.set_of(full & ~y);
        if (!models.contains({y, y})) {
            rules.emplace_back(AtomSet{}, ys, outside);
        } else {
            for_each_submask(y, [&](Mask x) {
                if (x == y || models.contains({x, y})) return;
                const AtomSet diff = sigma.set_of(y & ~x);
                rules.emplace_back(diff, sigma.set_of(x), outside, diff);
            });
        }
        if (y == full) break;
    }
    return Program(std::move(rules));
}

Program f_sem(const Program& p, const AtomSet& v) {
    const HTModelSet m = fsp_target_models(p, v);
    Program out = counter_model_program(m);
    out.widen(m.sigma().atoms());
    return out;
}

}  // namespace fsp
