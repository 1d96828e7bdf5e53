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

#include "fsp/harness.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"

#include "fsp/forget.hpp"
#include "fsp/ht_semantics.hpp"
#include "fsp/parser_io.hpp"
#include "fsp/semantic.hpp"
#include "fsp/simd/ht_kernels.hpp"

namespace fsp {
namespace {

constexpr std::size_t kSpAtomGuard = 6;

const char* const kAtomPool[] = {"q", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"};

Rule random_rule(std::mt19937_64& rng, const std::vector<Atom>& pool, const CorpusSpec& spec) {
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    const Atom q = pool.front();
    // Self-cycles are rare under uniform sampling but drive every hard case.
    if (spec.allow_double_negation && pick(100) < 12) {
        std::vector<BodyLiteral> body{BodyLiteral::nafnaf(q)};
        const std::size_t extra = pick(std::min<std::size_t>(spec.max_body, 2) + 1);
        for (std::size_t i = 0; i < extra; ++i) {
            body.push_back({static_cast<LiteralKind>(pick(3)), pool[pick(pool.size())]});
        }
        std::vector<Atom> head{q};
        if (spec.allow_disjunction && pick(4) == 0) head.push_back(pool[pick(pool.size())]);
        return Rule::from_body(AtomSet(std::move(head)), LiteralSet(std::move(body)));
    }
    std::size_t head_size;
    const std::size_t roll = pick(100);
    if (roll < 10) head_size = 0;
    else if (!spec.allow_disjunction || roll < 75) head_size = 1;
    else head_size = 2;
    std::vector<Atom> head;
    for (std::size_t i = 0; i < head_size; ++i) head.push_back(pool[pick(pool.size())]);
    std::vector<BodyLiteral> body;
    // Constraints always get a body: the empty rule makes the whole program inconsistent.
    const std::size_t body_size = head_size == 0 ? 1 + pick(std::max<std::size_t>(spec.max_body, 1))
                                                 : pick(spec.max_body + 1);
    const std::size_t kinds = spec.allow_double_negation ? 3 : 2;
    for (std::size_t i = 0; i < body_size; ++i) {
        body.push_back({static_cast<LiteralKind>(pick(kinds)), pool[pick(pool.size())]});
    }
    return Rule::from_body(AtomSet(std::move(head)), LiteralSet(std::move(body)));
}

std::vector<Rule> single_normal_rules(const AtomSet& sigma) {
    std::vector<BodyLiteral> lits;
    for (Atom a : sigma) {
        lits.push_back(BodyLiteral::pos(a));
        lits.push_back(BodyLiteral::naf(a));
    }
    std::vector<LiteralSet> bodies{LiteralSet{}};
    for (std::size_t i = 0; i < lits.size(); ++i) {
        bodies.push_back(LiteralSet{lits[i]});
        for (std::size_t j = i + 1; j < lits.size(); ++j) bodies.push_back(LiteralSet{lits[i], lits[j]});
    }
    std::vector<AtomSet> heads{AtomSet{}};
    for (Atom a : sigma) heads.push_back(AtomSet{a});
    std::vector<Rule> out;
    for (const auto& h : heads) {
        for (const auto& b : bodies) out.push_back(Rule::from_body(h, b));
    }
    return out;
}

std::vector<Mask> exclude(std::vector<Mask> sets, Mask v) {
    for (auto& s : sets) s &= ~v;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

simd::RuleMasks append(simd::RuleMasks a, const simd::RuleMasks& b) {
    for (std::size_t i = 0; i < b.size(); ++i) a.push_back(b.head[i], b.pos[i], b.neg[i], b.nneg[i]);
    return a;
}

std::vector<AtomSet> to_sets(const std::vector<Mask>& ms, const Signature& sigma) {
    std::vector<AtomSet> out;
    for (Mask m : ms) out.push_back(sigma.set_of(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> names(const AtomSet& s) {
    std::vector<std::string> out;
    for (Atom a : s) out.push_back(a.name());
    return out;
}

std::vector<std::vector<std::string>> names(const std::vector<AtomSet>& ss) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : ss) out.push_back(names(s));
    return out;
}

}  // namespace

std::vector<NamedProgram> golden_corpus() {
    const std::pair<const char*, const char*> items[] = {
        {"simple-forgetting", "t :- q. v :- not q. q :- s. q :- w."},
        {"as-dual", "v :- not q. q :- s, t. q | u :- w."},
        {"simple-choice", "q :- not not q. a :- q."},
        {"choice", "q :- not not q. u :- q. s :- q. t :- not q."},
        {"introduction", "d :- not c. a :- q. q :- b."},
        {"distance-forgetting", "q :- s. q | u :- r. t :- q. v :- not q."},
        {"distance-left", "a :- b, not c."},
        {"distance-right", "a :- not c. b :- d."},
        {"dependency-c-p", "p :- q. q :- not c."},
        {"strong-forgetting", "p :- not q. p :- not p."},
        {"weak-forgetting", "q. p :- not q."},
        {"iteration", "c :- not p. p :- not q. q :- not p."},
    };
    std::vector<NamedProgram> out;
    for (const auto& [name, text] : items) out.push_back({name, parse_program(text)});
    return out;
}

std::vector<NamedProgram> generate_corpus(const CorpusSpec& spec) {
    std::vector<NamedProgram> out = golden_corpus();
    if (spec.count == 0) return out;
    const std::size_t n_atoms = std::clamp<std::size_t>(spec.max_atoms, 1, std::size(kAtomPool));
    std::vector<Atom> pool;
    for (std::size_t i = 0; i < n_atoms; ++i) pool.emplace_back(kAtomPool[i]);
    std::mt19937_64 rng(spec.seed);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const std::size_t n_rules = 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(spec.max_rules, 1));
        std::vector<Rule> rules;
        for (std::size_t i = 0; i < n_rules; ++i) rules.push_back(random_rule(rng, pool, spec));
        out.push_back({"random-" + std::to_string(spec.seed) + "-" + std::to_string(k), Program(std::move(rules))});
    }
    return out;
}

std::vector<Program> enumerate_contexts(const AtomSet& sigma, int depth, std::size_t max_contexts) {
    if (sigma.size() > 16) throw GuardError("context signature too large");
    std::vector<Program> out;
    std::set<FlatSet<Rule>> seen;
    auto add = [&](Program p) {
        if (seen.insert(p.rules()).second) {
            if (out.size() >= max_contexts) throw GuardError("context enumeration exceeds the configured limit");
            out.push_back(std::move(p));
        }
    };
    const Signature sig(sigma);
    for (Mask m = 0;; ++m) {
        Program facts;
        for (Atom a : sig.set_of(m)) facts.insert(Rule(AtomSet{a}, {}));
        add(std::move(facts));
        if (m == sig.full()) break;
    }
    if (depth >= 1) {
        const auto singles = single_normal_rules(sigma);
        if (depth >= 2 && singles.size() * singles.size() / 2 > max_contexts) {
            throw GuardError("context enumeration exceeds the configured limit");
        }
        for (const auto& r : singles) add(Program{r});
        if (depth >= 2) {
            for (std::size_t i = 0; i < singles.size(); ++i) {
                for (std::size_t j = i + 1; j < singles.size(); ++j) add(Program{singles[i], singles[j]});
            }
        }
    }
    return out;
}

SPReport verify_sp(const Program& p, Atom q, const SPOptions& opts, std::string instance) {
    const AtomSet full = p.signature();
    if (full.size() > kSpAtomGuard && !opts.accept_exponential) {
        throw GuardError("strong persistence check limited to " + std::to_string(kSpAtomGuard) +
                         " atoms; pass the accept-exponential option to override");
    }
    SPReport report;
    report.instance = std::move(instance);
    report.forgotten = q;
    report.omega = satisfies_omega(p, AtomSet{q});

    const Signature sigma(full);
    const Mask qbit = sigma.mask_of(AtomSet{q});
    const Program result = forget(p, q);
    const simd::RuleMasks original = simd::compile_rules(p, sigma);
    const simd::RuleMasks forgotten = simd::compile_rules(result, sigma);

    AtomSet rest = full;
    rest.erase(q);
    for (const auto& ctx : enumerate_contexts(rest, opts.depth)) {
        const simd::RuleMasks extra = simd::compile_rules(ctx, sigma);
        const auto expected = exclude(answer_set_masks(append(original, extra), sigma), qbit);
        const auto actual = answer_set_masks(append(forgotten, extra), sigma);
        const bool ok = report.omega ? std::includes(actual.begin(), actual.end(), expected.begin(), expected.end())
                                     : actual == expected;
        ++report.contexts_checked;
        if (!ok) report.failures.push_back({ctx, to_sets(expected, sigma), to_sets(actual, sigma)});
    }
    return report;
}

bool oracle_agrees(const Program& p, Atom q) {
    AtomSet rest = p.signature();
    rest.erase(q);
    return ht_models(forget(p, q), rest) == fsp_target_models(p, AtomSet{q});
}

std::string sp_report_to_json(const std::vector<SPReport>& reports) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["instance"] = r.instance;
        j["forgotten"] = r.forgotten.name();
        j["omega"] = r.omega;
        j["contexts_checked"] = r.contexts_checked;
        auto failures = nlohmann::ordered_json::array();
        for (const auto& f : r.failures) {
            nlohmann::ordered_json fj;
            fj["context"] = print_program(f.context);
            fj["expected"] = names(f.expected);
            fj["actual"] = names(f.actual);
            failures.push_back(std::move(fj));
        }
        j["failures"] = std::move(failures);
        doc.push_back(std::move(j));
    }
    return doc.dump();
}

}  // namespace fsp
