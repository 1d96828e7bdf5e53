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

#include "fsp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fsp/distance.hpp"
#include "fsp/forget.hpp"
#include "fsp/harness.hpp"
#include "fsp/ht_semantics.hpp"
#include "fsp/normalform.hpp"
#include "fsp/parser_io.hpp"
#include "fsp/semantic.hpp"

namespace fsp {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Session {
public:
    Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    Program load(const std::string& path) {
        if (path == "-") {
            if (stdin_used_) throw UsageError("standard input can be read only once");
            stdin_used_ = true;
            return parse_program(in_);
        }
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open '" + path + "'");
        try {
            return parse_program(f);
        } catch (const ParseError& e) {
            throw ParseError(e.line(), e.column(), path + ": " + e.message(), e.snippet());
        }
    }

    // Boolean verdict: prints `text` unless quiet, returns the exit code.
    int verdict(bool value, const std::string& yes, const std::string& no) {
        if (!quiet) out_ << (value ? yes : no) << '\n';
        return value ? kExitOk : kExitFalse;
    }

    bool quiet = false;

private:
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
};

Atom checked_atom(const std::string& name) {
    if (!Atom::valid_name(name)) throw UsageError("invalid atom name '" + name + "'");
    return Atom(name);
}

std::vector<Atom> checked_atom_list(const std::string& text) {
    std::vector<Atom> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw UsageError("empty atom in list '" + text + "'");
        out.push_back(checked_atom(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw UsageError("empty atom list");
    return out;
}

AtomSet as_set(const std::vector<Atom>& atoms) { return AtomSet(std::vector<Atom>(atoms)); }

std::string ht_line(const HTInterpretation& m, const Signature& sigma) {
    return "<" + print_atoms(sigma.set_of(m.here)) + "," + print_atoms(sigma.set_of(m.there)) + ">";
}

void print_trace(std::ostream& out, const ForgetTrace& trace) {
    for (const auto& t : trace) {
        out << "% [" << t.tag << "] " << print_rule(t.produced);
        if (!t.kept) out << "  (dropped)";
        out << "\n%     from";
        for (const auto& s : t.sources) out << "  " << print_rule(s);
        if (!t.dual.empty()) out << "\n%     dual " << print_literals(t.dual);
        if (t.head_choice) out << "\n%     h = " << t.head_choice->name();
        out << '\n';
    }
}

void print_omega(std::ostream& out, const OmegaReport& r) {
    for (const auto& c : r.candidates) {
        if (c.rel.empty()) continue;
        out << "Y=" << print_atoms(c.y) << " Rel={";
        for (std::size_t i = 0; i < c.rel.size(); ++i) out << (i ? "," : "") << print_atoms(c.rel[i]);
        out << "}";
        for (const auto& [a, fam] : c.families) {
            out << " R[" << print_atoms(a) << "]={";
            bool first = true;
            for (const auto& x : fam) {
                out << (first ? "" : ",") << print_atoms(x);
                first = false;
            }
            out << "}";
        }
        out << (c.witnesses ? " no-least" : " least") << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Session session(in, out);
    CLI::App app{"Syntactic forgetting for extended logic programs", "fsp"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("-q,--quiet", session.quiet, "Suppress verdict text; rely on the exit code");

    // normalize
    std::string norm_file = "-";
    auto* normalize = app.add_subcommand("normalize", "Print the normal form of a program");
    normalize->add_option("file", norm_file, "Program file, or - for standard input");

    // forget
    std::string fg_atom, fg_atoms, fg_file = "-";
    bool fg_fast = false, fg_trace = false, fg_oracle = false;
    auto* forget_cmd = app.add_subcommand("forget", "Forget an atom, keeping strong persistence where possible");
    auto* fg_atom_opt = forget_cmd->add_option("--atom", fg_atom, "Atom to forget");
    auto* fg_atoms_opt = forget_cmd->add_option(
        "--atoms", fg_atoms, "Comma separated atoms, forgotten one at a time from left to right");
    fg_atom_opt->excludes(fg_atoms_opt);
    forget_cmd->add_flag("--fast", fg_fast, "Use the reduced operator; the program must be q-forgettable");
    forget_cmd->add_flag("--trace", fg_trace, "Show every derived rule as a comment");
    forget_cmd->add_flag("--check-oracle", fg_oracle, "Compare the HT-models of the result with the semantic target");
    forget_cmd->add_option("file", fg_file, "Program file, or - for standard input");

    // models
    std::string md_file = "-", md_sig;
    bool md_ht = false, md_as = false, md_json = false;
    auto* models = app.add_subcommand("models", "List HT-models or answer sets");
    auto* md_ht_flag = models->add_flag("--ht", md_ht, "HT-models");
    auto* md_as_flag = models->add_flag("--as", md_as, "Answer sets (default)");
    md_ht_flag->excludes(md_as_flag);
    models->add_option("--signature", md_sig, "Extra atoms to include in the signature, e.g. a,b");
    models->add_flag("--json", md_json, "Machine readable output");
    models->add_option("file", md_file, "Program file, or - for standard input");

    // equiv
    std::string eq_left, eq_right, eq_sig;
    bool eq_strong = false, eq_weak = false;
    auto* equiv = app.add_subcommand("equiv", "Decide strong (default) or weak equivalence");
    auto* eq_strong_flag = equiv->add_flag("--strong", eq_strong, "Same HT-models");
    auto* eq_weak_flag = equiv->add_flag("--weak", eq_weak, "Same answer sets");
    eq_strong_flag->excludes(eq_weak_flag);
    equiv->add_option("--signature", eq_sig, "Extra atoms to include in the signature");
    equiv->add_option("left", eq_left, "First program")->required();
    equiv->add_option("right", eq_right, "Second program")->required();

    // omega
    std::string om_atoms, om_sig, om_file = "-";
    auto* omega = app.add_subcommand("omega", "Check the criterion under which no operator can preserve answer sets");
    omega->add_option("--atoms", om_atoms, "Atoms to forget")->required();
    omega->add_option("--signature", om_sig, "Extra atoms to include in the signature");
    omega->add_option("file", om_file, "Program file, or - for standard input");

    // qforgettable
    std::string qf_atom, qf_file = "-";
    auto* qforgettable = app.add_subcommand("qforgettable", "Check whether the fast operator applies");
    qforgettable->add_option("--atom", qf_atom, "Atom to forget")->required();
    qforgettable->add_option("file", qf_file, "Program file, or - for standard input");

    // distance
    std::string ds_left, ds_right;
    bool ds_witness = false;
    auto* distance = app.add_subcommand("distance", "Syntactic distance between two programs");
    distance->add_option("left", ds_left, "First program")->required();
    distance->add_option("right", ds_right, "Second program")->required();
    distance->add_flag("--witness", ds_witness, "Also print an optimal rule mapping");

    // fsem
    std::string fs_atoms, fs_file = "-";
    bool fs_normalize = false;
    auto* fsem = app.add_subcommand("fsem", "Counter-model program with the target HT-models");
    fsem->add_option("--atoms", fs_atoms, "Atoms to forget")->required();
    fsem->add_flag("--normalize", fs_normalize, "Normalize the result");
    fsem->add_option("file", fs_file, "Program file, or - for standard input");

    // verify-sp
    std::string sp_atom = "q", sp_file;
    int sp_depth = 1;
    std::uint64_t sp_seed = 1;
    std::size_t sp_count = 0;
    bool sp_json = false, sp_exp = false;
    auto* verify = app.add_subcommand(
        "verify-sp", "Check strong persistence of forget against bounded contexts (built-in corpus unless a file is given)");
    verify->add_option("--atom", sp_atom, "Atom to forget")->capture_default_str();
    verify->add_option("--depth", sp_depth, "0: facts, 1: plus single rules, 2: plus rule pairs")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    verify->add_option("--seed", sp_seed, "Seed for random programs")->capture_default_str();
    verify->add_option("--count", sp_count, "Number of random programs after the built-in ones")->capture_default_str();
    verify->add_flag("--json", sp_json, "Machine readable report");
    verify->add_flag("--accept-exponential", sp_exp, "Lift the six-atom limit");
    verify->add_option("file", sp_file, "Program file, or - for standard input");

    std::vector<const char*> argv{"fsp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (normalize->parsed()) {
            out << print_program(normal_form(session.load(norm_file)));
            return kExitOk;
        }
        if (forget_cmd->parsed()) {
            if (fg_atom.empty() && fg_atoms.empty()) throw UsageError("forget needs --atom or --atoms");
            Program p = session.load(fg_file);
            if (!fg_atoms.empty()) {
                if (fg_fast || fg_trace || fg_oracle) {
                    throw UsageError("--fast, --trace and --check-oracle need a single --atom");
                }
                const auto atoms = checked_atom_list(fg_atoms);
                if (atoms.size() > 1) {
                    err << "warning: atoms are forgotten one at a time; strong persistence is guaranteed "
                           "per atom only\n";
                }
                out << print_program(forget_each(p, atoms));
                return kExitOk;
            }
            const Atom q = checked_atom(fg_atom);
            ForgetTrace trace;
            Program result;
            if (fg_fast) {
                if (!is_q_forgettable(p, q)) {
                    err << "error: program is not " << q.name() << "-forgettable; drop --fast\n";
                    return kExitFalse;
                }
                result = forget_fast(p, q, fg_trace ? &trace : nullptr);
            } else {
                result = forget(p, q, fg_trace ? &trace : nullptr);
            }
            if (fg_trace) print_trace(out, trace);
            out << print_program(result);
            if (fg_oracle) {
                const bool agrees = oracle_agrees(p, q);
                out << "% oracle: " << (agrees ? "agrees" : "DISAGREES") << '\n';
                return agrees ? kExitOk : kExitFalse;
            }
            return kExitOk;
        }
        if (models->parsed()) {
            Program p = session.load(md_file);
            if (!md_sig.empty()) p.widen(as_set(checked_atom_list(md_sig)));
            if (md_ht) {
                const HTModelSet m = ht_models(p);
                if (md_json) {
                    out << ht_models_to_json(m) << '\n';
                } else {
                    for (const auto& i : m.members()) out << ht_line(i, m.sigma()) << '\n';
                }
            } else {
                const auto as = answer_sets(p);
                if (md_json) {
                    out << answer_sets_to_json(p.signature(), as) << '\n';
                } else {
                    for (const auto& s : as) out << print_atoms(s) << '\n';
                }
            }
            return kExitOk;
        }
        if (equiv->parsed()) {
            const Program a = session.load(eq_left);
            const Program b = session.load(eq_right);
            const AtomSet extra = eq_sig.empty() ? AtomSet{} : as_set(checked_atom_list(eq_sig));
            const bool same = eq_weak ? weakly_equivalent(a, b) : strongly_equivalent(a, b, extra);
            return session.verdict(same, "equivalent", "not equivalent");
        }
        if (omega->parsed()) {
            Program p = session.load(om_file);
            if (!om_sig.empty()) p.widen(as_set(checked_atom_list(om_sig)));
            const OmegaReport r = omega_report(p, as_set(checked_atom_list(om_atoms)));
            if (!session.quiet) print_omega(out, r);
            const std::string yes = "omega holds, witness Y=" + (r.witness ? print_atoms(*r.witness) : "");
            return session.verdict(r.satisfied, yes, "omega fails");
        }
        if (qforgettable->parsed()) {
            const Atom q = checked_atom(qf_atom);
            const bool yes = is_q_forgettable(session.load(qf_file), q);
            return session.verdict(yes, q.name() + "-forgettable", "not " + q.name() + "-forgettable");
        }
        if (distance->parsed()) {
            const Program a = session.load(ds_left);
            const Program b = session.load(ds_right);
            const ProgramDistance d = program_distance(a, b);
            out << d.distance << '\n';
            if (ds_witness) {
                for (const auto& [l, r] : d.mapping) {
                    out << print_rule(l) << "  ->  " << print_rule(r) << "  (" << rule_distance(l, r) << ")\n";
                }
                for (const auto& l : d.unmatched_left) out << print_rule(l) << "  ->  -  (" << rule_size(l) << ")\n";
                for (const auto& r : d.unmatched_right) out << "-  ->  " << print_rule(r) << "  (" << rule_size(r) << ")\n";
            }
            return kExitOk;
        }
        if (fsem->parsed()) {
            const Program p = session.load(fs_file);
            Program r = f_sem(p, as_set(checked_atom_list(fs_atoms)));
            if (fs_normalize) r = normal_form(r);
            out << print_program(r);
            return kExitOk;
        }
        if (verify->parsed()) {
            const Atom q = checked_atom(sp_atom);
            std::vector<NamedProgram> corpus;
            if (!sp_file.empty()) {
                corpus.push_back({sp_file, session.load(sp_file)});
            } else {
                CorpusSpec spec;
                spec.seed = sp_seed;
                spec.count = sp_count;
                corpus = generate_corpus(spec);
            }
            SPOptions opts;
            opts.depth = sp_depth;
            opts.accept_exponential = sp_exp;
            std::vector<SPReport> reports;
            bool all_ok = true;
            for (const auto& np : corpus) {
                reports.push_back(verify_sp(np.program, q, opts, np.name));
                all_ok = all_ok && reports.back().ok();
            }
            if (sp_json) {
                out << sp_report_to_json(reports) << '\n';
            } else if (!session.quiet) {
                for (const auto& r : reports) {
                    out << (r.ok() ? "ok   " : "FAIL ") << r.instance << "  contexts=" << r.contexts_checked
                        << (r.omega ? "  omega" : "") << '\n';
                    if (!r.ok()) {
                        const auto& f = r.failures.front();
                        out << "     context: " << print_program(f.context);
                    }
                }
                out << (all_ok ? "all instances persist" : "persistence violated") << '\n';
            }
            return all_ok ? kExitOk : kExitFalse;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GuardError& e) {
        err << "limit: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fsp
