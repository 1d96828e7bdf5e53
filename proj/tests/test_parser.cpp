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

#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "fsp/harness.hpp"
#include "fsp/ht_semantics.hpp"
#include "fsp/parser_io.hpp"

using namespace fsp;

TEST_CASE("rule shapes") {
    const Rule r = parse_rule("a | b :- c, not d, not not e.");
    CHECK(r.head() == atoms({"a", "b"}));
    CHECK(r.pos() == atoms({"c"}));
    CHECK(r.neg() == atoms({"d"}));
    CHECK(r.nneg() == atoms({"e"}));

    CHECK(parse_rule("a.") == Rule(atoms({"a"}), {}));
    CHECK(parse_rule(":- a, not b.") == Rule({}, atoms({"a"}), atoms({"b"})));
    CHECK(parse_rule(".") == Rule());
    CHECK(parse_rule("a :- not not not b.").neg() == atoms({"b"}));
    CHECK(parse_rule("a :- not not not not b.").nneg() == atoms({"b"}));
    CHECK(parse_rule("nothing :- notb.").pos() == atoms({"notb"}));
}

TEST_CASE("whitespace and comments are insignificant") {
    const Program p = parse_program("% header\n a:-b ,not c.%tail\n\n  d|e.\n");
    CHECK(p.size() == 2);
    CHECK(p.contains(parse_rule("a :- b, not c.")));
    CHECK(p.contains(parse_rule("d | e.")));
    CHECK(parse_program("").empty());
    CHECK(parse_program("% only a comment").empty());
}

TEST_CASE("duplicates collapse") {
    CHECK(parse_program("a :- b. a :- b. b | a.  a | b.").size() == 2);
}

TEST_CASE("errors carry position and snippet") {
    try {
        parse_program("a :- b.\nc :- d e.");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
        CHECK(e.snippet() == "e");
    }
    CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
    CHECK_THROWS_AS(parse_program("A :- b."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- not."), ParseError);
    CHECK_THROWS_AS(parse_program("not :- a."), ParseError);
    CHECK_THROWS_AS(parse_program("a :- ."), ParseError);
    CHECK_THROWS_AS(parse_program("a # b."), ParseError);
    CHECK_THROWS_AS(parse_rule("a. b."), ParseError);
}

TEST_CASE("printing is canonical") {
    CHECK(print_rule(parse_rule("b | a :- not not x, not y, z, c.")) == "a | b :- c, z, not y, not not x.");
    CHECK(print_rule(parse_rule(":- a.")) == ":- a.");
    CHECK(print_rule(Rule()) == ".");
    CHECK(print_program(parse_program("b. a.")) == "a.\nb.\n");
    CHECK(print_program(Program{}).empty());
    CHECK(print_atoms(atoms({"b", "a"})) == "{a,b}");
    CHECK(print_atoms({}) == "{}");
}

TEST_CASE("print then parse is the identity on the corpus") {
    CorpusSpec spec;
    spec.count = 300;
    for (const auto& np : generate_corpus(spec)) {
        CHECK(parse_program(print_program(np.program)) == np.program);
    }
}

TEST_CASE("stream input and atom lists") {
    std::istringstream in("a :- b.\n");
    CHECK(parse_program(in).size() == 1);
    CHECK(parse_atom_list("b, a ,c") == atoms({"a", "b", "c"}));
    CHECK(parse_atom_list("").empty());
    CHECK_THROWS_AS(parse_atom_list("a,B"), ParseError);
}

TEST_CASE("json output keeps signature first") {
    const auto js = nlohmann::json::parse(answer_sets_to_json(atoms({"a", "b"}), {atoms({"b"}), atoms({"a"})}));
    CHECK(js["signature"] == nlohmann::json({"a", "b"}));
    CHECK(js["answer_sets"] == nlohmann::json({{"a"}, {"b"}}));
    const std::string ht = ht_models_to_json(ht_models(parse_program("a :- not not a.")));
    CHECK(ht.rfind("{\"signature\"", 0) == 0);
    CHECK(nlohmann::json::parse(ht)["ht_models"].size() == 2);
}
