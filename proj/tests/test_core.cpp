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

#include <stdexcept>

#include "fsp/core.hpp"

using namespace fsp;

TEST_CASE("atoms are interned and ordered by name") {
    Atom a1("abc"), a2("abc"), b("abd");
    CHECK(a1 == a2);
    CHECK(&a1.name() == &a2.name());
    CHECK(a1 < b);
    CHECK(Atom("z") > Atom("y1"));
    CHECK_THROWS_AS(Atom("Abc"), std::invalid_argument);
    CHECK_THROWS_AS(Atom("not"), std::invalid_argument);
    CHECK_THROWS_AS(Atom(""), std::invalid_argument);
    CHECK(Atom::valid_name("x_1Y"));
    CHECK_FALSE(Atom::valid_name("1x"));
}

TEST_CASE("atom sets keep sorted unique order") {
    const AtomSet s = atoms({"c", "a", "b", "a"});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == Atom("a"));
    CHECK(s[2] == Atom("c"));
    CHECK((s - atoms({"b"})) == atoms({"a", "c"}));
    CHECK((atoms({"a", "b"}) ^ atoms({"b", "c"})) == atoms({"a", "c"}));
    CHECK(atoms({"a"}).proper_subset_of(s));
    CHECK_FALSE(s.proper_subset_of(s));
}

TEST_CASE("negation of body literals collapses triple negation") {
    const Atom p("p");
    CHECK(BodyLiteral::pos(p).negated() == BodyLiteral::naf(p));
    CHECK(BodyLiteral::naf(p).negated() == BodyLiteral::nafnaf(p));
    CHECK(BodyLiteral::nafnaf(p).negated() == BodyLiteral::naf(p));
    CHECK(BodyLiteral::pos(p).double_negated() == BodyLiteral::nafnaf(p));
    CHECK(BodyLiteral::naf(p).double_negated() == BodyLiteral::naf(p));
    CHECK(BodyLiteral::nafnaf(p).double_negated() == BodyLiteral::nafnaf(p));
}

TEST_CASE("rule accessors, size and tautologies") {
    const Rule r(atoms({"a", "b"}), atoms({"c"}), atoms({"d"}), atoms({"e"}));
    CHECK(r.size() == 5);
    CHECK(r.body().size() == 3);
    CHECK(r.atoms() == atoms({"a", "b", "c", "d", "e"}));
    CHECK(r.mentions(Atom("e")));
    CHECK_FALSE(r.mentions(Atom("f")));
    CHECK_FALSE(r.is_tautological());
    CHECK(Rule(atoms({"a"}), atoms({"a"})).is_tautological());
    CHECK(Rule({}, atoms({"b"}), atoms({"b"})).is_tautological());
    CHECK(Rule({}, {}, atoms({"b"}), atoms({"b"})).is_tautological());
    CHECK_FALSE(Rule(atoms({"a"}), {}, {}, atoms({"a"})).is_tautological());
    CHECK(Rule({}, atoms({"a"})).is_constraint());

    const LiteralSet body{BodyLiteral::pos(Atom("x")), BodyLiteral::nafnaf(Atom("y"))};
    const Rule built = Rule::from_body(atoms({"h"}), body);
    CHECK(built.pos() == atoms({"x"}));
    CHECK(built.nneg() == atoms({"y"}));
    CHECK(built.body() == body);
}

TEST_CASE("subsumption follows the head/body inclusion pattern") {
    const Rule small(atoms({"a"}), atoms({"b"}));
    const Rule big_body(atoms({"a"}), atoms({"b", "c"}));
    const Rule big_head(atoms({"a", "d"}), atoms({"b"}));
    CHECK(subsumes(small, big_body));
    CHECK(subsumes(small, big_head));
    CHECK_FALSE(subsumes(small, small));
    CHECK_FALSE(subsumes(big_body, small));

    Program p{small, big_body};
    CHECK(subsumer_in(big_body, p) == small);
    CHECK(is_minimal_in(small, p));
}

TEST_CASE("program signature includes widening but identity ignores it") {
    Program p{Rule(atoms({"a"}), atoms({"b"}))};
    Program q = p;
    q.widen(atoms({"z"}));
    CHECK(p.signature() == atoms({"a", "b"}));
    CHECK(q.signature() == atoms({"a", "b", "z"}));
    CHECK(p == q);
    CHECK_FALSE(p.insert(Rule(atoms({"a"}), atoms({"b"}))));
    const Program u = p | Program{Rule(atoms({"c"}), {})};
    CHECK(u.size() == 2);
}
