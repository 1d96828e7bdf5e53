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

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/core.hpp"

namespace fsp {

class HTModelSet;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, std::string message, std::string snippet);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }
    const std::string& snippet() const { return snippet_; }

private:
    int line_, column_;
    std::string message_, snippet_;
};

// Grammar (whitespace insignificant, `%` comments to end of line):
//   rule    = head "." | head ":-" body "." | ":-" body "."
//   head    = atom ("|" atom)* | <empty>
//   body    = literal ("," literal)*
//   literal = atom | "not" atom | "not" "not" atom
Program parse_program(std::string_view text);
Program parse_program(std::istream& in);
Rule parse_rule(std::string_view text);

// Comma separated atom list, e.g. "a,b,c". Empty input gives the empty set.
AtomSet parse_atom_list(std::string_view text);

std::string print_rule(const Rule& r);
// One rule per line, rules sorted by printed form. Empty program prints "".
std::string print_program(const Program& p);
std::string print_literal(const BodyLiteral& l);
std::string print_literals(const LiteralSet& ls);
std::string print_atoms(const AtomSet& s);

// {"signature":[...],"answer_sets":[[...],...]}
std::string answer_sets_to_json(const AtomSet& signature, const std::vector<AtomSet>& answer_sets);
// {"signature":[...],"ht_models":[[[X...],[Y...]],...]}
std::string ht_models_to_json(const HTModelSet& models);

}  // namespace fsp
