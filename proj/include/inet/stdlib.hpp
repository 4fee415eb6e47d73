// Copyright 2026 The inetcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INET_STDLIB_HPP_
#define INET_STDLIB_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inet/parser.hpp"
#include "inet/term.hpp"

namespace inet {

// A shipped interaction system with its example nets.
struct Profile {
  std::string name;
  SystemFile system;
  std::string_view source;  // the .inet text it was parsed from
};

// nat, cnat, bool, dlist, comb, lambda, amb, endless.
std::vector<std::string> profile_names();
// Parsed once and cached. Throws std::out_of_range for unknown names.
const Profile& profile(std::string_view name);
std::string_view program_source(std::string_view name);

const Profile& nat_profile();
const Profile& cnat_profile();
const Profile& bool_profile();
const Profile& dlist_profile();
const Profile& comb_profile();
const Profile& lambda_profile();
const Profile& amb_profile();
const Profile& endless_profile();

// Numbers: S^n(Z).
Term numeral(int n);
std::optional<int> denote_nat(const Term& t);
// The value of a closed normal form < n | >.
std::optional<int> denote_nat(const Configuration& c);

Configuration nat_add(int m, int n);
Configuration nat_mult(int m, int n);
Configuration nat_max(int m, int n);
Configuration nat_min(int m, int n);
Configuration nat_fact(int n);
Configuration nat_zero_test(int n);

// < z | C(x, S^m(x)) = Add(C(y, S^n(y)), z) >
Configuration cnat_add(int m, int n);
// For C(x, S^k(x)): k.
std::optional<int> denote_cnat(const Configuration& c);

std::optional<bool> denote_bool(const Configuration& c);
Configuration bool_and(bool a, bool b);
Configuration bool_or(bool a, bool b);
Configuration bool_same(bool a, bool b);
Configuration bool_not(bool a);

// Diff(Cons(e1, ... Cons(ek, hole)), hole).
Term dlist(const std::vector<Term>& elements, const std::string& hole);
Configuration dlist_append(const std::vector<Term>& a, const std::vector<Term>& b);
std::optional<std::vector<Term>> denote_dlist(const Configuration& c);

// Cons(e1, ... Cons(ek, Nil)).
Term cons_list(const std::vector<Term>& elements);
std::optional<std::vector<Term>> denote_list(const Term& t);
Configuration list_append(const std::vector<Term>& a, const std::vector<Term>& b);
Configuration list_interleave(const std::vector<Term>& a, const std::vector<Term>& b);

// Exactly the endless example: < x, y | A(x) = B(A(y)) >.
Configuration endless_net();

// The endless component plugged into an argument position stands for an
// argument that never delivers a value.
enum class AmbArg { kTrue, kFalse, kEndless };
Configuration parallel_or(AmbArg a, AmbArg b);
Configuration parallel_and(AmbArg a, AmbArg b);

}  // namespace inet

#endif  // INET_STDLIB_HPP_
