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

// Shared helpers for the test suites: generators of random valid data and
// small independent oracles.

#ifndef INET_TESTS_SUPPORT_HPP_
#define INET_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "inet/calculus.hpp"
#include "inet/parser.hpp"
#include "inet/port_net.hpp"
#include "inet/rules.hpp"
#include "inet/signature.hpp"
#include "inet/stdlib.hpp"
#include "inet/term.hpp"

namespace inet::testing {

using Rng = std::mt19937_64;

// One shipped net, by profile and net name.
struct Example {
  std::string profile;
  std::string net;
  const Configuration& config() const;
  const RuleSet& rules() const;
  const Signature& signature() const;
};

// Every net of the deterministic profiles (no Amb, no divergence).
std::vector<Example> deterministic_examples();

// Shorthands.
Term N(const std::string& x);
Term A(const std::string& symbol, std::vector<Term> args = {});
Configuration parse_in(const std::string& profile, const std::string& text);

struct ConfigShape {
  int max_head = 3;
  int max_equations = 4;
  int max_depth = 3;
  // Equations whose sides are both agents, so the configuration is exactly
  // what net_to_config would produce.
  bool agent_equations = false;
  // Percentage of name occurrences left free.
  int free_percent = 15;
};

// A random configuration over the symbols of `sig` (all arities taken from
// it). Bound names are paired at random; every name occurs at most twice.
Configuration random_config(const Signature& sig, Rng& rng, const ConfigShape& shape = {});

// A random well-formed net over `sig`, built from random trees.
PortNet random_net(const Signature& sig, Rng& rng, int max_nodes = 12);

// A random linear term with `holes` distinct fresh name occurrences. Names are
// drawn from `pool` in order.
Term random_term(const Signature& sig, Rng& rng, int depth, std::vector<std::string>& holes);

// A random system: signature, strictly linear rules, and a few nets.
SystemFile random_system(Rng& rng);

// Lowercase names that the generators use, never %-names.
std::string name_for(int k);

// Combinator terms over S, K and numerals, with application.
struct Comb {
  enum Kind { kS, kK, kNum, kApp } kind = kS;
  int value = 0;
  std::shared_ptr<const Comb> fun, arg;
};
using CombPtr = std::shared_ptr<const Comb>;
CombPtr comb_s();
CombPtr comb_k();
CombPtr comb_num(int n);
CombPtr comb_app(CombPtr f, CombPtr a);
CombPtr random_comb(Rng& rng, int size);
// Normal form by applicative-order rewriting, or nullopt beyond `fuel` or
// once a numeral is applied.
std::optional<CombPtr> comb_normalize(const CombPtr& t, int fuel = 2000);
// False when a numeral sits in function position somewhere.
bool comb_well_typed_nf(const CombPtr& t);
std::string comb_print(const CombPtr& t);
// The configuration < r | ... > computing t in the lambda profile.
Configuration comb_to_config(const CombPtr& t);
// Reads a lambda-profile normal form back into a combinator term.
std::optional<CombPtr> comb_from_term(const Term& t);

// A malformed input, where its first diagnostic must point, and a fragment of
// that diagnostic's message.
struct Negative {
  const char* text;
  int line;
  int column;
  const char* fragment;
};
std::vector<Negative> negative_samples();

// Terms t, u, w over the nat signature with pairwise disjoint names. t
// contains x; y sits in u when `y_in_u`, in t otherwise.
struct SubstInstance {
  Term t, u, w;
  bool y_in_u;
};
SubstInstance substitution_instance(Rng& rng);

// Every configuration reachable from small nat nets with at most
// `max_equations` equations.
std::vector<Configuration> small_nat_states(std::size_t max_equations = 6);

// True when a and b are alpha-equal or become so after at most one step on
// each side.
bool joins_within_one_step(const Configuration& a, const Configuration& b, const RuleSet& rules);

}  // namespace inet::testing

#endif  // INET_TESTS_SUPPORT_HPP_
