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

#ifndef INET_RULES_HPP_
#define INET_RULES_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inet/signature.hpp"
#include "inet/term.hpp"

namespace inet {

// lhs_a[rhs_a...] >< lhs_b[rhs_b...]. Every name in the right-hand sides
// occurs exactly twice.
struct Rule {
  std::string lhs_a;
  std::string lhs_b;
  std::vector<Term> rhs_a;
  std::vector<Term> rhs_b;

  // The same rule with `symbol` on the a-side. Requires `symbol` to be one of
  // the two left-hand symbols.
  Rule oriented(std::string_view symbol) const;
};

using SymbolPair = std::pair<std::string, std::string>;

// Unordered key: the lexicographically smaller symbol first.
SymbolPair pair_key(std::string_view a, std::string_view b);

// Rules indexed by unordered symbol pair, plus rules synthesized from the
// eraser/duplicator schemas of a signature. Explicit rules shadow schemas.
class RuleSet {
 public:
  // Returns false (and leaves the set unchanged) if a rule for the same
  // unordered pair is already present.
  bool add(Rule rule);

  // Explicit rule first, otherwise a schema rule. nullptr when none applies.
  const Rule* find(std::string_view a, std::string_view b) const;
  const Rule* find_explicit(std::string_view a, std::string_view b) const;

  // Materializes eraser/duplicator schema rules against every symbol of the
  // signature. Replaces previously installed schemas.
  void install_schemas(const Signature& signature);

  const std::map<SymbolPair, Rule>& explicit_rules() const { return rules_; }
  const std::map<SymbolPair, Rule>& schema_rules() const { return schemas_; }

  // Explicit rules that override a schema rule for the same pair.
  const std::vector<std::string>& shadowing_notes() const { return notes_; }

  std::size_t size() const { return rules_.size(); }

 private:
  std::map<SymbolPair, Rule> rules_;
  std::map<SymbolPair, Rule> schemas_;
  std::vector<std::string> notes_;
};

// Eraser and duplicator rules for every declared symbol (amb symbols
// excluded), without consulting explicit rules.
std::vector<Rule> schema_rules(const Signature& signature);

}  // namespace inet

#endif  // INET_RULES_HPP_
