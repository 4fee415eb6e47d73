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

#include "inet/signature.hpp"

#include "inet/rules.hpp"

namespace inet {

std::string_view attribute_name(Attribute a) {
  switch (a) {
    case Attribute::kPlain:
      return "plain";
    case Attribute::kEraser:
      return "eraser";
    case Attribute::kDuplicator:
      return "duplicator";
    case Attribute::kAmb:
      return "amb";
  }
  return "plain";
}

Signature::DeclareResult Signature::declare(const std::string& symbol,
                                            int arity, Attribute attribute) {
  SymbolInfo info{arity, attribute};
  auto it = symbols_.find(symbol);
  if (it != symbols_.end()) {
    return it->second == info ? DeclareResult::kSame : DeclareResult::kConflict;
  }
  symbols_.emplace(symbol, info);
  return DeclareResult::kAdded;
}

const SymbolInfo* Signature::find(std::string_view symbol) const {
  auto it = symbols_.find(symbol);
  return it == symbols_.end() ? nullptr : &it->second;
}

int Signature::arity(std::string_view symbol) const {
  const SymbolInfo* info = find(symbol);
  return info ? info->arity : -1;
}

bool Signature::is_amb(std::string_view symbol) const {
  const SymbolInfo* info = find(symbol);
  return info && info->attribute == Attribute::kAmb;
}

std::optional<std::string> Signature::with_attribute(Attribute a) const {
  for (const auto& [name, info] : symbols_) {
    if (info.attribute == a) return name;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rules

Rule Rule::oriented(std::string_view symbol) const {
  if (lhs_a == symbol) return *this;
  return Rule{lhs_b, lhs_a, rhs_b, rhs_a};
}

SymbolPair pair_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  return {std::string(a), std::string(b)};
}

bool RuleSet::add(Rule rule) {
  SymbolPair key = pair_key(rule.lhs_a, rule.lhs_b);
  if (rules_.count(key) != 0) return false;
  if (schemas_.count(key) != 0) {
    notes_.push_back("explicit rule " + key.first + " >< " + key.second +
                     " shadows the schema rule");
  }
  rules_.emplace(std::move(key), std::move(rule));
  return true;
}

const Rule* RuleSet::find_explicit(std::string_view a,
                                   std::string_view b) const {
  auto it = rules_.find(pair_key(a, b));
  return it == rules_.end() ? nullptr : &it->second;
}

const Rule* RuleSet::find(std::string_view a, std::string_view b) const {
  SymbolPair key = pair_key(a, b);
  if (auto it = rules_.find(key); it != rules_.end()) return &it->second;
  if (auto it = schemas_.find(key); it != schemas_.end()) return &it->second;
  return nullptr;
}

void RuleSet::install_schemas(const Signature& signature) {
  schemas_.clear();
  notes_.clear();
  for (Rule& rule : inet::schema_rules(signature)) {
    SymbolPair key = pair_key(rule.lhs_a, rule.lhs_b);
    if (rules_.count(key) != 0) {
      notes_.push_back("explicit rule " + key.first + " >< " + key.second +
                       " shadows the schema rule");
    }
    schemas_.emplace(std::move(key), std::move(rule));
  }
}

std::vector<Rule> schema_rules(const Signature& signature) {
  std::vector<Rule> out;
  std::map<SymbolPair, bool> seen;
  auto eraser = signature.eraser();
  auto duplicator = signature.duplicator();

  // Eps >< alpha: one eraser per auxiliary port of alpha.
  if (eraser) {
    for (const auto& [symbol, info] : signature.symbols()) {
      if (info.attribute == Attribute::kAmb) continue;
      Rule r{*eraser, symbol, {}, {}};
      for (int i = 0; i < info.arity; ++i) r.rhs_b.push_back(Term::agent(*eraser));
      seen[pair_key(r.lhs_a, r.lhs_b)] = true;
      out.push_back(std::move(r));
    }
  }

  // Dup >< alpha: two copies of alpha, one duplicator per auxiliary port.
  if (duplicator) {
    for (const auto& [symbol, info] : signature.symbols()) {
      if (info.attribute == Attribute::kAmb) continue;
      if (seen.count(pair_key(*duplicator, symbol)) != 0) continue;
      std::vector<Term> first, second, dups;
      for (int i = 0; i < info.arity; ++i) {
        std::string a = "a" + std::to_string(i);
        std::string b = "b" + std::to_string(i);
        first.push_back(Term::name(a));
        second.push_back(Term::name(b));
        dups.push_back(Term::agent(*duplicator, {Term::name(a), Term::name(b)}));
      }
      Rule r{*duplicator,
             symbol,
             {Term::agent(symbol, std::move(first)),
              Term::agent(symbol, std::move(second))},
             std::move(dups)};
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace inet
