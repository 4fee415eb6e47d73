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

#include "inet/validate.hpp"

namespace inet {

namespace {

void check_term(const Signature& signature, const Term& t,
                const std::string& location, std::vector<Violation>& out) {
  if (t.is_name()) {
    if (t.label().empty()) out.push_back({location, "empty name"});
    return;
  }
  const SymbolInfo* info = signature.find(t.label());
  if (!info) {
    out.push_back({location, "undeclared symbol '" + t.label() + "'"});
  } else if (static_cast<std::size_t>(info->arity) != t.arity()) {
    out.push_back({location, "symbol '" + t.label() + "' has arity " +
                                 std::to_string(info->arity) + " but " +
                                 std::to_string(t.arity()) +
                                 " arguments were given"});
  }
  for (const Term& a : t.args()) check_term(signature, a, location, out);
}

}  // namespace

std::vector<Violation> validate_signature(const Signature& signature) {
  std::vector<Violation> out;
  int erasers = 0, duplicators = 0, ambs = 0;
  for (const auto& [name, info] : signature.symbols()) {
    std::string loc = "symbol " + name;
    if (name.empty()) out.push_back({loc, "empty symbol name"});
    if (info.arity < 0) out.push_back({loc, "negative arity"});
    switch (info.attribute) {
      case Attribute::kEraser:
        ++erasers;
        if (info.arity != 0) out.push_back({loc, "an eraser must have arity 0"});
        break;
      case Attribute::kDuplicator:
        ++duplicators;
        if (info.arity != 2) {
          out.push_back({loc, "a duplicator must have arity 2"});
        }
        break;
      case Attribute::kAmb:
        ++ambs;
        if (info.arity != 3) out.push_back({loc, "an amb symbol must have arity 3"});
        break;
      case Attribute::kPlain:
        break;
    }
  }
  if (erasers > 1) out.push_back({"signature", "more than one @eraser symbol"});
  if (duplicators > 1) {
    out.push_back({"signature", "more than one @duplicator symbol"});
  }
  if (ambs > 1) out.push_back({"signature", "more than one @amb symbol"});
  return out;
}

std::vector<Violation> validate_term(const Signature& signature,
                                     const Term& term,
                                     const std::string& location) {
  std::vector<Violation> out;
  check_term(signature, term, location, out);
  return out;
}

std::vector<Violation> validate_rule(const Signature& signature,
                                     const Rule& rule) {
  std::vector<Violation> out;
  std::string loc = "rule " + rule.lhs_a + " >< " + rule.lhs_b;
  for (const std::string* side : {&rule.lhs_a, &rule.lhs_b}) {
    const SymbolInfo* info = signature.find(*side);
    if (!info) {
      out.push_back({loc, "undeclared symbol '" + *side + "'"});
      continue;
    }
    if (info->attribute == Attribute::kAmb) {
      out.push_back({loc, "amb symbol '" + *side +
                              "' interacts through built-in rules only"});
    }
    const auto& rhs = side == &rule.lhs_a ? rule.rhs_a : rule.rhs_b;
    if (static_cast<std::size_t>(info->arity) != rhs.size()) {
      out.push_back({loc, "symbol '" + *side + "' has arity " +
                              std::to_string(info->arity) + " but " +
                              std::to_string(rhs.size()) +
                              " right-hand terms were given"});
    }
  }
  NameCounts names;
  for (const Term& t : rule.rhs_a) {
    check_term(signature, t, loc, out);
    add_names(t, names);
  }
  for (const Term& t : rule.rhs_b) {
    check_term(signature, t, loc, out);
    add_names(t, names);
  }
  std::string bad;
  for (const auto& [name, count] : names) {
    if (count != 2) {
      if (!bad.empty()) bad += ", ";
      bad += name + " (" + std::to_string(count) + "x)";
    }
  }
  if (!bad.empty()) {
    out.push_back({loc, "linearity: every name must occur exactly twice: " + bad});
  }
  return out;
}

std::vector<Violation> validate_configuration(const Signature& signature,
                                              const Configuration& config,
                                              const std::string& location) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < config.head.size(); ++i) {
    check_term(signature, config.head[i], location + ": head[" +
                                             std::to_string(i) + "]",
               out);
  }
  for (std::size_t i = 0; i < config.equations.size(); ++i) {
    std::string loc = location + ": equation " + std::to_string(i);
    check_term(signature, config.equations[i].left, loc, out);
    check_term(signature, config.equations[i].right, loc, out);
  }
  for (const auto& [name, count] : names_of(config)) {
    if (count > 2) {
      out.push_back({location, "name " + name + " occurs " +
                                   std::to_string(count) +
                                   " times (at most 2 allowed)"});
    }
  }
  return out;
}

std::vector<Violation> validate(const Signature& signature,
                                const RuleSet& rules,
                                const Configuration& config) {
  std::vector<Violation> out = validate_signature(signature);
  for (const auto& [key, rule] : rules.explicit_rules()) {
    auto v = validate_rule(signature, rule);
    out.insert(out.end(), v.begin(), v.end());
  }
  auto v = validate_configuration(signature, config);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace inet
