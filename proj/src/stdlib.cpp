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

#include "inet/stdlib.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace inet {

namespace {

struct Embedded {
  const char* name;
  const char* text;
};

const Embedded kPrograms[] = {
#include "inet/programs_embedded.inc"
};

Term name(const std::string& x) { return Term::name(x); }
Term agent(const std::string& s, std::vector<Term> args = {}) {
  return Term::agent(s, std::move(args));
}

// < r | m = Op(n, r) >
Configuration binary(const std::string& op, const Term& m, const Term& n) {
  return {{name("r")}, {{m, agent(op, {n, name("r")})}}};
}

Term truth(bool b) { return agent(b ? "T" : "F"); }

}  // namespace

std::vector<std::string> profile_names() {
  std::vector<std::string> out;
  for (const Embedded& p : kPrograms) out.emplace_back(p.name);
  return out;
}

std::string_view program_source(std::string_view name) {
  for (const Embedded& p : kPrograms) {
    if (name == p.name) return p.text;
  }
  throw std::out_of_range("no program named '" + std::string(name) + "'");
}

const Profile& profile(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Profile>, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return *it->second;
  std::string_view text = program_source(name);
  auto p = std::make_unique<Profile>(Profile{std::string(name), parse_system(text), text});
  return *cache.emplace(std::string(name), std::move(p)).first->second;
}

const Profile& nat_profile() { return profile("nat"); }
const Profile& cnat_profile() { return profile("cnat"); }
const Profile& bool_profile() { return profile("bool"); }
const Profile& dlist_profile() { return profile("dlist"); }
const Profile& comb_profile() { return profile("comb"); }
const Profile& lambda_profile() { return profile("lambda"); }
const Profile& amb_profile() { return profile("amb"); }
const Profile& endless_profile() { return profile("endless"); }

// ---------------------------------------------------------------------------
// Numbers

Term numeral(int n) {
  Term t = agent("Z");
  for (int k = 0; k < n; ++k) t = agent("S", {t});
  return t;
}

std::optional<int> denote_nat(const Term& t) {
  int n = 0;
  const Term* cur = &t;
  while (cur->is_agent() && cur->label() == "S" && cur->arity() == 1) {
    ++n;
    cur = &cur->args()[0];
  }
  if (cur->is_agent() && cur->label() == "Z" && cur->arity() == 0) return n;
  return std::nullopt;
}

std::optional<int> denote_nat(const Configuration& c) {
  if (c.head.size() != 1 || !c.equations.empty()) return std::nullopt;
  return denote_nat(c.head[0]);
}

Configuration nat_add(int m, int n) { return binary("Add", numeral(m), numeral(n)); }
Configuration nat_mult(int m, int n) { return binary("Mult", numeral(m), numeral(n)); }
Configuration nat_max(int m, int n) { return binary("Max", numeral(m), numeral(n)); }
Configuration nat_min(int m, int n) { return binary("Min", numeral(m), numeral(n)); }

Configuration nat_fact(int n) {
  return {{name("r")}, {{numeral(n), agent("Fact", {name("r")})}}};
}

Configuration nat_zero_test(int n) {
  return {{name("r")}, {{numeral(n), agent("ZeroTest", {name("r")})}}};
}

Configuration cnat_add(int m, int n) {
  auto chain = [](int k, const std::string& x) {
    Term t = name(x);
    for (int i = 0; i < k; ++i) t = agent("S", {t});
    return agent("C", {name(x), t});
  };
  return {{name("z")},
          {{chain(m, "x"), agent("Add", {chain(n, "y"), name("z")})}}};
}

std::optional<int> denote_cnat(const Configuration& c) {
  if (c.head.size() != 1 || !c.equations.empty()) return std::nullopt;
  const Term& t = c.head[0];
  if (!t.is_agent() || t.label() != "C" || t.arity() != 2) return std::nullopt;
  const Term& x = t.args()[0];
  if (!x.is_name()) return std::nullopt;
  int n = 0;
  const Term* cur = &t.args()[1];
  while (cur->is_agent() && cur->label() == "S" && cur->arity() == 1) {
    ++n;
    cur = &cur->args()[0];
  }
  if (cur->is_name() && cur->label() == x.label()) return n;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Booleans

std::optional<bool> denote_bool(const Configuration& c) {
  if (c.head.size() != 1 || !c.equations.empty()) return std::nullopt;
  const Term& t = c.head[0];
  if (t.is_agent() && t.arity() == 0) {
    if (t.label() == "T") return true;
    if (t.label() == "F") return false;
  }
  return std::nullopt;
}

Configuration bool_and(bool a, bool b) { return binary("And", truth(a), truth(b)); }
Configuration bool_or(bool a, bool b) { return binary("Or", truth(a), truth(b)); }
Configuration bool_same(bool a, bool b) { return binary("Same", truth(a), truth(b)); }

Configuration bool_not(bool a) {
  return {{name("r")}, {{truth(a), agent("Not", {name("r")})}}};
}

// ---------------------------------------------------------------------------
// Lists

Term dlist(const std::vector<Term>& elements, const std::string& hole) {
  Term tail = name(hole);
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    tail = agent("Cons", {*it, tail});
  }
  return agent("Diff", {tail, name(hole)});
}

Configuration dlist_append(const std::vector<Term>& a, const std::vector<Term>& b) {
  return {{name("r")}, {{dlist(a, "h1"), agent("Append", {dlist(b, "h2"), name("r")})}}};
}

std::optional<std::vector<Term>> denote_dlist(const Configuration& c) {
  if (c.head.size() != 1 || !c.equations.empty()) return std::nullopt;
  const Term& t = c.head[0];
  if (!t.is_agent() || t.label() != "Diff" || t.arity() != 2) return std::nullopt;
  const Term& hole = t.args()[1];
  if (!hole.is_name()) return std::nullopt;
  std::vector<Term> out;
  const Term* cur = &t.args()[0];
  while (cur->is_agent() && cur->label() == "Cons" && cur->arity() == 2) {
    out.push_back(cur->args()[0]);
    cur = &cur->args()[1];
  }
  if (cur->is_name() && cur->label() == hole.label()) return out;
  return std::nullopt;
}

Term cons_list(const std::vector<Term>& elements) {
  Term tail = agent("Nil");
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    tail = agent("Cons", {*it, tail});
  }
  return tail;
}

std::optional<std::vector<Term>> denote_list(const Term& t) {
  std::vector<Term> out;
  const Term* cur = &t;
  while (cur->is_agent() && cur->label() == "Cons" && cur->arity() == 2) {
    out.push_back(cur->args()[0]);
    cur = &cur->args()[1];
  }
  if (cur->is_agent() && cur->label() == "Nil" && cur->arity() == 0) return out;
  return std::nullopt;
}

Configuration list_append(const std::vector<Term>& a, const std::vector<Term>& b) {
  return binary("ListAppend", cons_list(a), cons_list(b));
}

Configuration list_interleave(const std::vector<Term>& a, const std::vector<Term>& b) {
  return binary("Interleave", cons_list(a), cons_list(b));
}

// ---------------------------------------------------------------------------
// Divergence and Amb

Configuration endless_net() {
  return {{name("x"), name("y")},
          {{agent("A", {name("x")}), agent("B", {agent("A", {name("y")})})}}};
}

namespace {

Configuration parallel(const std::string& op, AmbArg left, AmbArg right) {
  auto value = [](AmbArg a) { return truth(a == AmbArg::kTrue); };
  auto diverging = [](Term plug) {
    return Equation{agent("A", {std::move(plug)}), agent("B", {agent("A", {agent("Eps")})})};
  };
  Configuration c{{name("r")}, {}};
  Term second = right == AmbArg::kEndless ? name("b") : value(right);
  Term amb = agent("Amb", {second, agent(op, {name("a"), name("r")}), name("a")});
  if (left == AmbArg::kEndless) {
    c.equations.push_back(diverging(amb));
  } else {
    c.equations.push_back({value(left), amb});
  }
  if (right == AmbArg::kEndless) c.equations.push_back(diverging(name("b")));
  return c;
}

}  // namespace

Configuration parallel_or(AmbArg a, AmbArg b) { return parallel("Or", a, b); }
Configuration parallel_and(AmbArg a, AmbArg b) { return parallel("And", a, b); }

}  // namespace inet
