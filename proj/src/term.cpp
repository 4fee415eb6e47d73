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

#include "inet/term.hpp"

#include <charconv>

namespace inet {

struct Term::Node {
  bool is_name;
  std::string label;
  std::vector<Term> args;
  std::size_t size;
};

Term Term::name(std::string id) {
  return Term(std::make_shared<const Node>(Node{true, std::move(id), {}, 1}));
}

Term Term::agent(std::string symbol, std::vector<Term> args) {
  std::size_t size = 1;
  for (const Term& a : args) size += a.size();
  return Term(std::make_shared<const Node>(
      Node{false, std::move(symbol), std::move(args), size}));
}

bool Term::is_name() const { return node_->is_name; }
const std::string& Term::label() const { return node_->label; }
const std::vector<Term>& Term::args() const { return node_->args; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->is_name != b.node_->is_name || a.node_->size != b.node_->size ||
      a.node_->label != b.node_->label) {
    return false;
  }
  return a.node_->args == b.node_->args;
}

void add_names(const Term& t, NameCounts& out) {
  if (t.is_name()) {
    ++out[t.label()];
    return;
  }
  for (const Term& a : t.args()) add_names(a, out);
}

NameCounts names_of(const Term& t) {
  NameCounts out;
  add_names(t, out);
  return out;
}

NameCounts names_of(const Equation& e) {
  NameCounts out;
  add_names(e.left, out);
  add_names(e.right, out);
  return out;
}

NameCounts names_of(const Configuration& c) {
  NameCounts out;
  for (const Term& t : c.head) add_names(t, out);
  for (const Equation& e : c.equations) {
    add_names(e.left, out);
    add_names(e.right, out);
  }
  return out;
}

std::size_t count_name(const Term& t, std::string_view x) {
  if (t.is_name()) return t.label() == x ? 1 : 0;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += count_name(a, x);
  return n;
}

bool contains_name(const Term& t, std::string_view x) {
  if (t.is_name()) return t.label() == x;
  for (const Term& a : t.args()) {
    if (contains_name(a, x)) return true;
  }
  return false;
}

std::set<std::string> free_names(const Configuration& c) {
  std::set<std::string> out;
  for (const auto& [name, count] : names_of(c)) {
    if (count == 1) out.insert(name);
  }
  return out;
}

std::optional<Term> replace_name(const Term& t, std::string_view x,
                                 const Term& u) {
  if (t.is_name()) {
    if (t.label() == x) return u;
    return std::nullopt;
  }
  const std::vector<Term>& args = t.args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (auto replaced = replace_name(args[i], x, u)) {
      std::vector<Term> next = args;
      next[i] = std::move(*replaced);
      return Term::agent(t.label(), std::move(next));
    }
  }
  return std::nullopt;
}

Term rename(const Term& t, std::string_view x, const std::string& y) {
  std::size_t occurrences = count_name(t, x);
  if (occurrences == 0) {
    throw RenameError("rename: name '" + std::string(x) + "' does not occur");
  }
  if (occurrences > 1) {
    throw RenameError("rename: name '" + std::string(x) +
                      "' is bound (occurs twice)");
  }
  if (count_name(t, y) != 0) {
    throw RenameError("rename: target name '" + y + "' already occurs");
  }
  return *replace_name(t, x, Term::name(y));
}

Term substitute(const Term& t, std::string_view x, const Term& u) {
  NameCounts tn = names_of(t);
  auto it = tn.find(std::string(x));
  if (it == tn.end()) {
    throw SubstError("substitute: name '" + std::string(x) +
                     "' does not occur");
  }
  if (it->second != 1) {
    throw SubstError("substitute: name '" + std::string(x) +
                     "' occurs more than once");
  }
  tn.erase(it);
  NameCounts un = names_of(u);
  for (const auto& [name, count] : un) {
    if (count > 2) {
      throw SubstError("substitute: name '" + name +
                       "' occurs more than twice in the replacement");
    }
    if (tn.count(name) != 0) {
      throw SubstError("substitute: name '" + name +
                       "' would break linearity");
    }
  }
  return *replace_name(t, x, u);
}

bool is_reserved_name(std::string_view name) {
  return !name.empty() && name.front() == '%';
}

namespace {

std::optional<std::uint64_t> reserved_index(std::string_view name) {
  if (name.size() < 2 || name.front() != '%') return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(name.data() + 1, name.data() + name.size(), value);
  if (ec != std::errc() || ptr != name.data() + name.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

NameSupply NameSupply::after(const Configuration& c) {
  std::uint64_t start = 0;
  for (const auto& [name, count] : names_of(c)) {
    if (auto k = reserved_index(name)) start = std::max(start, *k + 1);
  }
  return NameSupply(start);
}

std::string NameSupply::next() { return "%" + std::to_string(next_++); }

}  // namespace inet
