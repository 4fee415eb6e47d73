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

#ifndef INET_TERM_HPP_
#define INET_TERM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inet {

// A term of the interaction calculus: either a name or an agent applied to
// one subterm per auxiliary port. Terms are immutable and cheap to copy;
// subtrees are shared.
class Term {
 public:
  static Term name(std::string id);
  static Term agent(std::string symbol, std::vector<Term> args = {});

  bool is_name() const;
  bool is_agent() const { return !is_name(); }

  // Name id for names, symbol for agents.
  const std::string& label() const;
  const std::vector<Term>& args() const;
  std::size_t arity() const { return args().size(); }

  // Number of tree nodes (names count as one).
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// An unordered pair of terms. Comparison ignores orientation.
struct Equation {
  Term left;
  Term right;

  friend bool operator==(const Equation& a, const Equation& b) {
    return (a.left == b.left && a.right == b.right) ||
           (a.left == b.right && a.right == b.left);
  }
};

// <head | equations>. The head is ordered; equations form a multiset.
struct Configuration {
  std::vector<Term> head;
  std::vector<Equation> equations;
};

// Multiset of names, as name -> multiplicity.
using NameCounts = std::map<std::string, int>;

NameCounts names_of(const Term& t);
NameCounts names_of(const Equation& e);
NameCounts names_of(const Configuration& c);
void add_names(const Term& t, NameCounts& out);

bool contains_name(const Term& t, std::string_view x);
std::size_t count_name(const Term& t, std::string_view x);

// Names occurring exactly once in the configuration.
std::set<std::string> free_names(const Configuration& c);

class RenameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SubstError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// t[x := y]. Requires x to occur exactly once in t and y not at all.
Term rename(const Term& t, std::string_view x, const std::string& y);

// t[x := u]. Requires x to occur exactly once in t and the names of u to be
// disjoint from the remaining names of t.
Term substitute(const Term& t, std::string_view x, const Term& u);

// Replaces the first occurrence of x without checking linearity. Returns
// nullopt when x does not occur.
std::optional<Term> replace_name(const Term& t, std::string_view x,
                                 const Term& u);

// Monotone supply of reserved names %0, %1, ... for one reduction session.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::uint64_t start) : next_(start) {}

  // A supply whose names cannot collide with any %k already in `c`.
  static NameSupply after(const Configuration& c);

  std::string next();
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_ = 0;
};

bool is_reserved_name(std::string_view name);

}  // namespace inet

#endif  // INET_TERM_HPP_
