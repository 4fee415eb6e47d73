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

#ifndef INET_CALCULUS_HPP_
#define INET_CALCULUS_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inet/rules.hpp"
#include "inet/term.hpp"

namespace inet {

enum class RedexKind { kInteraction, kIndirection, kCollect };

struct Redex {
  RedexKind kind = RedexKind::kInteraction;
  // Index of the equation the redex lives in.
  std::size_t equation = 0;
  // Indirection and collect: the substituted name.
  std::string name;
  // Indirection: the equation receiving the substitution. Collect: the head
  // position receiving it.
  std::size_t target = 0;
  // Interaction: the two symbols, as they appear left and right.
  std::string symbol_a, symbol_b;

  friend bool operator==(const Redex&, const Redex&) = default;
};

std::string describe(const Redex& r);

struct Stats {
  std::uint64_t interactions = 0;
  std::uint64_t indirections = 0;
  std::uint64_t collects = 0;
  std::uint64_t total = 0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

// {"interactions": .., "indirections": .., "collects": .., "total": ..}
std::string stats_json(const Stats& s);

enum class PolicyKind { kFifo, kLifo, kRandom, kInteractionFirst };

struct SchedulerPolicy {
  PolicyKind kind = PolicyKind::kFifo;
  std::uint64_t seed = 0;

  static SchedulerPolicy fifo() { return {PolicyKind::kFifo, 0}; }
  static SchedulerPolicy lifo() { return {PolicyKind::kLifo, 0}; }
  static SchedulerPolicy random(std::uint64_t seed) {
    return {PolicyKind::kRandom, seed};
  }
  static SchedulerPolicy interaction_first() {
    return {PolicyKind::kInteractionFirst, 0};
  }
};

std::string_view policy_name(PolicyKind k);

enum class OutcomeKind { kNormal, kHeadNormal, kLimitExceeded, kBlocked };

std::string_view outcome_name(OutcomeKind k);

using BlockedPair = std::pair<std::string, std::string>;

struct Outcome {
  OutcomeKind kind = OutcomeKind::kNormal;
  Configuration configuration;
  Stats stats;
  // Active pairs without a rule, each as (smaller, larger) symbol.
  std::vector<BlockedPair> blocked;
};

class NoRuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered by (equation, kind, name). An equation x = t with x in t and an
// equation whose name side is globally free contribute nothing; when both
// occurrences of x are whole equation sides, the single resulting
// indirection is attributed to the older equation.
std::vector<Redex> find_redexes(const Configuration& c, const RuleSet& rules);

// Agent pairs facing each other in an equation with no applicable rule.
std::vector<BlockedPair> blocked_pairs(const Configuration& c,
                                       const RuleSet& rules);

// Equations keep their relative order; an interaction appends its new
// equations at the end.
Configuration step(const Configuration& c, const Redex& r, const RuleSet& rules,
                   NameSupply& supply);

struct TraceEvent {
  std::uint64_t index = 0;  // 1-based step number
  Redex redex;
  const Configuration* configuration = nullptr;  // state after the step
};

struct ReduceOptions {
  std::uint64_t limit = 1'000'000;
  SchedulerPolicy policy;
  std::function<void(const TraceEvent&)> trace;
  // When false only indirections and collects fire, and the outcome is
  // Normal with respect to those two rules.
  bool allow_interactions = true;
};

Outcome reduce(const Configuration& c, const RuleSet& rules,
               const ReduceOptions& options = {});
Outcome reduce(const Configuration& c, const RuleSet& rules,
               const SchedulerPolicy& policy, std::uint64_t limit);

// Demand-driven: only redexes reachable from the head fire, and reduction
// stops as soon as the configuration is head-normal.
Outcome reduce_head(const Configuration& c, const RuleSet& rules,
                    const ReduceOptions& options = {});

enum class HeadClass { kAgentHeaded, kOpenWire, kCyclicTree, kNotHeadNormal };

std::string_view head_class_name(HeadClass h);

// A head name whose partner is another head entry, or which is free, is an
// open wire.
std::vector<HeadClass> classify_head(const Configuration& c);
bool is_head_normal(const Configuration& c);

// An equation y = s with y occurring in s.
bool is_cyclic(const Equation& e);

}  // namespace inet

#endif  // INET_CALCULUS_HPP_
