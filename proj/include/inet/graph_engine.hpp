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

#ifndef INET_GRAPH_ENGINE_HPP_
#define INET_GRAPH_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "inet/calculus.hpp"
#include "inet/port_net.hpp"
#include "inet/rules.hpp"

namespace inet {

// Two nodes wired principal to principal.
struct ActivePair {
  Endpoint a;
  Endpoint b;

  friend bool operator==(const ActivePair&, const ActivePair&) = default;
};

std::vector<ActivePair> active_pairs(const PortNet& net);

enum class GraphStrategy { kFull, kHead };

struct GraphTraceEvent {
  std::uint64_t index = 0;
  std::string description;  // e.g. "Add#3 >< S#5"
  const PortNet* net = nullptr;
};

struct GraphOptions {
  // kInteractionFirst behaves as kFifo: every graph step is an interaction.
  SchedulerPolicy policy;
  // Oldest enabled pair first, whatever the policy.
  bool fair = false;
  std::uint64_t limit = 1'000'000;
  GraphStrategy strategy = GraphStrategy::kFull;
  std::function<void(const GraphTraceEvent&)> trace;
};

struct GraphOutcome {
  OutcomeKind kind = OutcomeKind::kNormal;
  PortNet net;
  std::uint64_t interactions = 0;      // every rewrite, amb ones included
  std::uint64_t amb_interactions = 0;
  std::vector<BlockedPair> blocked;
};

GraphOutcome graph_reduce(const PortNet& net, const RuleSet& rules,
                          const GraphOptions& options = {});

// Head normal form read off the graph: each head port reaches a principal
// port, another interface port, or a node of a closed tree.
bool graph_head_normal(const PortNet& net);

class AmbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RoundResult {
  PortNet net;
  std::uint64_t rewrites = 0;
};

// Rewrites every active pair present at the start of the round. Pairs without
// a rule are left in place.
RoundResult parallel_round(const PortNet& net, const RuleSet& rules);

struct ParallelResult {
  PortNet net;
  std::uint64_t rounds = 0;
  std::uint64_t rewrites = 0;
  bool limit_exceeded = false;
};

// Rounds until no rewritable pair remains.
ParallelResult parallel_reduce(const PortNet& net, const RuleSet& rules,
                               std::uint64_t max_rounds = 1'000'000);

}  // namespace inet

#endif  // INET_GRAPH_ENGINE_HPP_
