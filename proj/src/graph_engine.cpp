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

#include "inet/graph_engine.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace inet {

namespace {

bool is_principal(const PortNet& net, Endpoint e) {
  return !e.is_interface() && !e.is_none() && net.nodes[e.node].alive &&
         net.nodes[e.node].is_principal(e.port);
}

ActivePair make_pair(Endpoint a, Endpoint b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

bool still_active(const PortNet& net, const ActivePair& p) {
  return net.nodes[p.a.node].alive && net.nodes[p.b.node].alive &&
         net.peer(p.a) == p.b;
}

std::string node_label(const PortNet& net, int node) {
  return net.nodes[node].symbol + "#" + std::to_string(node);
}

// Signature holding only the amb symbols seen in `net`, so rule bodies that
// create amb nodes flag them correctly.
Signature amb_signature(const PortNet& net) {
  Signature sig;
  for (const NetNode& n : net.nodes) {
    if (n.amb) sig.declare(n.symbol, n.arity(), Attribute::kAmb);
  }
  return sig;
}

class Rewriter {
 public:
  Rewriter(PortNet& net, const RuleSet& rules)
      : net_(net), rules_(rules), amb_sig_(amb_signature(net)) {}

  enum class Kind { kRule, kAmb, kBlocked };

  Kind classify(const ActivePair& p) const {
    const NetNode& x = net_.nodes[p.a.node];
    const NetNode& y = net_.nodes[p.b.node];
    if (x.amb && y.amb) return Kind::kBlocked;
    if (x.amb || y.amb) return Kind::kAmb;
    return rules_.find(x.symbol, y.symbol) ? Kind::kRule : Kind::kBlocked;
  }

  // Returns the endpoint pairs the rewrite connected.
  std::vector<std::pair<Endpoint, Endpoint>> rewrite(const ActivePair& p) {
    const NetNode& x = net_.nodes[p.a.node];
    const NetNode& y = net_.nodes[p.b.node];
    if (x.amb) return amb(p.a, p.b);
    if (y.amb) return amb(p.b, p.a);
    return rule(p.a.node, p.b.node);
  }

 private:
  using Terminal = Linker::Terminal;

  // Replaces the deleted ports by virtual points wired to what they faced.
  std::map<Endpoint, Terminal> detach(Linker& linker,
                                      const std::vector<Endpoint>& deleted) {
    std::map<Endpoint, Terminal> point;
    for (Endpoint d : deleted) point[d] = linker.point();
    for (Endpoint d : deleted) {
      Endpoint q = net_.peer(d);
      auto it = point.find(q);
      if (it != point.end()) {
        if (d < q) linker.link(point[d], it->second);
      } else {
        linker.link(point[d], linker.concrete(q));
      }
    }
    return point;
  }

  std::vector<std::pair<Endpoint, Endpoint>> rule(int a, int b) {
    const NetNode& x = net_.nodes[a];
    const NetNode& y = net_.nodes[b];
    Rule r = rules_.find(x.symbol, y.symbol)->oriented(x.symbol);
    std::vector<Endpoint> deleted;
    for (int k = 1; k <= x.arity(); ++k) deleted.push_back({a, k});
    for (int k = 1; k <= y.arity(); ++k) deleted.push_back({b, k});
    Linker linker(net_, &amb_sig_);
    auto point = detach(linker, deleted);
    net_.kill(a);
    net_.kill(b);
    std::unordered_map<std::string, Terminal> names;
    for (std::size_t i = 0; i < r.rhs_a.size(); ++i) {
      linker.emit(r.rhs_a[i], point[{a, static_cast<int>(i) + 1}], names);
    }
    for (std::size_t j = 0; j < r.rhs_b.size(); ++j) {
      linker.emit(r.rhs_b[j], point[{b, static_cast<int>(j) + 1}], names);
    }
    linker.resolve();
    return linker.connections();
  }

  // `at` is the amb port facing alpha's principal port `alpha`. Alpha moves
  // to m (port 2) and a (port 3) is joined to whatever faced the other
  // principal port.
  std::vector<std::pair<Endpoint, Endpoint>> amb(Endpoint at, Endpoint alpha) {
    int m = at.node;
    int other = at.port == 0 ? 1 : 0;
    std::vector<Endpoint> deleted{{m, other}, {m, 2}, {m, 3}};
    Linker linker(net_, &amb_sig_);
    auto point = detach(linker, deleted);
    net_.kill(m);
    linker.link(linker.concrete(alpha), point[{m, 2}]);
    linker.link(point[{m, 3}], point[{m, other}]);
    linker.resolve();
    return linker.connections();
  }

  PortNet& net_;
  const RuleSet& rules_;
  Signature amb_sig_;
};

// Walks from an auxiliary port up to the root of its tree, reporting whether
// that tree closes on itself.
bool in_cyclic_tree(const PortNet& net, int node) {
  std::unordered_set<int> seen;
  int cur = node;
  while (true) {
    if (!seen.insert(cur).second) return true;
    Endpoint up = net.nodes[cur].peers[0];
    if (up.is_interface()) return false;
    const NetNode& parent = net.nodes[up.node];
    if (parent.is_principal(up.port)) {
      if (up.port == 0) return false;
      // Root wired to an amb's second principal port: cyclic when that amb
      // hangs inside the same tree.
      int v = up.node;
      std::unordered_set<int> chain;
      while (chain.insert(v).second) {
        if (v == cur) return true;
        Endpoint u = net.nodes[v].peers[0];
        if (u.is_interface() || net.nodes[u.node].is_principal(u.port)) break;
        v = u.node;
      }
      return false;
    }
    cur = up.node;
  }
}

}  // namespace

std::vector<ActivePair> active_pairs(const PortNet& net) {
  std::vector<ActivePair> out;
  for (std::size_t n = 0; n < net.nodes.size(); ++n) {
    const NetNode& node = net.nodes[n];
    if (!node.alive) continue;
    for (int k = 0; k <= std::min(node.arity(), node.amb ? 1 : 0); ++k) {
      Endpoint self{static_cast<int>(n), k};
      Endpoint q = node.peers[k];
      if (is_principal(net, q) && self < q) out.push_back({self, q});
    }
  }
  return out;
}

bool graph_head_normal(const PortNet& net) {
  for (std::size_t i = 0; i < net.head_arity; ++i) {
    Endpoint p = net.interface[i];
    if (p.is_interface() || p.port == 0) continue;
    // A name inside some tree: fine when the tree is a head term or cyclic.
    int cur = p.node;
    std::unordered_set<int> seen;
    bool ok = false;
    while (true) {
      if (!seen.insert(cur).second) {
        ok = true;
        break;
      }
      Endpoint up = net.nodes[cur].peers[0];
      if (up.is_interface()) {
        ok = static_cast<std::size_t>(up.port) < net.head_arity;
        break;
      }
      if (net.nodes[up.node].is_principal(up.port)) {
        ok = in_cyclic_tree(net, cur);
        break;
      }
      cur = up.node;
    }
    if (!ok) return false;
  }
  return true;
}

GraphOutcome graph_reduce(const PortNet& input, const RuleSet& rules,
                          const GraphOptions& options) {
  GraphOutcome out;
  out.net = input;
  PortNet& net = out.net;
  Rewriter rewriter(net, rules);
  std::mt19937_64 rng(options.policy.seed);

  std::map<std::uint64_t, ActivePair> agenda;  // by age
  std::set<std::pair<Endpoint, Endpoint>> queued;
  std::vector<ActivePair> blocked;
  std::uint64_t age = 0;
  auto enqueue = [&](Endpoint a, Endpoint b) {
    ActivePair p = make_pair(a, b);
    if (queued.insert({p.a, p.b}).second) agenda.emplace(age++, p);
  };
  for (const ActivePair& p : active_pairs(net)) enqueue(p.a, p.b);

  auto pick = [&]() -> std::map<std::uint64_t, ActivePair>::iterator {
    if (options.fair) return agenda.begin();
    switch (options.policy.kind) {
      case PolicyKind::kLifo:
        return std::prev(agenda.end());
      case PolicyKind::kRandom: {
        auto it = agenda.begin();
        std::advance(it, static_cast<long>(rng() % agenda.size()));
        return it;
      }
      default:
        return agenda.begin();
    }
  };

  while (true) {
    if (options.strategy == GraphStrategy::kHead && graph_head_normal(net)) {
      out.kind = OutcomeKind::kHeadNormal;
      break;
    }
    if (agenda.empty()) {
      out.kind = OutcomeKind::kNormal;
      break;
    }
    auto it = pick();
    ActivePair p = it->second;
    if (!still_active(net, p)) {
      queued.erase({p.a, p.b});
      agenda.erase(it);
      continue;
    }
    if (rewriter.classify(p) == Rewriter::Kind::kBlocked) {
      queued.erase({p.a, p.b});
      agenda.erase(it);
      blocked.push_back(p);
      continue;
    }
    if (out.interactions >= options.limit) {
      out.kind = OutcomeKind::kLimitExceeded;
      break;
    }
    queued.erase({p.a, p.b});
    agenda.erase(it);
    std::string what;
    if (options.trace) {
      what = node_label(net, p.a.node) + " >< " + node_label(net, p.b.node);
    }
    bool is_amb = rewriter.classify(p) == Rewriter::Kind::kAmb;
    for (const auto& [a, b] : rewriter.rewrite(p)) {
      if (is_principal(net, a) && is_principal(net, b)) enqueue(a, b);
    }
    ++out.interactions;
    if (is_amb) ++out.amb_interactions;
    if (options.trace) {
      GraphTraceEvent ev{out.interactions, what, &net};
      options.trace(ev);
    }
  }

  std::set<BlockedPair> stuck;
  for (const ActivePair& p : blocked) {
    if (still_active(net, p)) {
      stuck.insert(pair_key(net.nodes[p.a.node].symbol, net.nodes[p.b.node].symbol));
    }
  }
  out.blocked.assign(stuck.begin(), stuck.end());
  if (out.kind == OutcomeKind::kNormal && !out.blocked.empty()) {
    out.kind = OutcomeKind::kBlocked;
  }
  net.compact();
  return out;
}

RoundResult parallel_round(const PortNet& input, const RuleSet& rules) {
  RoundResult out;
  out.net = input;
  PortNet& net = out.net;
  for (const NetNode& n : net.nodes) {
    if (n.alive && n.amb) {
      throw AmbError("parallel rounds are defined for nets without amb nodes");
    }
  }
  std::vector<ActivePair> pairs = active_pairs(net);
  std::unordered_set<int> used;
  for (const ActivePair& p : pairs) {
    if (!used.insert(p.a.node).second || !used.insert(p.b.node).second) {
      throw std::logic_error("active pairs share a node");
    }
  }
  Rewriter rewriter(net, rules);
  for (const ActivePair& p : pairs) {
    if (rewriter.classify(p) != Rewriter::Kind::kRule) continue;
    rewriter.rewrite(p);
    ++out.rewrites;
  }
  net.compact();
  return out;
}

ParallelResult parallel_reduce(const PortNet& input, const RuleSet& rules,
                               std::uint64_t max_rounds) {
  ParallelResult out;
  out.net = input;
  while (true) {
    RoundResult r = parallel_round(out.net, rules);
    if (r.rewrites == 0) break;
    if (out.rounds >= max_rounds) {
      out.limit_exceeded = true;
      break;
    }
    out.net = std::move(r.net);
    ++out.rounds;
    out.rewrites += r.rewrites;
  }
  return out;
}

}  // namespace inet
