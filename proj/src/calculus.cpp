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

#include "inet/calculus.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace inet {

std::string describe(const Redex& r) {
  switch (r.kind) {
    case RedexKind::kInteraction:
      return "interaction " + r.symbol_a + " >< " + r.symbol_b + " in eq " +
             std::to_string(r.equation);
    case RedexKind::kIndirection:
      return "indirection " + r.name + " from eq " + std::to_string(r.equation) +
             " into eq " + std::to_string(r.target);
    case RedexKind::kCollect:
      return "collect " + r.name + " from eq " + std::to_string(r.equation) +
             " into head " + std::to_string(r.target);
  }
  return "?";
}

std::string stats_json(const Stats& s) {
  return "{\"interactions\": " + std::to_string(s.interactions) +
         ", \"indirections\": " + std::to_string(s.indirections) +
         ", \"collects\": " + std::to_string(s.collects) +
         ", \"total\": " + std::to_string(s.total) + "}";
}

std::string_view policy_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::kFifo: return "fifo";
    case PolicyKind::kLifo: return "lifo";
    case PolicyKind::kRandom: return "random";
    case PolicyKind::kInteractionFirst: return "interaction-first";
  }
  return "fifo";
}

std::string_view outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::kNormal: return "Normal";
    case OutcomeKind::kHeadNormal: return "HeadNormal";
    case OutcomeKind::kLimitExceeded: return "LimitExceeded";
    case OutcomeKind::kBlocked: return "Blocked";
  }
  return "Normal";
}

std::string_view head_class_name(HeadClass h) {
  switch (h) {
    case HeadClass::kAgentHeaded: return "AgentHeaded";
    case HeadClass::kOpenWire: return "OpenWire";
    case HeadClass::kCyclicTree: return "CyclicTree";
    case HeadClass::kNotHeadNormal: return "NotHeadNormal";
  }
  return "NotHeadNormal";
}

bool is_cyclic(const Equation& e) {
  return (e.left.is_name() && contains_name(e.right, e.left.label())) ||
         (e.right.is_name() && contains_name(e.left, e.right.label()));
}

namespace {

bool redex_less(const Redex& a, const Redex& b) {
  if (a.equation != b.equation) return a.equation < b.equation;
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.name < b.name;
}

// Where one occurrence of a name lives: a head entry or an equation slot.
struct Loc {
  bool head = false;
  std::size_t index = 0;
  bool whole = false;  // the occurrence is an entire head entry or side
};

bool same_container(const Loc& a, const Loc& b) {
  return a.head == b.head && a.index == b.index;
}

// A reduction session. Equations live in slots whose id is their creation
// order; removed slots stay empty so ids never shift.
class Session {
 public:
  Session(const Configuration& c, const RuleSet& rules, NameSupply& supply)
      : rules_(rules), supply_(supply), head_(c.head) {
    for (std::size_t i = 0; i < head_.size(); ++i) index_head(i);
    for (const Equation& e : c.equations) add_slot(e);
    for (std::size_t s = 0; s < slots_.size(); ++s) refresh(s);
  }

  const Stats& stats() const { return stats_; }

  Configuration snapshot() const {
    Configuration c{head_, {}};
    for (const auto& s : slots_) {
      if (s) c.equations.push_back(*s);
    }
    return c;
  }

  // Maps slot ids to positions in snapshot().
  std::vector<std::size_t> slot_positions() const {
    std::vector<std::size_t> pos(slots_.size(), 0);
    std::size_t k = 0;
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      pos[s] = k;
      if (slots_[s]) ++k;
    }
    return pos;
  }

  std::vector<Redex> all_redexes() const {
    std::vector<Redex> out;
    for (std::size_t s : active_) {
      out.insert(out.end(), cache_[s].begin(), cache_[s].end());
    }
    return out;
  }

  std::vector<BlockedPair> blocked(const std::unordered_set<std::size_t>* only =
                                       nullptr) const {
    std::set<BlockedPair> out;
    for (const auto& [slot, pair] : blocked_) {
      if (!only || only->count(slot)) out.insert(pair);
    }
    return {out.begin(), out.end()};
  }

  bool has_redex() const { return !active_.empty(); }

  std::optional<Redex> choose(const SchedulerPolicy& policy, std::mt19937_64& rng,
                              bool allow_interactions,
                              const std::unordered_set<std::size_t>* only) {
    if (active_.empty()) return std::nullopt;
    if (allow_interactions && !only) {
      switch (policy.kind) {
        case PolicyKind::kFifo:
          return cache_[*active_.begin()].front();
        case PolicyKind::kLifo:
          return cache_[*active_.rbegin()].front();
        case PolicyKind::kInteractionFirst:
          if (!interaction_slots_.empty()) {
            return cache_[*interaction_slots_.begin()].front();
          }
          return cache_[*active_.begin()].front();
        case PolicyKind::kRandom: {
          std::size_t n = 0;
          for (std::size_t s : active_) n += cache_[s].size();
          std::size_t k = rng() % n;
          for (std::size_t s : active_) {
            if (k < cache_[s].size()) return cache_[s][k];
            k -= cache_[s].size();
          }
          return std::nullopt;
        }
      }
    }
    std::vector<const Redex*> eligible;
    for (std::size_t s : active_) {
      if (only && only->count(s) == 0) continue;
      for (const Redex& r : cache_[s]) {
        if (!allow_interactions && r.kind == RedexKind::kInteraction) continue;
        eligible.push_back(&r);
      }
    }
    if (eligible.empty()) return std::nullopt;
    switch (policy.kind) {
      case PolicyKind::kFifo:
        return *eligible.front();
      case PolicyKind::kLifo: {
        std::size_t last = eligible.back()->equation;
        for (const Redex* r : eligible) {
          if (r->equation == last) return *r;
        }
        return *eligible.back();
      }
      case PolicyKind::kInteractionFirst:
        for (const Redex* r : eligible) {
          if (r->kind == RedexKind::kInteraction) return *r;
        }
        return *eligible.front();
      case PolicyKind::kRandom:
        return *eligible[rng() % eligible.size()];
    }
    return *eligible.front();
  }

  bool is_current(const Redex& r) const {
    if (r.equation >= cache_.size()) return false;
    const auto& v = cache_[r.equation];
    return std::find(v.begin(), v.end(), r) != v.end();
  }

  void apply(const Redex& r) {
    switch (r.kind) {
      case RedexKind::kInteraction:
        interact(r.equation);
        ++stats_.interactions;
        break;
      case RedexKind::kIndirection:
        indirect(r.equation, r.name, r.target);
        ++stats_.indirections;
        break;
      case RedexKind::kCollect:
        collect(r.equation, r.name, r.target);
        ++stats_.collects;
        break;
    }
    ++stats_.total;
  }

  std::vector<HeadClass> classify() const {
    std::vector<HeadClass> out;
    for (std::size_t i = 0; i < head_.size(); ++i) {
      const Term& t = head_[i];
      if (t.is_agent()) {
        out.push_back(HeadClass::kAgentHeaded);
        continue;
      }
      std::optional<Loc> p = partner(t.label(), Loc{true, i, true});
      if (!p || p->head) {
        out.push_back(HeadClass::kOpenWire);
      } else if (is_cyclic(*slots_[p->index])) {
        out.push_back(HeadClass::kCyclicTree);
      } else {
        out.push_back(HeadClass::kNotHeadNormal);
      }
    }
    return out;
  }

  bool head_normal() const {
    for (HeadClass h : classify()) {
      if (h == HeadClass::kNotHeadNormal) return false;
    }
    return true;
  }

  // Slots connected to the head by shared names, not entering cyclic trees.
  std::unordered_set<std::size_t> reachable() const {
    std::unordered_set<std::size_t> seen;
    std::vector<std::size_t> todo;
    auto visit_names = [&](const Term& t, const auto& self) -> void {
      if (t.is_name()) {
        auto it = occ_.find(t.label());
        if (it == occ_.end()) return;
        for (const Loc& l : it->second) {
          if (l.head || seen.count(l.index)) continue;
          seen.insert(l.index);
          if (!is_cyclic(*slots_[l.index])) todo.push_back(l.index);
        }
        return;
      }
      for (const Term& a : t.args()) self(a, self);
    };
    for (const Term& t : head_) visit_names(t, visit_names);
    while (!todo.empty()) {
      std::size_t s = todo.back();
      todo.pop_back();
      visit_names(slots_[s]->left, visit_names);
      visit_names(slots_[s]->right, visit_names);
    }
    return seen;
  }

 private:
  // -- occurrence index -----------------------------------------------------

  void index_term(const Term& t, Loc loc, bool top) {
    if (t.is_name()) {
      loc.whole = top;
      occ_[t.label()].push_back(loc);
      return;
    }
    for (const Term& a : t.args()) index_term(a, loc, false);
  }

  void unindex_term(const Term& t, const Loc& container) {
    if (t.is_name()) {
      auto it = occ_.find(t.label());
      if (it == occ_.end()) return;
      auto& v = it->second;
      v.erase(std::remove_if(v.begin(), v.end(),
                             [&](const Loc& l) { return same_container(l, container); }),
              v.end());
      if (v.empty()) occ_.erase(it);
      return;
    }
    for (const Term& a : t.args()) unindex_term(a, container);
  }

  void index_head(std::size_t i) { index_term(head_[i], Loc{true, i, false}, true); }

  void index_slot(std::size_t s) {
    index_term(slots_[s]->left, Loc{false, s, false}, true);
    index_term(slots_[s]->right, Loc{false, s, false}, true);
  }

  void unindex_slot(std::size_t s) {
    Loc c{false, s, false};
    unindex_term(slots_[s]->left, c);
    unindex_term(slots_[s]->right, c);
  }

  std::size_t add_slot(const Equation& e) {
    slots_.push_back(e);
    cache_.emplace_back();
    index_slot(slots_.size() - 1);
    return slots_.size() - 1;
  }

  // The other occurrence of x, seen from the container of `self`.
  std::optional<Loc> partner(const std::string& x, const Loc& self) const {
    auto it = occ_.find(x);
    if (it == occ_.end()) return std::nullopt;
    for (const Loc& l : it->second) {
      if (!same_container(l, self)) return l;
    }
    return std::nullopt;
  }

  // -- redex cache ----------------------------------------------------------

  void refresh(std::size_t s) {
    active_.erase(s);
    interaction_slots_.erase(s);
    blocked_.erase(s);
    cache_[s].clear();
    if (!slots_[s]) return;
    const Equation& e = *slots_[s];
    auto& out = cache_[s];
    if (e.left.is_agent() && e.right.is_agent()) {
      const Rule* rule = rules_.find(e.left.label(), e.right.label());
      if (rule) {
        Redex r;
        r.kind = RedexKind::kInteraction;
        r.equation = s;
        r.symbol_a = e.left.label();
        r.symbol_b = e.right.label();
        out.push_back(std::move(r));
        interaction_slots_.insert(s);
      } else {
        blocked_[s] = pair_key(e.left.label(), e.right.label());
      }
    } else {
      Loc self{false, s, true};
      for (const Term* side : {&e.left, &e.right}) {
        if (!side->is_name()) continue;
        std::optional<Loc> p = partner(side->label(), self);
        if (!p) continue;  // free, or cyclic within this equation
        Redex r;
        r.equation = s;
        r.name = side->label();
        r.target = p->index;
        if (p->head) {
          r.kind = RedexKind::kCollect;
        } else {
          if (p->whole && p->index < s) continue;  // attributed to p's slot
          r.kind = RedexKind::kIndirection;
        }
        out.push_back(std::move(r));
      }
      std::sort(out.begin(), out.end(), redex_less);
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    if (!out.empty()) active_.insert(s);
  }

  // Refreshes `slots` plus every slot holding the partner of a name in them.
  void refresh_around(const std::vector<std::size_t>& slots,
                      const std::vector<const Term*>& moved) {
    std::set<std::size_t> todo(slots.begin(), slots.end());
    auto collect_partners = [&](const Term& t, const auto& self) -> void {
      if (t.is_name()) {
        auto it = occ_.find(t.label());
        if (it == occ_.end()) return;
        for (const Loc& l : it->second) {
          if (!l.head) todo.insert(l.index);
        }
        return;
      }
      for (const Term& a : t.args()) self(a, self);
    };
    for (const Term* t : moved) collect_partners(*t, collect_partners);
    for (std::size_t s : todo) refresh(s);
  }

  // -- steps ----------------------------------------------------------------

  void interact(std::size_t s) {
    Equation e = *slots_[s];
    const Rule* found = rules_.find(e.left.label(), e.right.label());
    if (!found) {
      throw NoRuleError("no rule for " + e.left.label() + " >< " + e.right.label());
    }
    Rule rule = found->oriented(e.left.label());

    // One shared renaming for both sides, assigned in first-occurrence order.
    std::unordered_map<std::string, std::string> fresh;
    auto rename_all = [&](const Term& t, const auto& self) -> Term {
      if (t.is_name()) {
        auto [it, inserted] = fresh.emplace(t.label(), "");
        if (inserted) it->second = supply_.next();
        return Term::name(it->second);
      }
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(self(a, self));
      return Term::agent(t.label(), std::move(args));
    };
    std::vector<Equation> emitted;
    for (std::size_t i = 0; i < rule.rhs_a.size(); ++i) {
      emitted.push_back({e.left.args()[i], rename_all(rule.rhs_a[i], rename_all)});
    }
    for (std::size_t j = 0; j < rule.rhs_b.size(); ++j) {
      emitted.push_back({e.right.args()[j], rename_all(rule.rhs_b[j], rename_all)});
    }

    unindex_slot(s);
    slots_[s].reset();
    std::vector<std::size_t> touched{s};
    for (const Equation& ne : emitted) touched.push_back(add_slot(ne));
    std::vector<const Term*> moved;
    for (std::size_t k = 1; k < touched.size(); ++k) {
      moved.push_back(&slots_[touched[k]]->left);
      moved.push_back(&slots_[touched[k]]->right);
    }
    refresh_around(touched, moved);
  }

  // Splits a slot x = t into t, checking that x is a whole side.
  Term take_value(std::size_t s, const std::string& x) {
    const Equation& e = *slots_[s];
    if (e.left.is_name() && e.left.label() == x) return e.right;
    if (e.right.is_name() && e.right.label() == x) return e.left;
    throw std::invalid_argument("name " + x + " is not a side of equation");
  }

  void indirect(std::size_t s, const std::string& x, std::size_t f) {
    Term t = take_value(s, x);
    unindex_slot(s);
    slots_[s].reset();
    unindex_slot(f);
    Equation& target = *slots_[f];
    if (auto l = replace_name(target.left, x, t)) {
      target.left = *l;
    } else if (auto r = replace_name(target.right, x, t)) {
      target.right = *r;
    } else {
      throw std::invalid_argument("name " + x + " not found in target equation");
    }
    index_slot(f);
    refresh_around({s, f}, {&slots_[f]->left, &slots_[f]->right});
  }

  void collect(std::size_t s, const std::string& x, std::size_t i) {
    Term t = take_value(s, x);
    unindex_slot(s);
    slots_[s].reset();
    unindex_term(head_[i], Loc{true, i, false});
    auto h = replace_name(head_[i], x, t);
    if (!h) throw std::invalid_argument("name " + x + " not found in head");
    head_[i] = *h;
    index_head(i);
    refresh_around({s}, {&head_[i]});
  }

  const RuleSet& rules_;
  NameSupply& supply_;
  std::vector<Term> head_;
  std::vector<std::optional<Equation>> slots_;
  std::vector<std::vector<Redex>> cache_;
  std::set<std::size_t> active_;
  std::set<std::size_t> interaction_slots_;
  std::map<std::size_t, BlockedPair> blocked_;
  std::unordered_map<std::string, std::vector<Loc>> occ_;
  Stats stats_;
};

Outcome finish(Session& s, OutcomeKind kind) {
  Outcome o;
  o.kind = kind;
  o.configuration = s.snapshot();
  o.stats = s.stats();
  o.blocked = s.blocked();
  return o;
}

void emit_trace(const ReduceOptions& options, const Session& s, const Redex& r) {
  if (!options.trace) return;
  Configuration snap = s.snapshot();
  TraceEvent ev{s.stats().total, r, &snap};
  options.trace(ev);
}

}  // namespace

std::vector<Redex> find_redexes(const Configuration& c, const RuleSet& rules) {
  NameSupply supply = NameSupply::after(c);
  Session s(c, rules, supply);
  return s.all_redexes();
}

std::vector<BlockedPair> blocked_pairs(const Configuration& c,
                                       const RuleSet& rules) {
  NameSupply supply = NameSupply::after(c);
  Session s(c, rules, supply);
  return s.blocked();
}

Configuration step(const Configuration& c, const Redex& r, const RuleSet& rules,
                   NameSupply& supply) {
  Session s(c, rules, supply);
  if (!s.is_current(r)) {
    if (r.kind == RedexKind::kInteraction && r.equation < c.equations.size() &&
        c.equations[r.equation].left.is_agent() &&
        c.equations[r.equation].right.is_agent()) {
      throw NoRuleError("no rule for " + c.equations[r.equation].left.label() +
                        " >< " + c.equations[r.equation].right.label());
    }
    throw std::invalid_argument("not a redex of this configuration: " + describe(r));
  }
  s.apply(r);
  return s.snapshot();
}

Outcome reduce(const Configuration& c, const RuleSet& rules,
               const ReduceOptions& options) {
  NameSupply supply = NameSupply::after(c);
  Session s(c, rules, supply);
  std::mt19937_64 rng(options.policy.seed);
  while (true) {
    std::optional<Redex> r =
        s.choose(options.policy, rng, options.allow_interactions, nullptr);
    if (!r) break;
    if (s.stats().total >= options.limit) {
      return finish(s, OutcomeKind::kLimitExceeded);
    }
    std::vector<std::size_t> pos;
    Redex shown = *r;
    if (options.trace) {
      pos = s.slot_positions();
      shown.equation = pos[r->equation];
      if (r->kind == RedexKind::kIndirection) shown.target = pos[r->target];
    }
    s.apply(*r);
    emit_trace(options, s, shown);
  }
  Outcome o = finish(s, OutcomeKind::kNormal);
  if (!options.allow_interactions) {
    o.blocked.clear();
  } else if (!o.blocked.empty()) {
    o.kind = OutcomeKind::kBlocked;
  }
  return o;
}

Outcome reduce(const Configuration& c, const RuleSet& rules,
               const SchedulerPolicy& policy, std::uint64_t limit) {
  ReduceOptions options;
  options.policy = policy;
  options.limit = limit;
  return reduce(c, rules, options);
}

Outcome reduce_head(const Configuration& c, const RuleSet& rules,
                    const ReduceOptions& options) {
  NameSupply supply = NameSupply::after(c);
  Session s(c, rules, supply);
  std::mt19937_64 rng(options.policy.seed);
  while (true) {
    if (s.head_normal()) return finish(s, OutcomeKind::kHeadNormal);
    std::unordered_set<std::size_t> live = s.reachable();
    std::optional<Redex> r =
        s.choose(options.policy, rng, options.allow_interactions, &live);
    if (!r) {
      Outcome o = finish(s, OutcomeKind::kHeadNormal);
      if (!s.blocked(&live).empty()) {
        o.kind = OutcomeKind::kBlocked;
      } else if (!s.has_redex()) {
        o.kind = o.blocked.empty() ? OutcomeKind::kNormal : OutcomeKind::kBlocked;
      }
      return o;
    }
    if (s.stats().total >= options.limit) {
      return finish(s, OutcomeKind::kLimitExceeded);
    }
    Redex shown = *r;
    if (options.trace) {
      auto pos = s.slot_positions();
      shown.equation = pos[r->equation];
      if (r->kind == RedexKind::kIndirection) shown.target = pos[r->target];
    }
    s.apply(*r);
    emit_trace(options, s, shown);
  }
}

std::vector<HeadClass> classify_head(const Configuration& c) {
  RuleSet none;
  NameSupply supply;
  Session s(c, none, supply);
  return s.classify();
}

bool is_head_normal(const Configuration& c) {
  for (HeadClass h : classify_head(c)) {
    if (h == HeadClass::kNotHeadNormal) return false;
  }
  return true;
}

}  // namespace inet
