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

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "inet/alpha.hpp"

namespace inet::testing {

const Configuration& Example::config() const {
  return inet::profile(profile).system.nets.at(net);
}
const RuleSet& Example::rules() const { return inet::profile(profile).system.rules; }
const Signature& Example::signature() const {
  return inet::profile(profile).system.signature;
}

std::vector<Example> deterministic_examples() {
  std::vector<Example> out;
  for (const char* p : {"nat", "cnat", "bool", "dlist", "comb", "lambda"}) {
    for (const auto& [name, c] : inet::profile(p).system.nets) out.push_back({p, name});
  }
  return out;
}

Term N(const std::string& x) { return Term::name(x); }
Term A(const std::string& symbol, std::vector<Term> args) {
  return Term::agent(symbol, std::move(args));
}

Configuration parse_in(const std::string& p, const std::string& text) {
  return parse_configuration(text, inet::profile(p).system.signature);
}

std::string name_for(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "n" + std::to_string(k);
}

namespace {

int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, int percent) { return pick(rng, 0, 99) < percent; }

Term map_names(const Term& t, const std::function<Term(const std::string&)>& f) {
  if (t.is_name()) return f(t.label());
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(map_names(a, f));
  return Term::agent(t.label(), std::move(args));
}

std::vector<std::pair<std::string, int>> usable_symbols(const Signature& sig) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [s, info] : sig.symbols()) {
    if (info.attribute != Attribute::kAmb) out.emplace_back(s, info.arity);
  }
  return out;
}

// Leaves are either nullary agents or holes "?k".
Term shape(const std::vector<std::pair<std::string, int>>& syms, Rng& rng, int depth,
           bool force_agent, int& holes) {
  std::vector<std::size_t> nullary;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (syms[i].second == 0) nullary.push_back(i);
  }
  bool leaf = depth <= 0 || chance(rng, 35);
  if (leaf && !force_agent) {
    if (nullary.empty() || chance(rng, 60)) return Term::name("?" + std::to_string(holes++));
    return Term::agent(syms[nullary[pick(rng, 0, static_cast<int>(nullary.size()) - 1)]].first);
  }
  if (leaf && !nullary.empty()) {
    return Term::agent(syms[nullary[pick(rng, 0, static_cast<int>(nullary.size()) - 1)]].first);
  }
  const auto& [s, arity] = syms[pick(rng, 0, static_cast<int>(syms.size()) - 1)];
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) args.push_back(shape(syms, rng, depth - 1, false, holes));
  return Term::agent(s, std::move(args));
}

// Assigns names to holes: pairs share a name, the rest are free.
std::map<std::string, std::string> pair_holes(int holes, Rng& rng, int free_percent,
                                              bool all_paired, int& next_name) {
  std::vector<int> ids(holes);
  for (int i = 0; i < holes; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::map<std::string, std::string> out;
  std::size_t i = 0;
  while (i < ids.size()) {
    std::string name = name_for(next_name++);
    bool lone = i + 1 == ids.size() || (!all_paired && chance(rng, free_percent));
    out["?" + std::to_string(ids[i])] = name;
    if (!lone) out["?" + std::to_string(ids[i + 1])] = name;
    i += lone ? 1 : 2;
  }
  return out;
}

}  // namespace

Term random_term(const Signature& sig, Rng& rng, int depth, std::vector<std::string>& holes) {
  auto syms = usable_symbols(sig);
  int count = 0;
  Term t = shape(syms, rng, depth, false, count);
  for (int i = 0; i < count; ++i) holes.push_back("?" + std::to_string(i));
  return t;
}

Configuration random_config(const Signature& sig, Rng& rng, const ConfigShape& shape_opts) {
  auto syms = usable_symbols(sig);
  int holes = 0;
  Configuration c;
  int head = pick(rng, 0, shape_opts.max_head);
  for (int i = 0; i < head; ++i) {
    c.head.push_back(chance(rng, 30) ? Term::name("?" + std::to_string(holes++))
                                     : shape(syms, rng, shape_opts.max_depth, true, holes));
  }
  int eqs = pick(rng, 0, shape_opts.max_equations);
  for (int i = 0; i < eqs; ++i) {
    auto side = [&]() {
      if (!shape_opts.agent_equations && chance(rng, 20)) {
        return Term::name("?" + std::to_string(holes++));
      }
      return shape(syms, rng, shape_opts.max_depth, true, holes);
    };
    Term l = side();
    Term r = side();
    c.equations.push_back({l, r});
  }
  int next_name = 0;
  auto names = pair_holes(holes, rng, shape_opts.free_percent, false, next_name);
  auto f = [&](const std::string& h) { return Term::name(names.at(h)); };
  for (Term& t : c.head) t = map_names(t, f);
  for (Equation& e : c.equations) {
    e.left = map_names(e.left, f);
    e.right = map_names(e.right, f);
  }
  return c;
}

PortNet random_net(const Signature& sig, Rng& rng, int max_nodes) {
  auto syms = usable_symbols(sig);
  PortNet net;
  int n = pick(rng, 0, max_nodes);
  std::vector<Endpoint> ports;
  for (int i = 0; i < n; ++i) {
    const auto& [s, arity] = syms[pick(rng, 0, static_cast<int>(syms.size()) - 1)];
    int id = net.add_node(s, arity);
    for (int k = 0; k <= arity; ++k) ports.push_back({id, k});
  }
  int iface = pick(rng, 0, 4);
  if ((ports.size() + iface) % 2 == 1) ++iface;
  std::size_t head = static_cast<std::size_t>(pick(rng, 0, iface));
  for (int i = 0; i < iface; ++i) {
    int k = net.add_interface(static_cast<std::size_t>(i) < head ? "" : "f" + std::to_string(i));
    ports.push_back(Endpoint::interface(k));
  }
  net.head_arity = head;
  std::shuffle(ports.begin(), ports.end(), rng);
  for (std::size_t i = 0; i + 1 < ports.size(); i += 2) net.connect(ports[i], ports[i + 1]);
  return net;
}

SystemFile random_system(Rng& rng) {
  SystemFile s;
  int count = pick(rng, 1, 6);
  for (int i = 0; i < count; ++i) {
    s.signature.declare("P" + std::to_string(i), pick(rng, 0, 3));
  }
  if (chance(rng, 50)) s.signature.declare("Eps", 0, Attribute::kEraser);
  if (chance(rng, 50)) s.signature.declare("Dup", 2, Attribute::kDuplicator);
  auto syms = usable_symbols(s.signature);

  int rules = pick(rng, 0, 5);
  for (int attempt = 0; attempt < 20 && static_cast<int>(s.rules.size()) < rules; ++attempt) {
    const auto& [a, arity_a] = syms[pick(rng, 0, static_cast<int>(syms.size()) - 1)];
    const auto& [b, arity_b] = syms[pick(rng, 0, static_cast<int>(syms.size()) - 1)];
    if (s.rules.find_explicit(a, b)) continue;
    int holes = 0;
    Rule r{a, b, {}, {}};
    for (int i = 0; i < arity_a; ++i) r.rhs_a.push_back(shape(syms, rng, 2, false, holes));
    for (int i = 0; i < arity_b; ++i) r.rhs_b.push_back(shape(syms, rng, 2, false, holes));
    if (holes % 2 == 1) continue;
    int next_name = 0;
    auto names = pair_holes(holes, rng, 0, true, next_name);
    auto f = [&](const std::string& h) { return Term::name(names.at(h)); };
    for (Term& t : r.rhs_a) t = map_names(t, f);
    for (Term& t : r.rhs_b) t = map_names(t, f);
    s.rules.add(std::move(r));
  }
  s.rules.install_schemas(s.signature);

  int nets = pick(rng, 0, 3);
  for (int i = 0; i < nets; ++i) {
    s.nets["n" + std::to_string(i)] = random_config(s.signature, rng);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Combinators

CombPtr comb_s() { return std::make_shared<Comb>(Comb{Comb::kS, 0, nullptr, nullptr}); }
CombPtr comb_k() { return std::make_shared<Comb>(Comb{Comb::kK, 0, nullptr, nullptr}); }
CombPtr comb_num(int n) { return std::make_shared<Comb>(Comb{Comb::kNum, n, nullptr, nullptr}); }
CombPtr comb_app(CombPtr f, CombPtr a) {
  return std::make_shared<Comb>(Comb{Comb::kApp, 0, std::move(f), std::move(a)});
}

CombPtr random_comb(Rng& rng, int size) {
  if (size <= 1) return chance(rng, 50) ? comb_s() : comb_k();
  int left = pick(rng, 1, size - 1);
  return comb_app(random_comb(rng, left), random_comb(rng, size - left));
}

namespace {

// Applicative order: arguments first, so a diverging subterm diverges here
// as it does in the net, where every active pair eventually fires.
std::optional<CombPtr> normalize(const CombPtr& t, int& fuel) {
  if (--fuel < 0) return std::nullopt;
  if (t->kind != Comb::kApp) return t;
  auto f = normalize(t->fun, fuel);
  if (!f) return std::nullopt;
  auto a = normalize(t->arg, fuel);
  if (!a) return std::nullopt;
  const CombPtr& fn = *f;
  // K x y -> x
  if (fn->kind == Comb::kApp && fn->fun->kind == Comb::kK) return fn->arg;
  // S x y z -> x z (y z)
  if (fn->kind == Comb::kApp && fn->fun->kind == Comb::kApp && fn->fun->fun->kind == Comb::kS) {
    const CombPtr& x = fn->fun->arg;
    const CombPtr& y = fn->arg;
    return normalize(comb_app(comb_app(x, *a), comb_app(y, *a)), fuel);
  }
  // A numeral applied to anything blocks in the net, even inside a term
  // that K later discards.
  const Comb* head = fn.get();
  while (head->kind == Comb::kApp) head = head->fun.get();
  if (head->kind == Comb::kNum) return std::nullopt;
  return comb_app(fn, *a);
}

}  // namespace

std::optional<CombPtr> comb_normalize(const CombPtr& t, int fuel) { return normalize(t, fuel); }

bool comb_well_typed_nf(const CombPtr& t) {
  if (t->kind != Comb::kApp) return true;
  const Comb* head = t.get();
  while (head->kind == Comb::kApp) head = head->fun.get();
  if (head->kind == Comb::kNum) return false;
  return comb_well_typed_nf(t->fun) && comb_well_typed_nf(t->arg);
}

std::string comb_print(const CombPtr& t) {
  switch (t->kind) {
    case Comb::kS:
      return "S";
    case Comb::kK:
      return "K";
    case Comb::kNum:
      return "#" + std::to_string(t->value);
    case Comb::kApp:
      return "(" + comb_print(t->fun) + " " + comb_print(t->arg) + ")";
  }
  return "?";
}

Configuration comb_to_config(const CombPtr& t) {
  Configuration c;
  int next = 0;
  std::function<Term(const CombPtr&)> emit = [&](const CombPtr& u) -> Term {
    switch (u->kind) {
      case Comb::kS:
        return A("S0");
      case Comb::kK:
        return A("K0");
      case Comb::kNum:
        return numeral(u->value);
      case Comb::kApp: {
        Term f = emit(u->fun);
        Term a = emit(u->arg);
        std::string r = name_for(next++);
        c.equations.push_back({f, A("App", {a, N(r)})});
        return N(r);
      }
    }
    throw std::logic_error("bad combinator");
  };
  c.head.push_back(emit(t));
  return c;
}

std::optional<CombPtr> comb_from_term(const Term& t) {
  if (t.is_name()) return std::nullopt;
  if (auto n = denote_nat(t)) return comb_num(*n);
  std::vector<CombPtr> args;
  for (const Term& a : t.args()) {
    auto c = comb_from_term(a);
    if (!c) return std::nullopt;
    args.push_back(*c);
  }
  const std::string& s = t.label();
  if (s == "K0") return comb_k();
  if (s == "K1") return comb_app(comb_k(), args[0]);
  if (s == "S0") return comb_s();
  if (s == "S1") return comb_app(comb_s(), args[0]);
  if (s == "S2") return comb_app(comb_app(comb_s(), args[0]), args[1]);
  return std::nullopt;
}

std::vector<Negative> negative_samples() {
  return {
        {"agents{A/1} rules{A[x] >< A[y];}", 1, 21, "linearity"},
        {"agents{Z/0, Add/2}\nrules{\n  Add[x, x] >< Z;\n  Z >< Add[y, y];\n}", 4, 3,
                 "duplicate rule"},
        {"agents{S/1}\nnet n = < %a | >", 2, 11, "reserved"},
        {"agents{S/1}\nnet n = < S(x, y) | >", 2, 11, "arity"},
        {"agents{S/1}\nnet n = < T | >", 2, 11, "undeclared"},
        {"agents{S/1}\nnet n = < x, x, x | >", 2, 17, "at most 2"},
        {"agents{S/1 S/2}", 1, 12, "expected"},
        {"agents{S/1, S/2}", 1, 13, "redeclared"},
        {"agents{Eps/1 @eraser}", 1, 8, "arity"},
        {"agents{Z/0} net n = < 0 | >", 1, 23, "expected a term"},
        {"agents{Z/0} net n = < 0x | >", 1, 23, "digit"},
        {"agents{Z/0} net n = < Z | Z = >", 1, 31, "expected a term"},
        {"agents{Z/0} net n = < Z | Z >", 1, 29, "expected"},
        {"agents{Z/0}\nnet n = < Z | >\nnet n = < Z | >", 3, 5, "duplicate net"},
        {"agents{Z/0} rules{Z >< Z}", 1, 25, "expected"},
        {"agents{Z/0} net n = < #2 | >", 1, 23, "numeral sugar"},
        {"agents{Z/0} net n = < [Z] | >", 1, 23, "list sugar"},
        {"agents{Z/0} net n = < Z | > $", 1, 29, "unexpected character"},
        {"agents{Z/0} nets", 1, 13, "expected 'agents', 'rules' or 'net'"},
        {"agents{Z/0 @bogus}", 1, 13, "after '@'"},
        {"agents{lower/0}", 1, 8, "expected"},
        {"agents{Z/0} net n = < Z | ", 1, 27, "end of input"}
  };
}

SubstInstance substitution_instance(Rng& rng) {
  const Signature& sig = nat_profile().system.signature;
  // Random term whose name leaves are `required` plus prefixed fillers.
  auto term_with = [&](std::vector<std::string> required, const std::string& prefix) {
    std::vector<std::string> holes;
    Term t = random_term(sig, rng, 3, holes);
    while (holes.size() < required.size()) {
      std::string h = "?" + std::to_string(holes.size());
      t = A("Add", {t, N(h)});
      holes.push_back(h);
    }
    std::shuffle(holes.begin(), holes.end(), rng);
    for (std::size_t i = 0; i < holes.size(); ++i) {
      std::string to = i < required.size() ? required[i] : prefix + std::to_string(i);
      t = substitute(t, holes[i], N(to));
    }
    return t;
  };
  std::uniform_int_distribution<int> coin(0, 1);
  bool y_in_u = coin(rng) == 1;
  Term t = y_in_u ? term_with({"x"}, "t") : term_with({"x", "y"}, "t");
  Term u = y_in_u ? term_with({"y"}, "u") : term_with({}, "u");
  Term w = term_with({}, "w");
  return {t, u, w, y_in_u};
}

std::vector<Configuration> small_nat_states(std::size_t max_equations) {
  const RuleSet& rules = nat_profile().system.rules;
  // Larger products and fact(2) add no rule pair, only states.
  std::vector<Configuration> todo;
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      todo.push_back(nat_add(m, n));
      if (m <= 1 && n <= 1) todo.push_back(nat_mult(m, n));
      todo.push_back(nat_max(m, n));
      todo.push_back(nat_min(m, n));
    }
  }
  todo.push_back(nat_fact(1));
  todo.push_back(nat_zero_test(0));
  todo.push_back(nat_zero_test(1));
  std::vector<Configuration> out;
  std::set<std::string> seen;
  while (!todo.empty()) {
    Configuration c = todo.back();
    todo.pop_back();
    if (c.equations.size() > max_equations) continue;
    if (!seen.insert(print_configuration(legalize_names(c))).second) continue;
    out.push_back(c);
    for (const Redex& r : find_redexes(c, rules)) {
      NameSupply supply = NameSupply::after(c);
      todo.push_back(step(c, r, rules, supply));
    }
  }
  return out;
}

bool joins_within_one_step(const Configuration& a, const Configuration& b, const RuleSet& rules) {
  if (alpha_equal(a, b)) return true;
  auto successors = [&](const Configuration& c) {
    std::vector<Configuration> out{c};
    for (const Redex& r : find_redexes(c, rules)) {
      NameSupply s = NameSupply::after(c);
      out.push_back(step(c, r, rules, s));
    }
    return out;
  };
  std::vector<Configuration> from_a = successors(a), from_b = successors(b);
  for (const Configuration& x : from_a) {
    for (const Configuration& y : from_b) {
      if (alpha_equal(x, y)) return true;
    }
  }
  return false;
}

}  // namespace inet::testing
