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

#include "inet/port_net.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace inet {

// ---------------------------------------------------------------------------
// PortNet

int PortNet::add_node(std::string symbol, int arity, bool amb) {
  NetNode n;
  n.symbol = std::move(symbol);
  n.peers.assign(static_cast<std::size_t>(arity) + 1, Endpoint{});
  n.amb = amb;
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

int PortNet::add_interface(std::string label) {
  interface.push_back(Endpoint{});
  interface_names.push_back(std::move(label));
  return static_cast<int>(interface.size()) - 1;
}

void PortNet::connect(Endpoint a, Endpoint b) {
  auto slot = [&](Endpoint e) -> Endpoint& {
    return e.is_interface() ? interface[e.port] : nodes[e.node].peers[e.port];
  };
  slot(a) = b;
  slot(b) = a;
}

Endpoint PortNet::peer(Endpoint e) const {
  return e.is_interface() ? interface[e.port] : nodes[e.node].peers[e.port];
}

std::size_t PortNet::live_nodes() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const NetNode& n) { return n.alive; }));
}

std::vector<std::string> PortNet::check() const {
  std::vector<std::string> out;
  auto name = [](Endpoint e) {
    return e.is_interface() ? "interface " + std::to_string(e.port)
                            : std::to_string(e.node) + "." + std::to_string(e.port);
  };
  auto valid = [&](Endpoint e) {
    if (e.is_interface()) return e.port >= 0 && e.port < static_cast<int>(interface.size());
    if (e.node < 0 || e.node >= static_cast<int>(nodes.size())) return false;
    const NetNode& n = nodes[e.node];
    return n.alive && e.port >= 0 && e.port <= n.arity();
  };
  auto check_end = [&](Endpoint self) {
    Endpoint p = peer(self);
    if (p.is_none()) {
      out.push_back(name(self) + " is not connected");
    } else if (!valid(p)) {
      out.push_back(name(self) + " is wired to a missing port");
    } else if (peer(p) != self) {
      out.push_back(name(self) + " and " + name(p) + " disagree about their wire");
    } else if (p == self) {
      out.push_back(name(self) + " is wired to itself");
    }
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].alive) continue;
    for (int k = 0; k <= nodes[i].arity(); ++k) check_end({static_cast<int>(i), k});
  }
  for (std::size_t i = 0; i < interface.size(); ++i) {
    check_end(Endpoint::interface(static_cast<int>(i)));
  }
  if (interface_names.size() != interface.size()) {
    out.push_back("interface labels do not match the interface");
  }
  if (head_arity > interface.size()) out.push_back("head arity exceeds the interface");
  return out;
}

void PortNet::compact() {
  std::vector<int> remap(nodes.size(), -1);
  std::vector<NetNode> kept;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].alive) continue;
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(std::move(nodes[i]));
  }
  auto fix = [&](Endpoint& e) {
    if (!e.is_interface() && !e.is_none()) e.node = remap[e.node];
  };
  for (NetNode& n : kept) {
    for (Endpoint& e : n.peers) fix(e);
  }
  for (Endpoint& e : interface) fix(e);
  nodes = std::move(kept);
}

// ---------------------------------------------------------------------------
// Linker

Linker::Terminal Linker::concrete(Endpoint e) {
  vertices_.push_back({true, e});
  adj_.emplace_back();
  return static_cast<Terminal>(vertices_.size()) - 1;
}

Linker::Terminal Linker::point() {
  vertices_.push_back({false, {}});
  adj_.emplace_back();
  return static_cast<Terminal>(vertices_.size()) - 1;
}

void Linker::link(Terminal a, Terminal b) {
  int id = static_cast<int>(edges_.size());
  edges_.emplace_back(a, b);
  adj_[a].push_back(id);
  adj_[b].push_back(id);
}

void Linker::emit(const Term& t, Terminal attach,
                  std::unordered_map<std::string, Terminal>& names) {
  if (t.is_name()) {
    auto [it, inserted] = names.emplace(t.label(), 0);
    if (inserted) it->second = point();
    link(attach, it->second);
    return;
  }
  bool amb = signature_ && signature_->is_amb(t.label());
  int id = net_.add_node(t.label(), static_cast<int>(t.arity()), amb);
  link(attach, concrete({id, 0}));
  for (std::size_t k = 0; k < t.arity(); ++k) {
    emit(t.args()[k], concrete({id, static_cast<int>(k) + 1}), names);
  }
}

void Linker::resolve() {
  std::vector<bool> used(edges_.size(), false);
  auto other = [&](int e, Terminal v) {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  };
  connections_.clear();
  for (Terminal v = 0; v < static_cast<Terminal>(vertices_.size()); ++v) {
    if (!vertices_[v].concrete) continue;
    if (adj_[v].size() != 1) {
      throw std::logic_error("concrete port with " + std::to_string(adj_[v].size()) +
                             " wires");
    }
    int e = adj_[v][0];
    if (used[e]) continue;
    Terminal cur = v;
    while (true) {
      used[e] = true;
      Terminal next = other(e, cur);
      if (vertices_[next].concrete) {
        net_.connect(vertices_[v].endpoint, vertices_[next].endpoint);
        connections_.emplace_back(vertices_[v].endpoint, vertices_[next].endpoint);
        break;
      }
      const auto& a = adj_[next];
      if (a.size() != 2) throw std::logic_error("dangling wire point");
      e = a[0] == e ? a[1] : a[0];
      cur = next;
    }
  }
  // What is left are closed loops through virtual points only.
  for (std::size_t e0 = 0; e0 < edges_.size(); ++e0) {
    if (used[e0]) continue;
    ++net_.loops;
    std::vector<int> todo{static_cast<int>(e0)};
    while (!todo.empty()) {
      int e = todo.back();
      todo.pop_back();
      if (used[e]) continue;
      used[e] = true;
      for (Terminal v : {edges_[e].first, edges_[e].second}) {
        for (int f : adj_[v]) {
          if (!used[f]) todo.push_back(f);
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Conversions

PortNet config_to_net(const Configuration& c, const Signature* signature) {
  PortNet net;
  for (std::size_t i = 0; i < c.head.size(); ++i) net.add_interface("");
  net.head_arity = c.head.size();
  Linker linker(net, signature);
  std::unordered_map<std::string, Linker::Terminal> names;
  for (std::size_t i = 0; i < c.head.size(); ++i) {
    linker.emit(c.head[i], linker.concrete(Endpoint::interface(static_cast<int>(i))),
                names);
  }
  for (const Equation& e : c.equations) {
    Linker::Terminal eq = linker.point();
    linker.emit(e.left, eq, names);
    linker.emit(e.right, eq, names);
  }
  std::map<std::string, Linker::Terminal> free;
  for (const auto& [name, t] : names) {
    if (linker.degree(t) == 1) free.emplace(name, t);
  }
  for (const auto& [name, t] : free) {
    int idx = net.add_interface(name);
    linker.link(t, linker.concrete(Endpoint::interface(idx)));
  }
  linker.resolve();
  return net;
}

namespace {

class NetReader {
 public:
  explicit NetReader(const PortNet& net) : net_(net) {
    for (std::size_t i = net.head_arity; i < net.interface_names.size(); ++i) {
      labels_.insert(net.interface_names[i]);
    }
    find_roots();
  }

  Configuration read() {
    Configuration c;
    for (std::size_t i = 0; i < net_.head_arity; ++i) {
      Endpoint self = Endpoint::interface(static_cast<int>(i));
      Endpoint p = net_.peer(self);
      if (!p.is_interface() && p.port == 0 && root_[p.node]) {
        c.head.push_back(term(p.node));
      } else {
        c.head.push_back(Term::name(name_for(self)));
      }
    }
    for (std::size_t n = 0; n < net_.nodes.size(); ++n) {
      if (!net_.nodes[n].alive || !root_[n]) continue;
      int r = static_cast<int>(n);
      Endpoint self{r, 0};
      Endpoint p = net_.peer(self);
      if (cut_[n]) {
        c.equations.push_back({Term::name(name_for(self)), term(r)});
      } else if (p.is_interface()) {
        if (static_cast<std::size_t>(p.port) >= net_.head_arity) {
          c.equations.push_back({Term::name(name_for(self)), term(r)});
        }
      } else if (p.port == 0) {
        if (r < p.node) c.equations.push_back({term(r), term(p.node)});
      } else {
        // Wired to the second principal port of an amb node.
        c.equations.push_back({Term::name(name_for(self)), term(r)});
      }
    }
    for (std::size_t i = net_.head_arity; i < net_.interface.size(); ++i) {
      Endpoint p = net_.interface[i];
      if (p.is_interface() && static_cast<std::size_t>(p.port) > i &&
          static_cast<std::size_t>(p.port) >= net_.head_arity) {
        c.equations.push_back({Term::name(net_.interface_names[i]),
                               Term::name(net_.interface_names[p.port])});
      }
    }
    for (std::uint64_t k = 0; k < net_.loops; ++k) {
      std::string w = fresh();
      c.equations.push_back({Term::name(w), Term::name(w)});
    }
    return c;
  }

 private:
  // A node is a root unless its principal port plugs into an auxiliary port,
  // in which case it is a subterm there. Closed chains of subterms are cut at
  // their smallest node.
  void find_roots() {
    const std::size_t n = net_.nodes.size();
    root_.assign(n, false);
    cut_.assign(n, false);
    std::vector<int> parent(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (!net_.nodes[i].alive) continue;
      Endpoint p = net_.nodes[i].peers[0];
      if (p.is_interface() || net_.nodes[p.node].is_principal(p.port)) {
        root_[i] = true;
      } else {
        parent[i] = p.node;
      }
    }
    std::vector<int> state(n, 0);  // 0 new, 1 on the current path, 2 done
    for (std::size_t i = 0; i < n; ++i) {
      if (!net_.nodes[i].alive || state[i] != 0) continue;
      std::vector<int> path;
      int cur = static_cast<int>(i);
      while (cur >= 0 && state[cur] == 0 && !root_[cur]) {
        state[cur] = 1;
        path.push_back(cur);
        cur = parent[cur];
      }
      if (cur >= 0 && state[cur] == 1) {
        auto start = std::find(path.begin(), path.end(), cur);
        int smallest = *std::min_element(start, path.end());
        root_[smallest] = true;
        cut_[smallest] = true;
      }
      for (int v : path) state[v] = 2;
    }
  }

  Term term(int n) {
    const NetNode& node = net_.nodes[n];
    std::vector<Term> args;
    for (int k = 1; k <= node.arity(); ++k) {
      Endpoint self{n, k};
      Endpoint p = node.peers[k];
      if (!p.is_interface() && p.port == 0 && !root_[p.node]) {
        args.push_back(term(p.node));
      } else {
        args.push_back(Term::name(name_for(self)));
      }
    }
    return Term::agent(node.symbol, std::move(args));
  }

  std::string name_for(Endpoint self) {
    Endpoint p = net_.peer(self);
    for (Endpoint e : {self, p}) {
      if (e.is_interface() && static_cast<std::size_t>(e.port) >= net_.head_arity) {
        return net_.interface_names[e.port];
      }
    }
    auto key = std::min(self, p);
    auto it = wire_names_.find(key);
    if (it != wire_names_.end()) return it->second;
    std::string w = fresh();
    wire_names_.emplace(key, w);
    return w;
  }

  std::string fresh() {
    std::string w;
    do {
      w = "w" + std::to_string(counter_++);
    } while (labels_.count(w) != 0);
    return w;
  }

  const PortNet& net_;
  std::vector<bool> root_, cut_;
  std::set<std::string> labels_;
  std::map<Endpoint, std::string> wire_names_;
  int counter_ = 0;
};

// Breadth-first numbering from the given start nodes; the code lists every
// numbered node with its wiring in local numbers.
class Encoder {
 public:
  explicit Encoder(const PortNet& net) : net_(net), local_(net.nodes.size(), -1) {}

  int number(int node) {
    if (local_[node] < 0) {
      local_[node] = static_cast<int>(order_.size());
      order_.push_back(node);
    }
    return local_[node];
  }

  void explore() {
    for (std::size_t i = next_; i < order_.size(); ++i) {
      const NetNode& n = net_.nodes[order_[i]];
      for (const Endpoint& p : n.peers) {
        if (!p.is_interface()) number(p.node);
      }
    }
    next_ = order_.size();
  }

  std::string describe(Endpoint p) const {
    if (p.is_interface()) return "i" + std::to_string(p.port);
    return std::to_string(local_[p.node]) + "." + std::to_string(p.port);
  }

  std::string nodes_code(std::size_t from) const {
    std::string out;
    for (std::size_t i = from; i < order_.size(); ++i) {
      const NetNode& n = net_.nodes[order_[i]];
      out += n.symbol;
      out += '(';
      for (const Endpoint& p : n.peers) {
        out += describe(p);
        out += ' ';
      }
      out += ')';
    }
    return out;
  }

  std::size_t size() const { return order_.size(); }
  const std::vector<int>& order() const { return order_; }
  bool seen(int node) const { return local_[node] >= 0; }

 private:
  const PortNet& net_;
  std::vector<int> local_;
  std::vector<int> order_;
  std::size_t next_ = 0;
};

}  // namespace

Configuration net_to_config(const PortNet& net) { return NetReader(net).read(); }

std::string canonical_code(const PortNet& net) {
  std::string out = "h" + std::to_string(net.head_arity) + "[";
  for (std::size_t i = net.head_arity; i < net.interface_names.size(); ++i) {
    out += net.interface_names[i] + ",";
  }
  out += "]";
  Encoder main(net);
  for (const Endpoint& p : net.interface) {
    if (!p.is_interface()) {
      main.number(p.node);
      main.explore();
    }
  }
  for (const Endpoint& p : net.interface) out += main.describe(p) + ";";
  out += main.nodes_code(0);

  // Components the interface cannot reach: minimal code over start nodes.
  std::vector<std::string> islands;
  std::vector<bool> done(net.nodes.size(), false);
  for (int v : main.order()) done[v] = true;
  for (std::size_t s = 0; s < net.nodes.size(); ++s) {
    if (!net.nodes[s].alive || done[s]) continue;
    Encoder comp(net);
    comp.number(static_cast<int>(s));
    comp.explore();
    std::string best;
    for (int start : comp.order()) {
      done[start] = true;
      Encoder e(net);
      e.number(start);
      e.explore();
      std::string code = e.nodes_code(0);
      if (best.empty() || code < best) best = code;
    }
    islands.push_back(best);
  }
  std::sort(islands.begin(), islands.end());
  for (const std::string& code : islands) out += "|" + code;
  out += "|loops" + std::to_string(net.loops);
  return out;
}

bool isomorphic(const PortNet& a, const PortNet& b) {
  return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// JSON

std::string net_to_json(const PortNet& source, int indent) {
  using nlohmann::json;
  PortNet net = source;
  net.compact();
  auto id = [](int node) { return std::to_string(node + 1); };
  auto end = [&](Endpoint e) {
    return e.is_interface() ? json::array({"_", e.port}) : json::array({id(e.node), e.port});
  };
  json nodes = json::object();
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    nodes[id(static_cast<int>(i))] = net.nodes[i].symbol;
  }
  json wires = json::array();
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    for (int k = 0; k <= net.nodes[i].arity(); ++k) {
      Endpoint self{static_cast<int>(i), k};
      Endpoint p = net.nodes[i].peers[k];
      if (p.is_interface() || p.is_none() || p < self) continue;
      wires.push_back(json::array({end(self), end(p)}));
    }
  }
  json iface = json::array();
  for (const Endpoint& p : net.interface) iface.push_back(end(p));
  json out = {{"nodes", nodes}, {"wires", wires}, {"interface", iface},
              {"head_arity", net.head_arity}};
  if (net.interface.size() > net.head_arity) out["names"] = net.interface_names;
  if (net.loops != 0) out["loops"] = net.loops;
  return out.dump(indent);
}

PortNet net_from_json(std::string_view text, const Signature* signature) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw NetFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("interface")) {
      throw NetFormatError("a net needs \"nodes\" and \"interface\"");
    }
    PortNet net;
    std::map<std::string, int> ids;
    std::vector<std::pair<std::string, std::string>> listed;
    for (const auto& [key, value] : doc.at("nodes").items()) {
      listed.emplace_back(key, value.get<std::string>());
    }
    // Numeric ids in numeric order, then the rest.
    std::stable_sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) {
      bool an = !a.first.empty() && std::all_of(a.first.begin(), a.first.end(), ::isdigit);
      bool bn = !b.first.empty() && std::all_of(b.first.begin(), b.first.end(), ::isdigit);
      if (an != bn) return an;
      if (an && a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });

    const json wires = doc.value("wires", json::array());
    const json& iface = doc.at("interface");
    // Arity: declared when a signature is given, otherwise the highest port.
    std::map<std::string, int> max_port;
    auto note = [&](const json& end) {
      std::string node = end.at(0).get<std::string>();
      int port = end.at(1).get<int>();
      if (port < 0) throw NetFormatError("negative port in " + end.dump());
      if (node != "_") max_port[node] = std::max(max_port[node], port);
    };
    for (const json& w : wires) {
      if (!w.is_array() || w.size() != 2) throw NetFormatError("a wire joins two ports");
      note(w[0]);
      note(w[1]);
    }
    for (const json& e : iface) note(e);

    for (const auto& [key, symbol] : listed) {
      int arity = max_port.count(key) ? max_port[key] : 0;
      if (signature) {
        int declared = signature->arity(symbol);
        if (declared < 0) throw NetFormatError("undeclared symbol '" + symbol + "'");
        if (arity > declared) {
          throw NetFormatError("node " + key + " uses port " + std::to_string(arity) +
                               " but " + symbol + " has arity " +
                               std::to_string(declared));
        }
        arity = declared;
      }
      bool amb = signature && signature->is_amb(symbol);
      ids[key] = net.add_node(symbol, arity, amb);
    }
    for (std::size_t i = 0; i < iface.size(); ++i) net.add_interface("");
    auto resolve = [&](const json& end) {
      std::string node = end.at(0).get<std::string>();
      int port = end.at(1).get<int>();
      if (node == "_") {
        if (port >= static_cast<int>(iface.size())) {
          throw NetFormatError("interface port " + std::to_string(port) + " does not exist");
        }
        return Endpoint::interface(port);
      }
      auto it = ids.find(node);
      if (it == ids.end()) throw NetFormatError("unknown node '" + node + "'");
      return Endpoint{it->second, port};
    };
    auto attach = [&](Endpoint a, Endpoint b) {
      for (Endpoint e : {a, b}) {
        if (!net.peer(e).is_none() && net.peer(e) != (e == a ? b : a)) {
          throw NetFormatError("a port is used by more than one wire");
        }
      }
      net.connect(a, b);
    };
    for (const json& w : wires) attach(resolve(w[0]), resolve(w[1]));
    for (std::size_t i = 0; i < iface.size(); ++i) {
      attach(Endpoint::interface(static_cast<int>(i)), resolve(iface[i]));
    }
    net.head_arity = doc.value("head_arity", iface.size());
    if (doc.contains("names")) {
      auto names = doc.at("names").get<std::vector<std::string>>();
      if (names.size() != iface.size()) {
        throw NetFormatError("\"names\" must label every interface port");
      }
      net.interface_names = std::move(names);
    }
    for (std::size_t i = net.head_arity; i < net.interface_names.size(); ++i) {
      if (net.interface_names[i].empty()) {
        net.interface_names[i] = "f" + std::to_string(i);
      }
    }
    net.loops = doc.value("loops", std::uint64_t{0});
    std::vector<std::string> problems = net.check();
    if (!problems.empty()) throw NetFormatError(problems.front());
    return net;
  } catch (const json::exception& e) {
    throw NetFormatError(std::string("malformed net: ") + e.what());
  }
}

}  // namespace inet
