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

#ifndef INET_PORT_NET_HPP_
#define INET_PORT_NET_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "inet/signature.hpp"
#include "inet/term.hpp"

namespace inet {

// A port of a node, or (node == kInterface) a port of the net's interface.
struct Endpoint {
  static constexpr int kInterface = -1;
  static constexpr int kNone = -2;

  int node = kNone;
  int port = 0;

  static Endpoint interface(int index) { return {kInterface, index}; }
  bool is_interface() const { return node == kInterface; }
  bool is_none() const { return node == kNone; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct NetNode {
  std::string symbol;
  std::vector<Endpoint> peers;  // port 0 is principal, then 1..arity
  bool amb = false;             // principal ports {0, 1}
  bool alive = true;

  int arity() const { return static_cast<int>(peers.size()) - 1; }
  bool is_principal(int port) const { return port == 0 || (amb && port == 1); }
};

// Nodes with numbered ports, wires between ports, and an ordered interface.
// The first head_arity interface ports correspond to head terms; the rest
// are free names, labelled.
struct PortNet {
  std::vector<NetNode> nodes;
  std::vector<Endpoint> interface;
  std::vector<std::string> interface_names;
  std::size_t head_arity = 0;
  // Closed wire loops with no ports on them.
  std::uint64_t loops = 0;

  int add_node(std::string symbol, int arity, bool amb = false);
  int add_interface(std::string label = "");
  void connect(Endpoint a, Endpoint b);
  Endpoint peer(Endpoint e) const;
  void kill(int node) { nodes[node].alive = false; }

  std::size_t live_nodes() const;
  // Broken symmetry, dangling ports, and similar; empty when well formed.
  std::vector<std::string> check() const;
  // Drops dead nodes, renumbering the rest densely in order.
  void compact();
};

class NetFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds wires out of paths: terminals are either concrete endpoints (each
// used once) or virtual points of degree two, such as names and equations.
// resolve() follows every path between concrete endpoints and connects them.
class Linker {
 public:
  using Terminal = int;

  explicit Linker(PortNet& net, const Signature* signature = nullptr)
      : net_(net), signature_(signature) {}

  Terminal concrete(Endpoint e);
  Terminal point();
  void link(Terminal a, Terminal b);

  // Creates the nodes of `t`, attaching its root to `attach`. Names are
  // looked up in (and added to) `names`.
  void emit(const Term& t, Terminal attach,
            std::unordered_map<std::string, Terminal>& names);

  int degree(Terminal t) const { return static_cast<int>(adj_[t].size()); }

  void resolve();

  // Pairs of endpoints joined by the last resolve().
  const std::vector<std::pair<Endpoint, Endpoint>>& connections() const {
    return connections_;
  }

 private:
  struct Vertex {
    bool concrete = false;
    Endpoint endpoint;
  };

  PortNet& net_;
  const Signature* signature_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> adj_;  // edge ids
  std::vector<std::pair<Terminal, Terminal>> edges_;
  std::vector<std::pair<Endpoint, Endpoint>> connections_;
};

// Head terms become trees rooted at the interface in head order; equations
// join two roots; free names become trailing interface ports, sorted by
// label. Amb flags come from `signature` when given.
PortNet config_to_net(const Configuration& c, const Signature* signature = nullptr);

// Trees whose root reaches the interface go to the head, principal to
// principal wires become equations, and other wires become shared names
// (w0, w1, ...). A tree closed on itself is cut at its smallest node id into
// a cyclic equation.
Configuration net_to_config(const PortNet& net);

// Equal codes iff the nets are isomorphic with the interface fixed.
std::string canonical_code(const PortNet& net);
bool isomorphic(const PortNet& a, const PortNet& b);

std::string net_to_json(const PortNet& net, int indent = -1);
// Amb flags come from `signature` when given.
PortNet net_from_json(std::string_view text, const Signature* signature = nullptr);

}  // namespace inet

#endif  // INET_PORT_NET_HPP_
