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

#include <gtest/gtest.h>

#include <algorithm>

#include "inet/alpha.hpp"
#include "inet/parser.hpp"
#include "inet/port_net.hpp"
#include "support.hpp"

namespace inet {
namespace {

using testing::A;
using testing::N;

const Signature& nat_sig() { return nat_profile().system.signature; }

int count_symbol(const PortNet& net, const std::string& s) {
  return static_cast<int>(std::count_if(net.nodes.begin(), net.nodes.end(), [&](const NetNode& n) {
    return n.alive && n.symbol == s;
  }));
}

TEST(ConfigToNet, EncodeExample) {
  Configuration c{{N("x")}, {{A("Add", {A("Z"), N("x")}), A("S", {A("Z")})}}};
  PortNet net = config_to_net(c, &nat_sig());
  EXPECT_TRUE(net.check().empty());
  EXPECT_EQ(net.live_nodes(), 4u);
  EXPECT_EQ(count_symbol(net, "Add"), 1);
  EXPECT_EQ(count_symbol(net, "Z"), 2);
  EXPECT_EQ(count_symbol(net, "S"), 1);
  ASSERT_EQ(net.interface.size(), 1u);
  EXPECT_EQ(net.head_arity, 1u);
  // Add.0 faces S.0, and the interface port is Add's second auxiliary port.
  int add = -1, s = -1;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    if (net.nodes[i].symbol == "Add") add = static_cast<int>(i);
    if (net.nodes[i].symbol == "S") s = static_cast<int>(i);
  }
  EXPECT_EQ(net.peer({add, 0}), (Endpoint{s, 0}));
  EXPECT_EQ(net.interface[0], (Endpoint{add, 2}));
}

TEST(ConfigToNet, Empty) {
  PortNet net = config_to_net(Configuration{});
  EXPECT_EQ(net.nodes.size(), 0u);
  EXPECT_EQ(net.interface.size(), 0u);
}

TEST(ConfigToNet, SystemOfLinks) {
  PortNet net = config_to_net({{N("x"), N("x")}, {}});
  EXPECT_EQ(net.nodes.size(), 0u);
  ASSERT_EQ(net.interface.size(), 2u);
  EXPECT_EQ(net.interface[0], Endpoint::interface(1));
  EXPECT_EQ(net.interface[1], Endpoint::interface(0));
}

TEST(ConfigToNet, FreeNamesTrailSortedByLabel) {
  Configuration c{{A("S", {N("b")})}, {{N("a"), A("Z")}}};
  PortNet net = config_to_net(c, &nat_sig());
  ASSERT_EQ(net.interface.size(), 3u);
  EXPECT_EQ(net.head_arity, 1u);
  EXPECT_EQ(net.interface_names[1], "a");
  EXPECT_EQ(net.interface_names[2], "b");
}

TEST(ConfigToNet, NameChainsCollapse) {
  // x = y, y = z become one wire.
  Configuration c{{N("p"), N("q")}, {{N("p"), N("m")}, {N("m"), N("q")}}};
  PortNet net = config_to_net(c);
  EXPECT_EQ(net.interface[0], Endpoint::interface(1));
}

TEST(ConfigToNet, ClosedLoop) {
  Configuration c{{}, {{N("w"), N("w")}}};
  PortNet net = config_to_net(c);
  EXPECT_EQ(net.loops, 1u);
  EXPECT_TRUE(alpha_equal(net_to_config(net), c));
}

TEST(NetToConfig, SingleWire) {
  PortNet net;
  net.add_interface();
  net.add_interface();
  net.head_arity = 2;
  net.connect(Endpoint::interface(0), Endpoint::interface(1));
  EXPECT_TRUE(alpha_equal(net_to_config(net), Configuration{{N("x"), N("x")}, {}}));
}

TEST(NetToConfig, CyclicDupFigure) {
  // < x | Dup(S(x), y) = y >: Dup's principal port faces its own second port.
  PortNet net;
  int dup = net.add_node("Dup", 2);
  int s = net.add_node("S", 1);
  net.add_interface();
  net.head_arity = 1;
  net.connect({dup, 0}, {dup, 2});
  net.connect({dup, 1}, {s, 0});
  net.connect({s, 1}, Endpoint::interface(0));
  ASSERT_TRUE(net.check().empty());
  Configuration expect{{N("x")}, {{A("Dup", {A("S", {N("x")}), N("y")}), N("y")}}};
  EXPECT_TRUE(alpha_equal(net_to_config(net), expect)) << print_configuration(net_to_config(net));
}

TEST(NetToConfig, EncodeRoundTrip) {
  Configuration c{{N("x")}, {{A("Add", {A("Z"), N("x")}), A("S", {A("Z")})}}};
  EXPECT_TRUE(alpha_equal(net_to_config(config_to_net(c, &nat_sig())), c));
}

TEST(RoundTrip, StdlibConfigurations) {
  for (const std::string& p : profile_names()) {
    const Profile& prof = profile(p);
    for (const auto& [name, c] : prof.system.nets) {
      PortNet net = config_to_net(c, &prof.system.signature);
      ASSERT_TRUE(net.check().empty()) << p << "/" << name;
      Configuration back = net_to_config(net);
      // Name-to-name equations collapse into wires, so compare through the
      // net and, where the source had none, directly.
      EXPECT_TRUE(isomorphic(config_to_net(back, &prof.system.signature), net)) << p << "/" << name;
      // An Amb argument on port 1 sits on a principal port and reads back
      // as an equation of its own.
      bool agent_sides = p != "amb" && std::all_of(c.equations.begin(), c.equations.end(), [](const Equation& e) {
        return e.left.is_agent() && e.right.is_agent();
      });
      if (agent_sides) {
        EXPECT_TRUE(alpha_equal(back, c)) << p << "/" << name << ": " << print_configuration(back);
      }
    }
  }
}

Signature mixed_signature() {
  Signature sig;
  sig.declare("Z", 0);
  sig.declare("S", 1);
  sig.declare("P", 2);
  sig.declare("T", 3);
  return sig;
}

TEST(RoundTrip, RandomConfigurationsExact) {
  Signature sig = mixed_signature();
  testing::Rng rng(31337);
  testing::ConfigShape shape;
  shape.agent_equations = true;
  for (int i = 0; i < 500; ++i) {
    Configuration c = testing::random_config(sig, rng, shape);
    Configuration back = net_to_config(config_to_net(c, &sig));
    ASSERT_TRUE(alpha_equal(back, c)) << print_configuration(c) << "\n -> "
                                      << print_configuration(back);
  }
}

TEST(RoundTrip, RandomConfigurationsThroughNets) {
  Signature sig = mixed_signature();
  testing::Rng rng(4242);
  for (int i = 0; i < 500; ++i) {
    Configuration c = testing::random_config(sig, rng);
    PortNet net = config_to_net(c, &sig);
    ASSERT_TRUE(net.check().empty()) << print_configuration(c);
    Configuration back = net_to_config(net);
    EXPECT_EQ(free_names(back), free_names(c));
    ASSERT_TRUE(isomorphic(config_to_net(back, &sig), net))
        << print_configuration(c) << "\n -> " << print_configuration(back);
  }
}

TEST(RoundTrip, RandomNets) {
  Signature sig = mixed_signature();
  testing::Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    PortNet net = testing::random_net(sig, rng);
    ASSERT_TRUE(net.check().empty());
    Configuration c = net_to_config(net);
    PortNet again = config_to_net(c, &sig);
    ASSERT_TRUE(isomorphic(again, net)) << print_configuration(c);
  }
}

TEST(Isomorphism, DistinguishesWiring) {
  Configuration a{{N("x"), N("y")}, {{A("P", {N("x"), N("y")}), A("Z")}}};
  Configuration b{{N("y"), N("x")}, {{A("P", {N("x"), N("y")}), A("Z")}}};
  Signature sig = mixed_signature();
  EXPECT_FALSE(isomorphic(config_to_net(a, &sig), config_to_net(b, &sig)));
  EXPECT_TRUE(isomorphic(config_to_net(a, &sig), config_to_net(a, &sig)));
}

TEST(Isomorphism, IgnoresNodeNumbering) {
  PortNet a, b;
  int a1 = a.add_node("S", 1), a2 = a.add_node("Z", 0);
  a.add_interface();
  a.head_arity = 1;
  a.connect({a1, 1}, {a2, 0});
  a.connect({a1, 0}, Endpoint::interface(0));
  int b2 = b.add_node("Z", 0), b1 = b.add_node("S", 1);
  b.add_interface();
  b.head_arity = 1;
  b.connect({b1, 1}, {b2, 0});
  b.connect({b1, 0}, Endpoint::interface(0));
  EXPECT_TRUE(isomorphic(a, b));
}

TEST(Json, RoundTrip) {
  for (const std::string& p : profile_names()) {
    const Profile& prof = profile(p);
    for (const auto& [name, c] : prof.system.nets) {
      PortNet net = config_to_net(c, &prof.system.signature);
      PortNet back = net_from_json(net_to_json(net), &prof.system.signature);
      EXPECT_TRUE(isomorphic(back, net)) << p << "/" << name;
      EXPECT_TRUE(alpha_equal(net_to_config(back), net_to_config(net))) << p << "/" << name;
      EXPECT_EQ(net_to_json(back), net_to_json(net));
    }
  }
}

TEST(Json, PaperNotation) {
  // The encode net written in the numbered-port form.
  std::string text = R"({
    "nodes": {"1": "Add", "2": "Z", "3": "S", "4": "Z"},
    "wires": [[["1", 0], ["3", 0]], [["1", 1], ["2", 0]], [["3", 1], ["4", 0]]],
    "interface": [["1", 2]]
  })";
  PortNet net = net_from_json(text, &nat_sig());
  Configuration c{{N("x")}, {{A("Add", {A("Z"), N("x")}), A("S", {A("Z")})}}};
  EXPECT_TRUE(alpha_equal(net_to_config(net), c));
  EXPECT_TRUE(isomorphic(net, config_to_net(c, &nat_sig())));
}

TEST(Json, Rejections) {
  EXPECT_THROW(net_from_json("{", &nat_sig()), NetFormatError);
  EXPECT_THROW(net_from_json(R"({"nodes": {}})", &nat_sig()), NetFormatError);
  EXPECT_THROW(net_from_json(R"({"nodes": {"1": "Nope"}, "interface": []})", &nat_sig()),
               NetFormatError);
  // Port used twice.
  EXPECT_THROW(net_from_json(R"({"nodes": {"1": "S", "2": "Z", "3": "Z"},
                                 "wires": [[["1", 0], ["2", 0]], [["1", 0], ["3", 0]]],
                                 "interface": [["1", 1]]})",
                             &nat_sig()),
               NetFormatError);
  // Dangling port.
  EXPECT_THROW(net_from_json(R"({"nodes": {"1": "S"}, "interface": [["1", 0]]})", &nat_sig()),
               NetFormatError);
}

}  // namespace
}  // namespace inet
