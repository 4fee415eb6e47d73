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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inet/alpha.hpp"
#include "inet/calculus.hpp"
#include "inet/graph_engine.hpp"
#include "inet/parser.hpp"
#include "inet/port_net.hpp"
#include "inet/stdlib.hpp"

namespace py = pybind11;
using namespace inet;

namespace {

SchedulerPolicy make_policy(const std::string& name, std::uint64_t seed) {
  if (name == "fifo") return SchedulerPolicy::fifo();
  if (name == "lifo") return SchedulerPolicy::lifo();
  if (name == "random") return SchedulerPolicy::random(seed);
  if (name == "interaction_first") return SchedulerPolicy::interaction_first();
  throw py::value_error("unknown policy '" + name + "'");
}

py::dict stats_dict(const Stats& s) {
  py::dict d;
  d["interactions"] = s.interactions;
  d["indirections"] = s.indirections;
  d["collects"] = s.collects;
  d["total"] = s.total;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Interaction calculus and interaction nets.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NetFormatError>(m, "NetFormatError", PyExc_ValueError);
  py::register_exception<AmbError>(m, "AmbError", PyExc_RuntimeError);

  py::class_<Term>(m, "Term")
      .def_static("name", &Term::name)
      .def_static("agent", &Term::agent, py::arg("symbol"), py::arg("args") = std::vector<Term>{})
      .def_property_readonly("is_name", &Term::is_name)
      .def_property_readonly("label", &Term::label)
      .def_property_readonly("args", &Term::args)
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__str__", [](const Term& t) { return print_term(t); })
      .def("__repr__", [](const Term& t) { return "Term(" + print_term(t) + ")"; });

  py::class_<Equation>(m, "Equation")
      .def_readonly("left", &Equation::left)
      .def_readonly("right", &Equation::right)
      .def("__str__", [](const Equation& e) { return print_equation(e); });

  py::class_<Configuration>(m, "Configuration")
      .def_readonly("head", &Configuration::head)
      .def_readonly("equations", &Configuration::equations)
      .def("__str__", [](const Configuration& c) { return print_configuration(c); })
      .def("__repr__",
           [](const Configuration& c) { return "Configuration(" + print_configuration(c) + ")"; });

  py::class_<SystemFile>(m, "System")
      .def_property_readonly("symbols",
                             [](const SystemFile& s) {
                               std::map<std::string, int> out;
                               for (const auto& [sym, info] : s.signature.symbols()) out[sym] = info.arity;
                               return out;
                             })
      .def_property_readonly("nets", [](const SystemFile& s) { return s.nets; })
      .def_property_readonly("rule_count", [](const SystemFile& s) { return s.rules.size(); })
      .def("__str__", [](const SystemFile& s) { return print_system(s); })
      .def(
          "configuration",
          [](const SystemFile& s, const std::string& text) {
            ParseOptions o;
            o.allow_generated_names = true;
            return parse_configuration(text, s.signature, o);
          },
          py::arg("text"));

  m.def("parse_system", [](const std::string& text) { return parse_system(text); }, py::arg("text"));
  m.def("profile_names", &profile_names);
  m.def("profile", [](const std::string& name) { return profile(name).system; }, py::arg("name"));
  m.def("alpha_equal", py::overload_cast<const Configuration&, const Configuration&>(&alpha_equal));

  m.def(
      "reduce",
      [](const SystemFile& s, const Configuration& c, const std::string& policy, std::uint64_t seed,
         std::uint64_t limit, bool head) {
        ReduceOptions o;
        o.policy = make_policy(policy, seed);
        o.limit = limit;
        Outcome out = head ? reduce_head(c, s.rules, o) : reduce(c, s.rules, o);
        py::dict d;
        d["outcome"] = std::string(outcome_name(out.kind));
        d["configuration"] = out.configuration;
        d["stats"] = stats_dict(out.stats);
        d["blocked"] = out.blocked;
        return d;
      },
      py::arg("system"), py::arg("configuration"), py::arg("policy") = "fifo", py::arg("seed") = 0,
      py::arg("limit") = 1'000'000, py::arg("head") = false);

  m.def(
      "graph_reduce",
      [](const SystemFile& s, const Configuration& c, const std::string& policy, std::uint64_t seed,
         std::uint64_t limit, bool fair, bool head) {
        GraphOptions o;
        o.policy = make_policy(policy, seed);
        o.limit = limit;
        o.fair = fair;
        o.strategy = head ? GraphStrategy::kHead : GraphStrategy::kFull;
        GraphOutcome out = graph_reduce(config_to_net(c, &s.signature), s.rules, o);
        py::dict d;
        d["outcome"] = std::string(outcome_name(out.kind));
        d["configuration"] = legalize_names(net_to_config(out.net));
        d["interactions"] = out.interactions;
        d["amb_interactions"] = out.amb_interactions;
        d["net"] = net_to_json(out.net, -1);
        d["blocked"] = out.blocked;
        return d;
      },
      py::arg("system"), py::arg("configuration"), py::arg("policy") = "fifo", py::arg("seed") = 0,
      py::arg("limit") = 1'000'000, py::arg("fair") = false, py::arg("head") = false);

  m.def(
      "to_json",
      [](const SystemFile& s, const Configuration& c, int indent) {
        return net_to_json(config_to_net(c, &s.signature), indent);
      },
      py::arg("system"), py::arg("configuration"), py::arg("indent") = 2);
  m.def(
      "from_json",
      [](const SystemFile& s, const std::string& text) {
        return net_to_config(net_from_json(text, &s.signature));
      },
      py::arg("system"), py::arg("text"));
  m.def(
      "isomorphic",
      [](const SystemFile& s, const Configuration& a, const Configuration& b) {
        return isomorphic(config_to_net(a, &s.signature), config_to_net(b, &s.signature));
      },
      py::arg("system"), py::arg("a"), py::arg("b"));
}
