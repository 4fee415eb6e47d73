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

// inetcalc: run, trace, check and benchmark interaction-net programs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "inet/calculus.hpp"
#include "inet/graph_engine.hpp"
#include "inet/parser.hpp"
#include "inet/port_net.hpp"
#include "inet/stdlib.hpp"
#include "inet/validate.hpp"

namespace {

using namespace inet;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBlocked = 2;
constexpr int kExitLimit = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunRequest {
  std::string input;
  std::string rules;  // system for .json inputs
  std::string net;
  std::string engine = "calculus";
  std::string strategy = "full";
  std::string policy = "fifo";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> limit;
  bool fair = false;
  bool json = false;
  bool trace = false;
};

int exit_code(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::kNormal:
    case OutcomeKind::kHeadNormal:
      return kExitOk;
    case OutcomeKind::kBlocked:
      return kExitBlocked;
    case OutcomeKind::kLimitExceeded:
      return kExitLimit;
  }
  return kExitError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path, or the name of a shipped program.
std::pair<std::string, std::string> load_text(const std::string& input) {
  if (std::filesystem::exists(input)) return {input, read_file(input)};
  for (const std::string& name : profile_names()) {
    if (input == name) return {name + ".inet", std::string(program_source(name))};
  }
  throw UsageError("no such file or program: " + input);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SystemFile load_system(const std::string& input) {
  auto [path, text] = load_text(input);
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    std::ostringstream msg;
    for (const Diagnostic& d : e.diagnostics()) {
      msg << path << ":" << format_diagnostic(d) << "\n";
    }
    throw std::runtime_error(msg.str());
  }
}

SchedulerPolicy make_policy(const RunRequest& r) {
  SchedulerPolicy p;
  if (r.policy == "fifo") {
    p = SchedulerPolicy::fifo();
  } else if (r.policy == "lifo") {
    p = SchedulerPolicy::lifo();
  } else if (r.policy == "random") {
    p = SchedulerPolicy::random(r.seed.value_or(0));
  } else if (r.policy == "interaction-first") {
    p = SchedulerPolicy::interaction_first();
  } else {
    throw UsageError("unknown policy '" + r.policy + "'");
  }
  if (r.seed && p.kind != PolicyKind::kRandom) {
    throw UsageError("--seed applies to --policy random only");
  }
  return p;
}

std::uint64_t default_limit() {
  if (const char* env = std::getenv("INETCALC_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("INETCALC_LIMIT is not a number: ") + env);
    }
  }
  return 1'000'000;
}

bool mentions(const Term& t, const std::string& symbol) {
  if (t.is_name()) return false;
  if (t.label() == symbol) return true;
  for (const Term& a : t.args()) {
    if (mentions(a, symbol)) return true;
  }
  return false;
}

bool mentions(const Configuration& c, const std::string& symbol) {
  for (const Term& t : c.head) {
    if (mentions(t, symbol)) return true;
  }
  for (const Equation& e : c.equations) {
    if (mentions(e.left, symbol) || mentions(e.right, symbol)) return true;
  }
  return false;
}

struct Loaded {
  SystemFile system;
  Configuration config;
  std::optional<PortNet> net;  // when the input was a JSON net
};

Loaded load(const RunRequest& r) {
  Loaded out;
  if (ends_with(r.input, ".json")) {
    if (r.rules.empty()) throw UsageError("a .json net needs --rules <system>");
    out.system = load_system(r.rules);
    out.net = net_from_json(read_file(r.input), &out.system.signature);
    out.config = net_to_config(*out.net);
    return out;
  }
  out.system = load_system(r.input);
  auto& nets = out.system.nets;
  std::string name = r.net;
  if (name.empty()) {
    if (nets.count("main")) {
      name = "main";
    } else if (nets.size() == 1) {
      name = nets.begin()->first;
    } else {
      std::string known;
      for (const auto& [n, c] : nets) known += " " + n;
      throw UsageError("choose a net with --net:" + (known.empty() ? " (none defined)" : known));
    }
  }
  auto it = nets.find(name);
  if (it == nets.end()) throw UsageError("no net named '" + name + "'");
  out.config = it->second;
  return out;
}

void print_blocked(std::ostream& os, const std::vector<BlockedPair>& blocked) {
  for (const auto& [a, b] : blocked) os << "blocked: " << a << " >< " << b << "\n";
}

std::string blocked_json(const std::vector<BlockedPair>& blocked) {
  std::string out = "[";
  for (std::size_t i = 0; i < blocked.size(); ++i) {
    if (i) out += ", ";
    out += "[\"" + blocked[i].first + "\", \"" + blocked[i].second + "\"]";
  }
  return out + "]";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int cmd_run(const RunRequest& r, bool trace_only) {
  if (r.engine != "calculus" && r.engine != "graph") {
    throw UsageError("unknown engine '" + r.engine + "'");
  }
  if (r.strategy != "full" && r.strategy != "head") {
    throw UsageError("unknown strategy '" + r.strategy + "'");
  }
  if (r.fair && r.engine != "graph") throw UsageError("--fair needs --engine graph");
  SchedulerPolicy policy = make_policy(r);
  std::uint64_t limit = r.limit.value_or(default_limit());
  Loaded in = load(r);
  bool tracing = r.trace || trace_only;

  OutcomeKind kind;
  Configuration final_config;
  PortNet final_net;
  std::string stats;
  std::vector<BlockedPair> blocked;

  if (r.engine == "calculus") {
    if (auto amb = in.system.signature.amb(); amb && mentions(in.config, *amb)) {
      throw UsageError("nets with " + *amb + " need --engine graph");
    }
    ReduceOptions options;
    options.limit = limit;
    options.policy = policy;
    if (tracing) {
      options.trace = [](const TraceEvent& ev) {
        std::cout << "[" << ev.index << "] " << describe(ev.redex) << "  ->  "
                  << print_configuration(*ev.configuration) << "\n";
      };
    }
    Outcome o = r.strategy == "head" ? reduce_head(in.config, in.system.rules, options)
                                     : reduce(in.config, in.system.rules, options);
    kind = o.kind;
    final_config = o.configuration;
    final_net = config_to_net(final_config, &in.system.signature);
    stats = stats_json(o.stats);
    blocked = o.blocked;
  } else {
    PortNet start = in.net ? *in.net : config_to_net(in.config, &in.system.signature);
    GraphOptions options;
    options.policy = policy;
    options.fair = r.fair;
    options.limit = limit;
    options.strategy = r.strategy == "head" ? GraphStrategy::kHead : GraphStrategy::kFull;
    if (tracing) {
      options.trace = [](const GraphTraceEvent& ev) {
        std::cout << "[" << ev.index << "] " << ev.description << "\n";
      };
    }
    GraphOutcome o = graph_reduce(start, in.system.rules, options);
    kind = o.kind;
    final_net = o.net;
    final_config = net_to_config(o.net);
    stats = "{\"interactions\": " + std::to_string(o.interactions) +
            ", \"amb_interactions\": " + std::to_string(o.amb_interactions) + "}";
    blocked = o.blocked;
  }

  if (trace_only) return exit_code(kind);
  final_config = legalize_names(final_config);
  if (r.json) {
    std::cout << "{\"outcome\": \"" << outcome_name(kind) << "\", \"configuration\": "
              << quoted(print_configuration(final_config))
              << ", \"net\": " << net_to_json(final_net) << ", \"stats\": " << stats
              << ", \"blocked\": " << blocked_json(blocked) << "}\n";
  } else {
    std::cout << print_configuration(final_config) << "\n";
    std::cout << "outcome: " << outcome_name(kind) << "\n";
    std::cout << "stats: " << stats << "\n";
    print_blocked(std::cout, blocked);
  }
  return exit_code(kind);
}

int cmd_check(const std::vector<std::string>& paths) {
  int status = kExitOk;
  for (const std::string& input : paths) {
    auto [path, text] = load_text(input);
    try {
      SystemFile s = parse_system(text);
      std::vector<Violation> problems = validate_signature(s.signature);
      for (const auto& [key, rule] : s.rules.explicit_rules()) {
        auto v = validate_rule(s.signature, rule);
        problems.insert(problems.end(), v.begin(), v.end());
      }
      for (const auto& [name, config] : s.nets) {
        auto v = validate_configuration(s.signature, config, "net " + name);
        problems.insert(problems.end(), v.begin(), v.end());
      }
      for (const Violation& v : problems) {
        std::cerr << path << ": " << v.location << ": " << v.message << "\n";
      }
      if (!problems.empty()) {
        status = kExitError;
        continue;
      }
      std::cout << path << ": ok (" << s.signature.size() << " symbols, "
                << s.rules.size() << " rules, " << s.nets.size() << " nets)\n";
      for (const std::string& note : s.rules.shadowing_notes()) {
        std::cout << path << ": note: " << note << "\n";
      }
    } catch (const ParseError& e) {
      for (const Diagnostic& d : e.diagnostics()) {
        std::cerr << path << ":" << format_diagnostic(d) << "\n";
      }
      status = kExitError;
    }
  }
  return status;
}

int cmd_bench(const std::string& which, int lo, int hi) {
  if (lo < 0 || hi < lo) throw UsageError("invalid size range");
  auto run = [](const Configuration& c, const Profile& p) {
    return reduce(c, p.system.rules, SchedulerPolicy::fifo(), 10'000'000);
  };
  if (which == "dlist") {
    std::cout << "length,interactions,total\n";
    for (int n = lo; n <= hi; ++n) {
      std::vector<Term> a, b;
      for (int i = 0; i < n; ++i) a.push_back(numeral(i));
      for (int i = 0; i < n; ++i) b.push_back(numeral(n + i));
      Outcome o = run(dlist_append(a, b), dlist_profile());
      std::cout << n << "," << o.stats.interactions << "," << o.stats.total << "\n";
    }
  } else if (which == "cnat" || which == "add") {
    std::cout << "m,n,interactions,total\n";
    for (int m = lo; m <= hi; ++m) {
      for (int n = lo; n <= hi; ++n) {
        Outcome o = which == "cnat" ? run(cnat_add(m, n), cnat_profile())
                                    : run(nat_add(m, n), nat_profile());
        std::cout << m << "," << n << "," << o.stats.interactions << ","
                  << o.stats.total << "\n";
      }
    }
  } else {
    throw UsageError("unknown benchmark '" + which + "' (dlist, cnat, add)");
  }
  return kExitOk;
}

void add_run_flags(CLI::App* cmd, RunRequest& r) {
  cmd->add_option("input", r.input, ".inet system, .json net, or a shipped program name")
      ->required();
  cmd->add_option("--rules", r.rules, "system supplying the rules for a .json net");
  cmd->add_option("--net", r.net, "net to reduce (default: main, or the only one)");
  cmd->add_option("--engine", r.engine, "calculus or graph")
      ->check(CLI::IsMember({"calculus", "graph"}));
  cmd->add_option("--strategy", r.strategy, "full or head")
      ->check(CLI::IsMember({"full", "head"}));
  cmd->add_option("--policy", r.policy, "fifo, lifo, random or interaction-first")
      ->check(CLI::IsMember({"fifo", "lifo", "random", "interaction-first"}));
  cmd->add_option("--seed", r.seed, "seed for --policy random");
  cmd->add_option("--limit", r.limit, "maximum number of steps");
  cmd->add_flag("--fair", r.fair, "oldest active pair first (graph engine)");
  cmd->add_flag("--json", r.json, "print the result as JSON");
  cmd->add_flag("--trace", r.trace, "print every step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interaction nets: reduce, trace, check and benchmark programs"};
  app.require_subcommand(1);

  RunRequest run_req, trace_req;
  auto* run = app.add_subcommand("run", "reduce a net and print the result");
  add_run_flags(run, run_req);
  auto* trace = app.add_subcommand("trace", "print each reduction step");
  add_run_flags(trace, trace_req);

  std::vector<std::string> check_paths;
  auto* check = app.add_subcommand("check", "parse and validate programs");
  check->add_option("inputs", check_paths, ".inet files")->required();

  std::string bench_which;
  int bench_min = 0, bench_max = -1;
  auto* bench = app.add_subcommand("bench", "step counts over a range of sizes");
  bench->add_option("benchmark", bench_which, "dlist, cnat or add")->required();
  bench->add_option("--min", bench_min, "smallest size");
  bench->add_option("--max", bench_max, "largest size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*run) return cmd_run(run_req, false);
    if (*trace) return cmd_run(trace_req, true);
    if (*check) return cmd_check(check_paths);
    if (*bench) {
      if (bench_max < 0) bench_max = bench_which == "dlist" ? 64 : 8;
      if (bench_which == "dlist" && bench_min == 0 && !bench->count("--min")) bench_min = 1;
      return cmd_bench(bench_which, bench_min, bench_max);
    }
  } catch (const UsageError& e) {
    std::cerr << "inetcalc: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "inetcalc: " << e.what();
    if (std::string_view(e.what()).empty() || e.what()[std::string_view(e.what()).size() - 1] != '\n') {
      std::cerr << "\n";
    }
    return kExitError;
  }
  return kExitError;
}
