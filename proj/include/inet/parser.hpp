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

#ifndef INET_PARSER_HPP_
#define INET_PARSER_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inet/rules.hpp"
#include "inet/signature.hpp"
#include "inet/term.hpp"

namespace inet {

// 1-based, end exclusive.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int end_line = 1;
  int end_column = 1;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  const SourceSpan& span() const { return diagnostics_.front().span; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct SystemFile {
  Signature signature;
  RuleSet rules;
  std::map<std::string, Configuration> nets;
};

struct ParseOptions {
  // Accept machine names of the form %<digits>, as found in traces.
  bool allow_generated_names = false;
  // Materialize eraser/duplicator schemas into the rule set.
  bool install_schemas = true;
};

SystemFile parse_system(std::string_view text, const ParseOptions& options = {});

// A configuration in the `< head | eqs >` syntax, checked against
// `signature`.
Configuration parse_configuration(std::string_view text,
                                  const Signature& signature,
                                  const ParseOptions& options = {});

Term parse_term(std::string_view text, const Signature& signature,
                const ParseOptions& options = {});

std::string print_term(const Term& t);
// Smaller printed side first.
std::string print_equation(const Equation& e);
std::string print_configuration(const Configuration& c);
std::string print_rule(const Rule& r);
// Explicit rules only; schema rules are implied by the attributes. Generated
// names in nets are renamed to legal ones.
std::string print_system(const SystemFile& s);

// Canonical orientation and order, as printed.
Configuration canonical(const Configuration& c);

// Replaces every %-name by a fresh legal name not already in use.
Configuration legalize_names(const Configuration& c);

}  // namespace inet

#endif  // INET_PARSER_HPP_
