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

#ifndef INET_VALIDATE_HPP_
#define INET_VALIDATE_HPP_

#include <string>
#include <vector>

#include "inet/rules.hpp"
#include "inet/signature.hpp"
#include "inet/term.hpp"

namespace inet {

struct Violation {
  std::string location;  // e.g. "rule Add >< S", "configuration: head[1]"
  std::string message;
};

std::vector<Violation> validate_signature(const Signature& signature);
std::vector<Violation> validate_term(const Signature& signature,
                                     const Term& term,
                                     const std::string& location);
std::vector<Violation> validate_rule(const Signature& signature,
                                     const Rule& rule);
std::vector<Violation> validate_configuration(const Signature& signature,
                                              const Configuration& config,
                                              const std::string& location =
                                                  "configuration");

// Every violation of the signature, the explicit rules and the
// configuration. Empty means valid.
std::vector<Violation> validate(const Signature& signature,
                                const RuleSet& rules,
                                const Configuration& config);

}  // namespace inet

#endif  // INET_VALIDATE_HPP_
