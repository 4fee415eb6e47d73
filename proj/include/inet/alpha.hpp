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

#ifndef INET_ALPHA_HPP_
#define INET_ALPHA_HPP_

#include "inet/rules.hpp"
#include "inet/term.hpp"

namespace inet {

// True iff a bijective renaming of bound names maps `a` onto `b`: same head
// order, equal equation multisets, equations compared without orientation.
// Free names must coincide exactly.
bool alpha_equal(const Configuration& a, const Configuration& b);

// Rules are alpha-equal when they match up to renaming of their (all bound)
// names, in either orientation of the active pair.
bool alpha_equal(const Rule& a, const Rule& b);

}  // namespace inet

#endif  // INET_ALPHA_HPP_
