# Copyright 2026 The inetcalc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Interaction calculus and interaction nets, backed by a C++ core."""

from ._core import (
    AmbError,
    Configuration,
    Equation,
    NetFormatError,
    ParseError,
    System,
    Term,
    alpha_equal,
    from_json,
    graph_reduce,
    isomorphic,
    parse_system,
    profile,
    profile_names,
    reduce,
    to_json,
)

__all__ = [
    "AmbError",
    "Configuration",
    "Equation",
    "NetFormatError",
    "ParseError",
    "System",
    "Term",
    "alpha_equal",
    "from_json",
    "graph_reduce",
    "isomorphic",
    "parse_system",
    "profile",
    "profile_names",
    "reduce",
    "to_json",
]
