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

#ifndef INET_SIGNATURE_HPP_
#define INET_SIGNATURE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace inet {

enum class Attribute { kPlain, kEraser, kDuplicator, kAmb };

std::string_view attribute_name(Attribute a);

struct SymbolInfo {
  int arity = 0;
  Attribute attribute = Attribute::kPlain;

  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

// Declared agent symbols with their arities. Redeclaring a symbol with the
// same arity and attribute is a no-op, which lets profiles share symbols.
class Signature {
 public:
  enum class DeclareResult { kAdded, kSame, kConflict };

  DeclareResult declare(const std::string& symbol, int arity,
                        Attribute attribute = Attribute::kPlain);

  const SymbolInfo* find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol); }
  int arity(std::string_view symbol) const;

  bool is_amb(std::string_view symbol) const;

  // The unique symbol carrying the attribute, if any. When several carry it
  // (an invalid signature) the first in name order is returned.
  std::optional<std::string> with_attribute(Attribute a) const;
  std::optional<std::string> eraser() const {
    return with_attribute(Attribute::kEraser);
  }
  std::optional<std::string> duplicator() const {
    return with_attribute(Attribute::kDuplicator);
  }
  std::optional<std::string> amb() const {
    return with_attribute(Attribute::kAmb);
  }

  const std::map<std::string, SymbolInfo, std::less<>>& symbols() const {
    return symbols_;
  }
  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, SymbolInfo, std::less<>> symbols_;
};

}  // namespace inet

#endif  // INET_SIGNATURE_HPP_
