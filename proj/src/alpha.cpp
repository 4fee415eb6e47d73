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

#include "inet/alpha.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace inet {

namespace {

// Partial bijection between the bound names of two sides, with an undo log
// for backtracking.
class Matcher {
 public:
  Matcher(const NameCounts& a_names, const NameCounts& b_names)
      : a_names_(a_names), b_names_(b_names) {}

  bool term(const Term& a, const Term& b) {
    if (a.is_name() != b.is_name()) return false;
    if (a.is_name()) return name(a.label(), b.label());
    if (a.label() != b.label() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (!term(a.args()[i], b.args()[i])) return false;
    }
    return true;
  }

  std::size_t mark() const { return log_.size(); }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      auto [x, y] = log_.back();
      log_.pop_back();
      fwd_.erase(x);
      bwd_.erase(y);
    }
  }

 private:
  bool name(const std::string& x, const std::string& y) {
    int cx = count(a_names_, x);
    int cy = count(b_names_, y);
    if (cx != cy) return false;
    if (cx < 2) return x == y;  // free names are interface labels
    auto f = fwd_.find(x);
    if (f != fwd_.end()) return f->second == y;
    if (bwd_.count(y) != 0) return false;
    fwd_.emplace(x, y);
    bwd_.emplace(y, x);
    log_.emplace_back(x, y);
    return true;
  }

  static int count(const NameCounts& names, const std::string& x) {
    auto it = names.find(x);
    return it == names.end() ? 0 : it->second;
  }

  const NameCounts& a_names_;
  const NameCounts& b_names_;
  std::unordered_map<std::string, std::string> fwd_;
  std::unordered_map<std::string, std::string> bwd_;
  std::vector<std::pair<std::string, std::string>> log_;
};

// Printed shape with bound names erased; a cheap necessary condition for two
// terms to match.
void shape(const Term& t, const NameCounts& names, std::string& out) {
  if (t.is_name()) {
    auto it = names.find(t.label());
    if (it != names.end() && it->second >= 2) {
      out += '_';
    } else {
      out += '\'';
      out += t.label();
    }
    return;
  }
  out += t.label();
  out += '(';
  for (const Term& a : t.args()) {
    shape(a, names, out);
    out += ',';
  }
  out += ')';
}

std::string equation_shape(const Equation& e, const NameCounts& names) {
  std::string l, r;
  shape(e.left, names, l);
  shape(e.right, names, r);
  if (r < l) std::swap(l, r);
  return l + "=" + r;
}

}  // namespace

bool alpha_equal(const Configuration& a, const Configuration& b) {
  if (a.head.size() != b.head.size() ||
      a.equations.size() != b.equations.size()) {
    return false;
  }
  NameCounts an = names_of(a);
  NameCounts bn = names_of(b);
  if (an.size() != bn.size()) return false;

  Matcher m(an, bn);
  for (std::size_t i = 0; i < a.head.size(); ++i) {
    if (!m.term(a.head[i], b.head[i])) return false;
  }

  const std::size_t n = a.equations.size();
  std::vector<std::string> a_shapes(n), b_shapes(n);
  for (std::size_t i = 0; i < n; ++i) {
    a_shapes[i] = equation_shape(a.equations[i], an);
    b_shapes[i] = equation_shape(b.equations[i], bn);
  }
  {
    auto sa = a_shapes, sb = b_shapes;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Match the most constrained (rarest shape) equations first.
  std::unordered_map<std::string, int> frequency;
  for (const auto& s : a_shapes) ++frequency[s];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return frequency[a_shapes[x]] < frequency[a_shapes[y]];
  });

  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> match = [&](std::size_t k) -> bool {
    if (k == n) return true;
    const std::size_t i = order[k];
    const Equation& ea = a.equations[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || b_shapes[j] != a_shapes[i]) continue;
      const Equation& eb = b.equations[j];
      for (int orient = 0; orient < 2; ++orient) {
        std::size_t mark = m.mark();
        const Term& bl = orient == 0 ? eb.left : eb.right;
        const Term& br = orient == 0 ? eb.right : eb.left;
        if (m.term(ea.left, bl) && m.term(ea.right, br)) {
          used[j] = true;
          if (match(k + 1)) return true;
          used[j] = false;
        }
        m.undo(mark);
      }
    }
    return false;
  };
  return match(0);
}

bool alpha_equal(const Rule& a, const Rule& b) {
  auto attempt = [](const Rule& x, const Rule& y) {
    if (x.lhs_a != y.lhs_a || x.lhs_b != y.lhs_b ||
        x.rhs_a.size() != y.rhs_a.size() || x.rhs_b.size() != y.rhs_b.size()) {
      return false;
    }
    NameCounts xn, yn;
    for (const Term& t : x.rhs_a) add_names(t, xn);
    for (const Term& t : x.rhs_b) add_names(t, xn);
    for (const Term& t : y.rhs_a) add_names(t, yn);
    for (const Term& t : y.rhs_b) add_names(t, yn);
    Matcher m(xn, yn);
    for (std::size_t i = 0; i < x.rhs_a.size(); ++i) {
      if (!m.term(x.rhs_a[i], y.rhs_a[i])) return false;
    }
    for (std::size_t i = 0; i < x.rhs_b.size(); ++i) {
      if (!m.term(x.rhs_b[i], y.rhs_b[i])) return false;
    }
    return true;
  };
  if (attempt(a, b)) return true;
  return attempt(a, b.oriented(b.lhs_b));
}

}  // namespace inet
