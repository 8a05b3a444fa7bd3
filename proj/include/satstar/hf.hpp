/* Copyright 2026 The satstar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SATSTAR_HF_HPP
#define SATSTAR_HF_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satstar/sexpr.hpp"

namespace satstar::hf {

struct StageTooLarge : std::runtime_error {
  explicit StageTooLarge(int n)
      : std::runtime_error("stage(" + std::to_string(n) + ") is not enumerable (cap is 5)") {}
};

/// A canonical hereditarily finite set.
///
/// Children are stored strictly increasing under the canonical total order
/// (recursive lexicographic comparison of child lists), so structural
/// equality coincides with extensional equality. Values are immutable and
/// cheap to copy; sharing is by shared_ptr.
class HfSet {
 public:
  HfSet() : node_(empty_node()) {}

  static HfSet empty() { return HfSet(); }

  /// Builds the canonical set with the given children (sorted, deduplicated).
  static HfSet of(std::vector<HfSet> children) {
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    return HfSet(make_node(std::move(children)));
  }

  /// x.adjoin(y) is x with y added: the add operation.
  HfSet adjoin(const HfSet& y) const {
    const auto& cs = children();
    auto it = std::lower_bound(cs.begin(), cs.end(), y);
    if (it != cs.end() && *it == y) return *this;
    std::vector<HfSet> next;
    next.reserve(cs.size() + 1);
    next.insert(next.end(), cs.begin(), it);
    next.push_back(y);
    next.insert(next.end(), it, cs.end());
    return HfSet(make_node(std::move(next)));
  }

  const std::vector<HfSet>& children() const { return node_->children; }
  bool is_empty() const { return node_->children.empty(); }
  std::size_t size() const { return node_->children.size(); }
  int rank() const { return node_->rank; }
  std::size_t hash() const { return node_->hash; }

  bool contains(const HfSet& y) const {
    const auto& cs = children();
    auto it = std::lower_bound(cs.begin(), cs.end(), y);
    return it != cs.end() && *it == y;
  }

  bool operator==(const HfSet& o) const {
    if (node_ == o.node_) return true;
    if (node_->hash != o.node_->hash || node_->rank != o.node_->rank ||
        node_->children.size() != o.node_->children.size())
      return false;
    for (std::size_t i = 0; i < node_->children.size(); ++i)
      if (!(node_->children[i] == o.node_->children[i])) return false;
    return true;
  }
  bool operator!=(const HfSet& o) const { return !(*this == o); }

  /// Canonical total order: lexicographic on the (already canonical) child
  /// lists, children compared recursively.
  bool operator<(const HfSet& o) const { return compare(*this, o) < 0; }
  bool operator<=(const HfSet& o) const { return compare(*this, o) <= 0; }

  static int compare(const HfSet& a, const HfSet& b) {
    if (a.node_ == b.node_) return 0;
    const auto& xs = a.children();
    const auto& ys = b.children();
    std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare(xs[i], ys[i]);
      if (c != 0) return c;
    }
    if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
    return 0;
  }

  /// Textual literal: `{}`, `{{} {{}}}`; children in canonical order.
  std::string to_literal() const {
    std::string out;
    write(out);
    return out;
  }

  static HfSet from_literal(std::string_view text) {
    return from_sexpr(sexpr::parse_one(text));
  }

  static HfSet from_sexpr(const sexpr::Node& n) {
    if (!n.is_braces()) throw sexpr::ParseError("expected a {...} set literal", n.pos);
    std::vector<HfSet> cs;
    cs.reserve(n.size());
    for (const auto& c : n.items()) cs.push_back(from_sexpr(c));
    return of(std::move(cs));
  }

 private:
  struct Node {
    std::vector<HfSet> children;
    int rank;
    std::size_t hash;
  };

  explicit HfSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make_node(std::vector<HfSet> children) {
    if (children.empty()) return empty_node();
    auto n = std::make_shared<Node>();
    int r = 0;
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& c : children) {
      r = std::max(r, c.rank() + 1);
      h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    n->children = std::move(children);
    n->rank = r;
    n->hash = h;
    return n;
  }

  static const std::shared_ptr<const Node>& empty_node() {
    static const std::shared_ptr<const Node> e = [] {
      auto n = std::make_shared<Node>();
      n->rank = 0;
      n->hash = 0x61c8864680b583ebull;
      return n;
    }();
    return e;
  }

  void write(std::string& out) const {
    out += '{';
    const auto& cs = children();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ' ';
      cs[i].write(out);
    }
    out += '}';
  }

  std::shared_ptr<const Node> node_;
};

inline HfSet empty() { return HfSet::empty(); }

inline HfSet adjoin(const HfSet& x, const HfSet& y) { return x.adjoin(y); }

inline int rank(const HfSet& x) { return x.rank(); }

/// All sets of rank < n, i.e. the cumulative stage V_n. Capped at n <= 5:
/// |V_6| = 2^65536.
inline std::vector<HfSet> stage(int n) {
  if (n < 0 || n > 5) throw StageTooLarge(n);
  std::vector<HfSet> cur;  // V_0
  for (int k = 1; k <= n; ++k) {
    // V_k = powerset of V_{k-1}
    std::vector<HfSet> next;
    std::size_t m = cur.size();
    next.reserve(std::size_t{1} << m);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      std::vector<HfSet> cs;
      for (std::size_t i = 0; i < m; ++i)
        if (bits & (std::uint64_t{1} << i)) cs.push_back(cur[i]);
      next.push_back(HfSet::of(std::move(cs)));
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

/// von Neumann natural: 0 = {}, k+1 = k adjoin k. rank(vn(k)) == k.
inline HfSet von_neumann(int k) {
  HfSet x;
  for (int i = 0; i < k; ++i) x = x.adjoin(x);
  return x;
}

/// Recognizes von Neumann naturals; returns the value.
inline std::optional<int> as_von_neumann(const HfSet& x) {
  int n = static_cast<int>(x.size());
  if (x.rank() != n) return std::nullopt;
  // A natural's children are exactly the naturals below it.
  const auto& cs = x.children();
  for (int i = 0; i < n; ++i) {
    if (cs[i].rank() != i) return std::nullopt;
    if (static_cast<int>(cs[i].size()) != i) return std::nullopt;
  }
  // Ranks and sizes matching 0..n-1 pins each child by induction, but the
  // child lists must themselves be naturals; verify the largest one.
  if (n > 0 && !(cs.back() == von_neumann(n - 1))) return std::nullopt;
  for (int i = 0; i + 1 < n; ++i)
    if (!cs.back().contains(cs[i])) return std::nullopt;
  return n;
}

/// Ackermann coding of naturals: n = sum 2^{a_i}  <->  { ack(a_i) }.
/// Compact: rank grows logarithmically.
inline HfSet ackermann(std::uint64_t n) {
  std::vector<HfSet> cs;
  for (int bit = 0; n != 0; ++bit, n >>= 1)
    if (n & 1) cs.push_back(ackermann(static_cast<std::uint64_t>(bit)));
  return HfSet::of(std::move(cs));
}

inline std::optional<std::uint64_t> as_ackermann(const HfSet& x) {
  std::uint64_t n = 0;
  for (const auto& c : x.children()) {
    auto bit = as_ackermann(c);
    if (!bit || *bit >= 64) return std::nullopt;
    std::uint64_t mask = std::uint64_t{1} << *bit;
    if (n & mask) return std::nullopt;
    n |= mask;
  }
  return n;
}

/// Kuratowski pair {{a} {a b}}.
inline HfSet pair(const HfSet& a, const HfSet& b) {
  return HfSet::of({HfSet::of({a}), HfSet::of({a, b})});
}

/// Decodes a Kuratowski pair.
inline std::optional<std::pair<HfSet, HfSet>> as_pair(const HfSet& x) {
  const auto& cs = x.children();
  if (cs.size() == 1) {
    if (cs[0].size() != 1) return std::nullopt;
    const HfSet& a = cs[0].children()[0];
    return std::make_pair(a, a);
  }
  if (cs.size() != 2) return std::nullopt;
  const HfSet *single = nullptr, *dbl = nullptr;
  for (const auto& c : cs) {
    if (c.size() == 1) single = &c;
    else if (c.size() == 2) dbl = &c;
  }
  if (!single || !dbl) return std::nullopt;
  const HfSet& a = single->children()[0];
  const HfSet& p = dbl->children()[0];
  const HfSet& q = dbl->children()[1];
  if (a == p) return std::make_pair(a, q);
  if (a == q) return std::make_pair(a, p);
  return std::nullopt;
}

/// Union of two sets.
inline HfSet set_union(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> cs(a.children());
  cs.insert(cs.end(), b.children().begin(), b.children().end());
  return HfSet::of(std::move(cs));
}

/// Transitive closure members of x (not including x itself).
inline void transitive_closure_into(const HfSet& x, std::vector<HfSet>& out) {
  for (const auto& c : x.children()) {
    out.push_back(c);
    transitive_closure_into(c, out);
  }
}

inline std::vector<HfSet> transitive_closure(const HfSet& x) {
  std::vector<HfSet> out;
  transitive_closure_into(x, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace satstar::hf

#endif  // SATSTAR_HF_HPP
