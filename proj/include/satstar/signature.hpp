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

#ifndef SATSTAR_SIGNATURE_HPP
#define SATSTAR_SIGNATURE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satstar::syntax {

/// Thrown when a symbol is used at the wrong sort or arity.
struct SortError : std::runtime_error {
  std::string symbol;
  SortError(std::string sym, const std::string& msg)
      : std::runtime_error("sort error at '" + sym + "': " + msg), symbol(std::move(sym)) {}
};

inline const std::string kSortSet = "set";
inline const std::string kSortClass = "class";

/// A multi-sorted first-order signature. Identity is treated as a logical
/// predicate available at every sort and is not listed among the predicates.
struct Signature {
  struct Pred {
    std::string name;
    std::vector<std::string> arg_sorts;
  };
  struct Op {
    std::string name;
    std::vector<std::string> arg_sorts;
    std::string result_sort;
  };

  std::string name;
  std::vector<std::string> sorts;
  std::vector<Pred> preds;
  std::vector<Op> ops;

  bool has_sort(const std::string& s) const {
    for (const auto& x : sorts)
      if (x == s) return true;
    return false;
  }

  const Pred* find_pred(const std::string& n) const {
    for (const auto& p : preds)
      if (p.name == n) return &p;
    return nullptr;
  }

  const Op* find_op(const std::string& n) const {
    for (const auto& o : ops)
      if (o.name == n) return &o;
    return nullptr;
  }

  std::optional<int> pred_index(const std::string& n) const {
    for (std::size_t i = 0; i < preds.size(); ++i)
      if (preds[i].name == n) return static_cast<int>(i);
    return std::nullopt;
  }

  std::optional<int> op_index(const std::string& n) const {
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (ops[i].name == n) return static_cast<int>(i);
    return std::nullopt;
  }

  std::optional<int> sort_index(const std::string& s) const {
    for (std::size_t i = 0; i < sorts.size(); ++i)
      if (sorts[i] == s) return static_cast<int>(i);
    return std::nullopt;
  }
};

/// The signature of pure set theory: one sort, membership.
inline Signature sig_s() {
  Signature g;
  g.name = "s";
  g.sorts = {kSortSet};
  g.preds = {{"in", {kSortSet, kSortSet}}};
  return g;
}

/// Two-sorted class theory: adds the class sort and set-in-class membership.
inline Signature sig_c() {
  Signature g = sig_s();
  g.name = "c";
  g.sorts = {kSortSet, kSortClass};
  g.preds.push_back({"class-in", {kSortSet, kSortClass}});
  return g;
}

/// s plus the empty-set constant and the binary add operation.
inline Signature sig_s_prime() {
  Signature g = sig_s();
  g.name = "s'";
  g.ops = {{"empty", {}, kSortSet}, {"adjoin", {kSortSet, kSortSet}, kSortSet}};
  return g;
}

inline Signature sig_c_prime() {
  Signature g = sig_c();
  g.name = "c'";
  g.ops = {{"empty", {}, kSortSet}, {"adjoin", {kSortSet, kSortSet}, kSortSet}};
  return g;
}

/// s plus a unary predicate V.
inline Signature sig_s_v() {
  Signature g = sig_s();
  g.name = "sV";
  g.preds.push_back({"V", {kSortSet}});
  return g;
}

/// s plus V and the constants P and G.
inline Signature sig_s_star() {
  Signature g = sig_s_v();
  g.name = "s*";
  g.ops = {{"P", {}, kSortSet}, {"G", {}, kSortSet}};
  return g;
}

/// c plus V, P, G.
inline Signature sig_c_star() {
  Signature g = sig_c();
  g.name = "c*";
  g.preds.push_back({"V", {kSortSet}});
  g.ops = {{"P", {}, kSortSet}, {"G", {}, kSortSet}};
  return g;
}

/// Propositional letters as nullary predicates over a dummy sort.
inline Signature sig_prop(const std::vector<std::string>& letters = {"p", "q", "r"}) {
  Signature g;
  g.name = "prop";
  g.sorts = {kSortSet};
  for (const auto& l : letters) g.preds.push_back({l, {}});
  return g;
}

/// Looks up a built-in signature by name.
inline std::optional<Signature> builtin_signature(const std::string& n) {
  if (n == "s") return sig_s();
  if (n == "c") return sig_c();
  if (n == "s'") return sig_s_prime();
  if (n == "c'") return sig_c_prime();
  if (n == "sV") return sig_s_v();
  if (n == "s*") return sig_s_star();
  if (n == "c*") return sig_c_star();
  if (n == "prop") return sig_prop();
  return std::nullopt;
}

}  // namespace satstar::syntax

#endif  // SATSTAR_SIGNATURE_HPP
