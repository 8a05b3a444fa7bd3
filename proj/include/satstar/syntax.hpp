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

#ifndef SATSTAR_SYNTAX_HPP
#define SATSTAR_SYNTAX_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "satstar/ast.hpp"
#include "satstar/sexpr.hpp"
#include "satstar/signature.hpp"

namespace satstar::syntax {

using sexpr::ParseError;

struct ArityError : std::runtime_error {
  explicit ArityError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Printing. The surface syntax:
//   (forall u f) (exists u f) (not f) (and f f) (or f f) (implies f f)
//   (iff f f) (in t t) (= t t) (class-in t T) (V t)
//   terms: variables as bare ids, (class S) for class variables,
//   empty, (adjoin t t), P, G, (class-abs x f)
// Nullary predicates and operations print as bare identifiers.
// ---------------------------------------------------------------------------

inline sexpr::Node to_sexpr(const Term& t);
inline sexpr::Node to_sexpr(const Formula& f);

inline sexpr::Node binder_sexpr(const Var& v) {
  if (v.sort == kSortClass)
    return sexpr::Node::list({sexpr::Node::atom("class"), sexpr::Node::atom(v.name)});
  return sexpr::Node::atom(v.name);
}

inline sexpr::Node to_sexpr(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return binder_sexpr(t.as_var());
    case Term::Kind::App: {
      if (t.args().empty()) return sexpr::Node::atom(t.op_name());
      std::vector<sexpr::Node> xs{sexpr::Node::atom(t.op_name())};
      for (const auto& a : t.args()) xs.push_back(to_sexpr(a));
      return sexpr::Node::list(std::move(xs));
    }
    case Term::Kind::ClassAbs:
      return sexpr::Node::list({sexpr::Node::atom("class-abs"),
                                sexpr::Node::atom(t.bound_var().name), to_sexpr(t.body())});
  }
  return sexpr::Node::atom("?");
}

inline sexpr::Node to_sexpr(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      if (f.args().empty()) return sexpr::Node::atom(f.pred_name());
      std::vector<sexpr::Node> xs{sexpr::Node::atom(f.pred_name())};
      for (const auto& a : f.args()) xs.push_back(to_sexpr(a));
      return sexpr::Node::list(std::move(xs));
    }
    case K::Equal:
      return sexpr::Node::list({sexpr::Node::atom("="), to_sexpr(f.lhs()), to_sexpr(f.rhs())});
    case K::Neg:
      return sexpr::Node::list({sexpr::Node::atom("not"), to_sexpr(f.sub())});
    case K::Bin: {
      const char* name = nullptr;
      switch (f.bin_op()) {
        case BinOp::And: name = "and"; break;
        case BinOp::Or: name = "or"; break;
        case BinOp::Implies: name = "implies"; break;
        case BinOp::Iff: name = "iff"; break;
      }
      return sexpr::Node::list({sexpr::Node::atom(name), to_sexpr(f.left()), to_sexpr(f.right())});
    }
    case K::Quant: {
      const char* name = f.quant_kind() == Quant::Forall ? "forall" : "exists";
      return sexpr::Node::list({sexpr::Node::atom(name), binder_sexpr(f.bound_var()),
                                to_sexpr(f.body())});
    }
  }
  return sexpr::Node::atom("?");
}

inline std::string print(const Term& t) { return to_sexpr(t).to_string(); }
inline std::string print(const Formula& f) { return to_sexpr(f).to_string(); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Scope {
  std::vector<Var> binders;

  std::optional<std::string> sort_of(const std::string& name) const {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      if (it->name == name) return it->sort;
    return std::nullopt;
  }
};

inline bool is_connective(const std::string& s) {
  return s == "forall" || s == "exists" || s == "not" || s == "and" || s == "or" ||
         s == "implies" || s == "iff" || s == "=" || s == "class" || s == "class-abs";
}

inline Var parse_binder(const sexpr::Node& n, const Signature& sig) {
  if (n.is_atom()) {
    if (is_connective(n.text()) || sig.find_op(n.text()) || sig.find_pred(n.text()))
      throw ParseError("'" + n.text() + "' cannot be used as a variable", n.pos);
    return {n.text(), kSortSet};
  }
  if (n.is_list() && n.size() == 2 && n[0].is_atom() && n[0].text() == "class" && n[1].is_atom())
    return {n[1].text(), kSortClass};
  throw ParseError("expected a variable binder", n.pos);
}

inline Term parse_term(const sexpr::Node& n, const Signature& sig, Scope& scope);
inline Formula parse_formula(const sexpr::Node& n, const Signature& sig, Scope& scope);

inline Term parse_term(const sexpr::Node& n, const Signature& sig, Scope& scope) {
  if (n.is_braces()) throw ParseError("set literal is not a term here", n.pos);
  if (n.is_atom()) {
    const std::string& s = n.text();
    if (const auto* op = sig.find_op(s)) {
      if (!op->arg_sorts.empty())
        throw SortError(s, "operation expects " + std::to_string(op->arg_sorts.size()) + " arguments");
      return Term::app(s, {}, op->result_sort);
    }
    if (is_connective(s) || sig.find_pred(s))
      throw ParseError("'" + s + "' is not a term", n.pos);
    auto sort = scope.sort_of(s);
    return Term::var(s, sort ? *sort : kSortSet);
  }
  if (n.size() == 0 || !n[0].is_atom()) throw ParseError("expected a term", n.pos);
  const std::string& head = n[0].text();
  if (head == "class") {
    if (n.size() != 2 || !n[1].is_atom()) throw ParseError("expected (class S)", n.pos);
    return Term::var(n[1].text(), kSortClass);
  }
  if (head == "class-abs") {
    if (n.size() != 3 || !n[1].is_atom()) throw ParseError("expected (class-abs x f)", n.pos);
    Var bound{n[1].text(), kSortSet};
    scope.binders.push_back(bound);
    Formula body = parse_formula(n[2], sig, scope);
    scope.binders.pop_back();
    return Term::class_abs(bound, std::move(body));
  }
  const auto* op = sig.find_op(head);
  if (!op) throw ParseError("unknown operation '" + head + "'", n.pos);
  if (n.size() - 1 != op->arg_sorts.size())
    throw SortError(head, "operation expects " + std::to_string(op->arg_sorts.size()) +
                              " arguments, got " + std::to_string(n.size() - 1));
  std::vector<Term> args;
  for (std::size_t i = 1; i < n.size(); ++i) {
    Term a = parse_term(n[i], sig, scope);
    if (a.sort() != op->arg_sorts[i - 1])
      throw SortError(head, "argument " + std::to_string(i) + " has sort " + a.sort() +
                                ", expected " + op->arg_sorts[i - 1]);
    args.push_back(std::move(a));
  }
  return Term::app(head, std::move(args), op->result_sort);
}

inline Formula parse_formula(const sexpr::Node& n, const Signature& sig, Scope& scope) {
  if (n.is_braces()) throw ParseError("set literal is not a formula", n.pos);
  if (n.is_atom()) {
    const auto* p = sig.find_pred(n.text());
    if (p && p->arg_sorts.empty()) return Formula::atom(n.text(), {});
    throw ParseError("expected a formula, got '" + n.text() + "'", n.pos);
  }
  if (n.size() == 0 || !n[0].is_atom()) throw ParseError("expected a formula", n.pos);
  const std::string& head = n[0].text();

  auto expect = [&](std::size_t k) {
    if (n.size() != k + 1)
      throw ParseError("'" + head + "' expects " + std::to_string(k) + " arguments", n.pos);
  };

  if (head == "forall" || head == "exists") {
    expect(2);
    Var v = parse_binder(n[1], sig);
    if (!sig.has_sort(v.sort)) throw SortError(v.name, "sort '" + v.sort + "' not in signature");
    scope.binders.push_back(v);
    Formula body = parse_formula(n[2], sig, scope);
    scope.binders.pop_back();
    return Formula::quant(head == "forall" ? Quant::Forall : Quant::Exists, v, std::move(body));
  }
  if (head == "not") {
    expect(1);
    return Formula::neg(parse_formula(n[1], sig, scope));
  }
  if (head == "and" || head == "or" || head == "implies" || head == "iff") {
    expect(2);
    BinOp op = head == "and" ? BinOp::And
               : head == "or" ? BinOp::Or
               : head == "implies" ? BinOp::Implies
                                   : BinOp::Iff;
    Formula l = parse_formula(n[1], sig, scope);
    Formula r = parse_formula(n[2], sig, scope);
    return Formula::bin(op, std::move(l), std::move(r));
  }
  if (head == "=") {
    expect(2);
    Term l = parse_term(n[1], sig, scope);
    Term r = parse_term(n[2], sig, scope);
    if (l.sort() != r.sort()) throw SortError("=", "arguments have different sorts");
    return Formula::equal(std::move(l), std::move(r));
  }
  const auto* p = sig.find_pred(head);
  if (!p) throw ParseError("unknown predicate '" + head + "'", n.pos);
  if (n.size() - 1 != p->arg_sorts.size())
    throw SortError(head, "predicate expects " + std::to_string(p->arg_sorts.size()) +
                              " arguments, got " + std::to_string(n.size() - 1));
  std::vector<Term> args;
  for (std::size_t i = 1; i < n.size(); ++i) {
    Term a = parse_term(n[i], sig, scope);
    if (a.sort() != p->arg_sorts[i - 1])
      throw SortError(head, "argument " + std::to_string(i) + " has sort " + a.sort() +
                                ", expected " + p->arg_sorts[i - 1]);
    args.push_back(std::move(a));
  }
  return Formula::atom(head, std::move(args));
}

}  // namespace detail

inline Formula parse_formula(const sexpr::Node& n, const Signature& sig) {
  detail::Scope scope;
  return detail::parse_formula(n, sig, scope);
}

inline Formula parse_formula(std::string_view text, const Signature& sig) {
  return parse_formula(sexpr::parse_one(text), sig);
}

inline Term parse_term(const sexpr::Node& n, const Signature& sig) {
  detail::Scope scope;
  return detail::parse_term(n, sig, scope);
}

inline Term parse_term(std::string_view text, const Signature& sig) {
  return parse_term(sexpr::parse_one(text), sig);
}

// ---------------------------------------------------------------------------
// Free variables, fresh names, substitution
// ---------------------------------------------------------------------------

inline std::set<Var> free_vars(const Formula& f) {
  return std::set<Var>(f.free().begin(), f.free().end());
}
inline std::set<Var> free_vars(const Term& t) {
  return std::set<Var>(t.free().begin(), t.free().end());
}

/// Deterministic fresh variable: v#k with k minimal such that the name is
/// not in `avoid`.
inline Var fresh_var(const std::set<std::string>& avoid, const std::string& sort = kSortSet) {
  for (int k = 0;; ++k) {
    std::string name = "v#" + std::to_string(k);
    if (!avoid.count(name)) return {name, sort};
  }
}

inline void collect_names(const std::vector<Var>& vs, std::set<std::string>& out) {
  for (const auto& v : vs) out.insert(v.name);
}

using Substitution = std::map<Var, Term>;

inline Term substitute(const Term& t, const Substitution& m);
inline Formula substitute(const Formula& f, const Substitution& m);

namespace detail {

/// Names that could be captured by, or clash with, a renamed binder.
inline std::set<std::string> danger_names(const Substitution& m, const std::vector<Var>& body_free) {
  std::set<std::string> out;
  collect_names(body_free, out);
  for (const auto& [v, t] : m) {
    out.insert(v.name);
    collect_names(t.free(), out);
  }
  return out;
}

/// Shared binder handling for Quant and ClassAbs: returns the (possibly
/// renamed) binder and the substituted body.
template <class Body>
std::pair<Var, Body> subst_under_binder(const Var& bound, const Body& body, const Substitution& m) {
  Substitution rel;
  bool capture = false;
  for (const auto& [v, t] : m) {
    if (v == bound) continue;
    bool applies = false;
    for (const auto& fv : body.free())
      if (fv == v) applies = true;
    if (!applies) continue;
    rel.emplace(v, t);
    for (const auto& fv : t.free())
      if (fv == bound) capture = true;
  }
  if (rel.empty()) return {bound, body};
  if (!capture) return {bound, substitute(body, rel)};
  Var nb = fresh_var(danger_names(rel, body.free()), bound.sort);
  Substitution rename{{bound, Term::var(nb)}};
  Body renamed = substitute(body, rename);
  return {nb, substitute(renamed, rel)};
}

}  // namespace detail

inline Term substitute(const Term& t, const Substitution& m) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = m.find(t.as_var());
      if (it == m.end()) return t;
      if (it->second.sort() != t.sort())
        throw SortError(t.as_var().name, "substituted term has sort " + it->second.sort() +
                                             ", expected " + t.sort());
      return it->second;
    }
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const auto& a : t.args()) {
        Term b = substitute(a, m);
        if (!(b == a)) changed = true;
        args.push_back(std::move(b));
      }
      if (!changed) return t;
      return Term::app(t.op_name(), std::move(args), t.sort());
    }
    case Term::Kind::ClassAbs: {
      auto [v, body] = detail::subst_under_binder(t.bound_var(), t.body(), m);
      if (v == t.bound_var() && body == t.body()) return t;
      return Term::class_abs(v, std::move(body));
    }
  }
  return t;
}

inline Formula substitute(const Formula& f, const Substitution& m) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      std::vector<Term> args;
      bool changed = false;
      for (const auto& a : f.args()) {
        Term b = substitute(a, m);
        if (!(b == a)) changed = true;
        args.push_back(std::move(b));
      }
      if (!changed) return f;
      return Formula::atom(f.pred_name(), std::move(args));
    }
    case K::Equal: {
      Term l = substitute(f.lhs(), m), r = substitute(f.rhs(), m);
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::equal(std::move(l), std::move(r));
    }
    case K::Neg: {
      Formula s = substitute(f.sub(), m);
      if (s == f.sub()) return f;
      return Formula::neg(std::move(s));
    }
    case K::Bin: {
      Formula l = substitute(f.left(), m), r = substitute(f.right(), m);
      if (l == f.left() && r == f.right()) return f;
      return Formula::bin(f.bin_op(), std::move(l), std::move(r));
    }
    case K::Quant: {
      auto [v, body] = detail::subst_under_binder(f.bound_var(), f.body(), m);
      if (v == f.bound_var() && body == f.body()) return f;
      return Formula::quant(f.quant_kind(), v, std::move(body));
    }
  }
  return f;
}

/// Substitutes a single term for a variable.
inline Formula substitute(const Formula& f, const Var& v, const Term& t) {
  return substitute(f, Substitution{{v, t}});
}

// ---------------------------------------------------------------------------
// Relativization and schema instantiation
// ---------------------------------------------------------------------------

/// Restricts every quantifier over `pred`'s argument sort to `pred`:
/// forall x B becomes forall x (pred(x) -> B'), exists dually.
inline Formula relativize(const Formula& f, const std::string& pred,
                          const std::string& sort = kSortSet) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Equal:
      return f;
    case K::Neg:
      return Formula::neg(relativize(f.sub(), pred, sort));
    case K::Bin:
      return Formula::bin(f.bin_op(), relativize(f.left(), pred, sort),
                          relativize(f.right(), pred, sort));
    case K::Quant: {
      Formula body = relativize(f.body(), pred, sort);
      if (f.bound_var().sort != sort)
        return Formula::quant(f.quant_kind(), f.bound_var(), std::move(body));
      Formula guard = Formula::atom(pred, {Term::var(f.bound_var())});
      if (f.quant_kind() == Quant::Forall)
        return Formula::forall(f.bound_var(), Formula::implies(std::move(guard), std::move(body)));
      return Formula::exists(f.bound_var(), Formula::conj(std::move(guard), std::move(body)));
    }
  }
  return f;
}

namespace detail {

inline void require_free_subset(const Formula& f, const std::vector<std::string>& allowed,
                                const char* what) {
  for (const auto& v : f.free()) {
    if (v.sort != kSortSet)
      throw ArityError(std::string(what) + ": free variable " + v.name + " is not set-sorted");
    bool ok = false;
    for (const auto& a : allowed)
      if (v.name == a) ok = true;
    if (!ok)
      throw ArityError(std::string(what) + ": free variable '" + v.name +
                       "' is not among the schema slots");
  }
}

}  // namespace detail

inline Formula in_atom(const Term& a, const Term& b) { return Formula::atom("in", {a, b}); }
inline Formula in_atom(const std::string& a, const std::string& b) {
  return in_atom(Term::var(a), Term::var(b));
}

/// v is an ordinal: transitive and linearly ordered by membership.
inline Formula ord_formula(const Var& v) {
  std::string n1 = v.name == "u" ? "u'" : "u";
  std::string n2 = v.name == "w" ? "w'" : "w";
  Term tv = Term::var(v);
  Term u = Term::var(n1), w = Term::var(n2);
  Formula trans = Formula::forall(
      {n1, kSortSet},
      Formula::implies(in_atom(u, tv),
                       Formula::forall({n2, kSortSet},
                                       Formula::implies(in_atom(w, u), in_atom(w, tv)))));
  Formula linear = Formula::forall(
      {n1, kSortSet},
      Formula::forall(
          {n2, kSortSet},
          Formula::implies(Formula::conj(in_atom(u, tv), in_atom(w, tv)),
                           Formula::disj(in_atom(u, w),
                                         Formula::disj(in_atom(w, u), Formula::equal(u, w))))));
  return Formula::conj(std::move(trans), std::move(linear));
}

/// The comprehension instance for a slot formula psi(z, y):
///   forall y forall x exists x' forall z (z in x' <-> z in x /\ psi)
inline Formula instantiate_comprehension(const Formula& psi) {
  detail::require_free_subset(psi, {"z", "y"}, "comprehension slot");
  Term z = Term::var("z"), x = Term::var("x"), xp = Term::var("x'");
  Formula body = Formula::iff(in_atom(z, xp), Formula::conj(in_atom(z, x), psi));
  return Formula::forall({"y", kSortSet},
                         Formula::forall({"x", kSortSet},
                                         Formula::exists({"x'", kSortSet},
                                                         Formula::forall({"z", kSortSet}, std::move(body)))));
}

/// The collection instance for a slot formula psi(z, b, y):
///   forall y forall x exists a (Ord a /\
///     forall z (z in x -> (exists b (Ord b /\ psi) -> exists b (b in a /\ psi))))
inline Formula instantiate_collection(const Formula& psi) {
  detail::require_free_subset(psi, {"z", "b", "y"}, "collection slot");
  Term z = Term::var("z"), x = Term::var("x"), a = Term::var("a"), b = Term::var("b");
  Formula inner = Formula::implies(
      Formula::exists({"b", kSortSet}, Formula::conj(ord_formula({"b", kSortSet}), psi)),
      Formula::exists({"b", kSortSet}, Formula::conj(in_atom(b, a), psi)));
  Formula per_z = Formula::forall({"z", kSortSet}, Formula::implies(in_atom(z, x), std::move(inner)));
  Formula ex_a = Formula::exists(
      {"a", kSortSet}, Formula::conj(ord_formula({"a", kSortSet}), std::move(per_z)));
  return Formula::forall({"y", kSortSet}, Formula::forall({"x", kSortSet}, std::move(ex_a)));
}

// ---------------------------------------------------------------------------
// Theories: explicit sentences plus schema generators
// ---------------------------------------------------------------------------

enum class SchemaKind { Comprehension, Collection };

struct SchemaGen {
  SchemaKind kind;
  /// When set, every instance is relativized to the unary predicate V.
  bool relativized_to_v = false;
};

struct Theory {
  Signature sig;
  std::vector<Formula> sentences;
  std::vector<SchemaGen> generators;
  bool with_infinity = false;

  /// Instantiates one generator at a slot formula.
  Formula instance(const SchemaGen& g, const Formula& slot) const {
    Formula f = g.kind == SchemaKind::Comprehension ? instantiate_comprehension(slot)
                                                    : instantiate_collection(slot);
    if (g.relativized_to_v) f = relativize(f, "V");
    return f;
  }

  void check_closed() const {
    for (const auto& s : sentences)
      if (!s.closed()) throw ArityError("theory sentence is not closed: " + print(s));
  }
};

// ---------------------------------------------------------------------------
// Subexpression collection
// ---------------------------------------------------------------------------

struct SubExprs {
  std::vector<Formula> formulas;  // deduplicated, children before parents
  std::vector<Term> terms;
};

namespace detail {

inline void collect_sub(const Term& t, SubExprs& out, std::set<Term>& seen_t,
                        std::set<Formula>& seen_f);

inline void collect_sub(const Formula& f, SubExprs& out, std::set<Term>& seen_t,
                        std::set<Formula>& seen_f) {
  if (seen_f.count(f)) return;
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equal:
      for (const auto& a : f.args()) collect_sub(a, out, seen_t, seen_f);
      break;
    case Formula::Kind::Neg:
      collect_sub(f.sub(), out, seen_t, seen_f);
      break;
    case Formula::Kind::Bin:
      collect_sub(f.left(), out, seen_t, seen_f);
      collect_sub(f.right(), out, seen_t, seen_f);
      break;
    case Formula::Kind::Quant:
      collect_sub(f.body(), out, seen_t, seen_f);
      break;
  }
  seen_f.insert(f);
  out.formulas.push_back(f);
}

inline void collect_sub(const Term& t, SubExprs& out, std::set<Term>& seen_t,
                        std::set<Formula>& seen_f) {
  if (seen_t.count(t)) return;
  switch (t.kind()) {
    case Term::Kind::Var:
      break;
    case Term::Kind::App:
      for (const auto& a : t.args()) collect_sub(a, out, seen_t, seen_f);
      break;
    case Term::Kind::ClassAbs:
      collect_sub(t.body(), out, seen_t, seen_f);
      break;
  }
  seen_t.insert(t);
  out.terms.push_back(t);
}

}  // namespace detail

/// All subexpressions of the formulas in phi (each expression counts as a
/// subexpression of itself); children precede parents.
inline SubExprs subclose(const std::vector<Formula>& phi) {
  SubExprs out;
  std::set<Term> seen_t;
  std::set<Formula> seen_f;
  for (const auto& f : phi) detail::collect_sub(f, out, seen_t, seen_f);
  return out;
}

/// Subformulas only (no terms).
inline std::vector<Formula> subformulas(const Formula& f) {
  return subclose({f}).formulas;
}

}  // namespace satstar::syntax

#endif  // SATSTAR_SYNTAX_HPP
