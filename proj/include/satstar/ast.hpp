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

#ifndef SATSTAR_AST_HPP
#define SATSTAR_AST_HPP

#include <algorithm>
#include <cassert>
#include <memory>
#include <string>
#include <vector>

#include "satstar/signature.hpp"

namespace satstar::syntax {

struct Var {
  std::string name;
  std::string sort = kSortSet;

  bool operator==(const Var& o) const { return name == o.name && sort == o.sort; }
  bool operator!=(const Var& o) const { return !(*this == o); }
  bool operator<(const Var& o) const {
    return name != o.name ? name < o.name : sort < o.sort;
  }
};

namespace detail {

inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

inline std::size_t str_hash(const std::string& s) { return std::hash<std::string>{}(s); }

inline std::vector<Var> merge_free(std::vector<Var> a, const std::vector<Var>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline std::vector<Var> remove_var(std::vector<Var> a, const Var& v) {
  a.erase(std::remove(a.begin(), a.end(), v), a.end());
  return a;
}

inline int cmp3(int a, int b) { return a < b ? -1 : a > b ? 1 : 0; }

inline int cmp_str(const std::string& a, const std::string& b) {
  return a < b ? -1 : a > b ? 1 : 0;
}

inline int cmp_var(const Var& a, const Var& b) {
  int c = cmp_str(a.name, b.name);
  return c ? c : cmp_str(a.sort, b.sort);
}

struct TermNode;
struct FormulaNode;

}  // namespace detail

class Formula;

/// A first-order term: a variable, an operation applied to terms, or a
/// class term {x | phi} (class-sorted, with a set-sorted bound variable).
class Term {
 public:
  enum class Kind { Var, App, ClassAbs };

  static Term var(std::string name, std::string sort = kSortSet);
  static Term var(const syntax::Var& v) { return var(v.name, v.sort); }
  static Term app(std::string op, std::vector<Term> args, std::string result_sort = kSortSet);
  static Term class_abs(syntax::Var bound, Formula body);

  Kind kind() const;
  const syntax::Var& as_var() const;
  const std::string& op_name() const;
  const std::vector<Term>& args() const;
  const syntax::Var& bound_var() const;
  const Formula& body() const;

  const std::string& sort() const;
  std::size_t hash() const;
  const std::vector<syntax::Var>& free() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const { return compare(*this, o) < 0; }
  static int compare(const Term& a, const Term& b);

  const detail::TermNode* node() const { return node_.get(); }

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

enum class BinOp { And, Or, Implies, Iff };
enum class Quant { Exists, Forall };

class Formula {
 public:
  enum class Kind { Atom, Equal, Neg, Bin, Quant };

  static Formula atom(std::string pred, std::vector<Term> args);
  static Formula equal(Term l, Term r);
  static Formula neg(Formula f);
  static Formula bin(BinOp op, Formula l, Formula r);
  static Formula quant(Quant q, syntax::Var v, Formula body);

  static Formula conj(Formula l, Formula r) { return bin(BinOp::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return bin(BinOp::Or, std::move(l), std::move(r)); }
  static Formula implies(Formula l, Formula r) { return bin(BinOp::Implies, std::move(l), std::move(r)); }
  static Formula iff(Formula l, Formula r) { return bin(BinOp::Iff, std::move(l), std::move(r)); }
  static Formula exists(syntax::Var v, Formula body) { return quant(Quant::Exists, std::move(v), std::move(body)); }
  static Formula forall(syntax::Var v, Formula body) { return quant(Quant::Forall, std::move(v), std::move(body)); }

  Kind kind() const;
  const std::string& pred_name() const;
  const std::vector<Term>& args() const;
  const Term& lhs() const;
  const Term& rhs() const;
  const Formula& sub() const;    // Neg
  BinOp bin_op() const;
  const Formula& left() const;
  const Formula& right() const;
  Quant quant_kind() const;
  const syntax::Var& bound_var() const;
  const Formula& body() const;

  std::size_t hash() const;
  const std::vector<syntax::Var>& free() const;
  bool closed() const { return free().empty(); }
  /// Number of connectives and quantifiers.
  int grade() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
  bool operator<(const Formula& o) const { return compare(*this, o) < 0; }
  static int compare(const Formula& a, const Formula& b);

  const detail::FormulaNode* node() const { return node_.get(); }

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {

struct TermNode {
  Term::Kind kind;
  syntax::Var var;           // Var / ClassAbs bound variable
  std::string op;            // App
  std::vector<Term> args;    // App
  std::vector<Formula> fbody;  // ClassAbs body (one element)

  std::string sort;
  std::size_t hash = 0;
  std::vector<syntax::Var> free;
};

struct FormulaNode {
  Formula::Kind kind;
  std::string pred;              // Atom
  std::vector<Term> args;        // Atom / Equal (two entries)
  BinOp bop = BinOp::And;        // Bin
  Quant q = Quant::Exists;       // Quant
  syntax::Var var;               // Quant
  std::vector<Formula> subs;     // Neg (1), Bin (2), Quant (1: body)

  std::size_t hash = 0;
  std::vector<syntax::Var> free;
  int grade = 0;
};

}  // namespace detail

// ---- Term implementation ----

inline Term Term::var(std::string name, std::string sort) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = Kind::Var;
  n->var = {name, sort};
  n->sort = sort;
  n->hash = detail::mix(detail::mix(1, detail::str_hash(name)), detail::str_hash(n->sort));
  n->free = {n->var};
  return Term(std::move(n));
}

inline Term Term::app(std::string op, std::vector<Term> args, std::string result_sort) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = Kind::App;
  n->op = std::move(op);
  n->args = std::move(args);
  n->sort = std::move(result_sort);
  std::size_t h = detail::mix(2, detail::str_hash(n->op));
  for (const auto& a : n->args) {
    h = detail::mix(h, a.hash());
    n->free = detail::merge_free(std::move(n->free), a.free());
  }
  n->hash = h;
  return Term(std::move(n));
}

inline Term Term::class_abs(syntax::Var bound, Formula body) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = Kind::ClassAbs;
  n->var = std::move(bound);
  n->free = detail::remove_var(body.free(), n->var);
  n->hash = detail::mix(detail::mix(3, detail::str_hash(n->var.name)), body.hash());
  n->sort = kSortClass;
  n->fbody.push_back(std::move(body));
  return Term(std::move(n));
}

inline Term::Kind Term::kind() const { return node_->kind; }
inline const Var& Term::as_var() const { assert(node_->kind == Kind::Var); return node_->var; }
inline const std::string& Term::op_name() const { return node_->op; }
inline const std::vector<Term>& Term::args() const { return node_->args; }
inline const Var& Term::bound_var() const { assert(node_->kind == Kind::ClassAbs); return node_->var; }
inline const Formula& Term::body() const { assert(node_->kind == Kind::ClassAbs); return node_->fbody[0]; }
inline const std::string& Term::sort() const { return node_->sort; }
inline std::size_t Term::hash() const { return node_->hash; }
inline const std::vector<Var>& Term::free() const { return node_->free; }

// ---- Formula implementation ----

inline Formula Formula::atom(std::string pred, std::vector<Term> args) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Atom;
  n->pred = std::move(pred);
  n->args = std::move(args);
  std::size_t h = detail::mix(11, detail::str_hash(n->pred));
  for (const auto& a : n->args) {
    h = detail::mix(h, a.hash());
    n->free = detail::merge_free(std::move(n->free), a.free());
  }
  n->hash = h;
  n->grade = 0;
  return Formula(std::move(n));
}

inline Formula Formula::equal(Term l, Term r) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Equal;
  n->args = {std::move(l), std::move(r)};
  n->free = detail::merge_free(std::vector<Var>(n->args[0].free()), n->args[1].free());
  n->hash = detail::mix(detail::mix(12, n->args[0].hash()), n->args[1].hash());
  n->grade = 0;
  return Formula(std::move(n));
}

inline Formula Formula::neg(Formula f) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Neg;
  n->free = f.free();
  n->hash = detail::mix(13, f.hash());
  n->grade = f.grade() + 1;
  n->subs = {std::move(f)};
  return Formula(std::move(n));
}

inline Formula Formula::bin(BinOp op, Formula l, Formula r) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Bin;
  n->bop = op;
  n->free = detail::merge_free(std::vector<Var>(l.free()), r.free());
  n->hash = detail::mix(detail::mix(detail::mix(14, static_cast<std::size_t>(op)), l.hash()), r.hash());
  n->grade = l.grade() + r.grade() + 1;
  n->subs = {std::move(l), std::move(r)};
  return Formula(std::move(n));
}

inline Formula Formula::quant(Quant q, syntax::Var v, Formula body) {
  auto n = std::make_shared<detail::FormulaNode>();
  n->kind = Kind::Quant;
  n->q = q;
  n->var = std::move(v);
  n->free = detail::remove_var(body.free(), n->var);
  n->hash = detail::mix(detail::mix(detail::mix(15, static_cast<std::size_t>(q)),
                                    detail::str_hash(n->var.name)),
                        body.hash());
  n->grade = body.grade() + 1;
  n->subs = {std::move(body)};
  return Formula(std::move(n));
}

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::pred_name() const { return node_->pred; }
inline const std::vector<Term>& Formula::args() const { return node_->args; }
inline const Term& Formula::lhs() const { assert(node_->kind == Kind::Equal); return node_->args[0]; }
inline const Term& Formula::rhs() const { assert(node_->kind == Kind::Equal); return node_->args[1]; }
inline const Formula& Formula::sub() const { assert(node_->kind == Kind::Neg); return node_->subs[0]; }
inline BinOp Formula::bin_op() const { return node_->bop; }
inline const Formula& Formula::left() const { assert(node_->kind == Kind::Bin); return node_->subs[0]; }
inline const Formula& Formula::right() const { assert(node_->kind == Kind::Bin); return node_->subs[1]; }
inline Quant Formula::quant_kind() const { return node_->q; }
inline const Var& Formula::bound_var() const { assert(node_->kind == Kind::Quant); return node_->var; }
inline const Formula& Formula::body() const { assert(node_->kind == Kind::Quant); return node_->subs[0]; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline const std::vector<Var>& Formula::free() const { return node_->free; }
inline int Formula::grade() const { return node_->grade; }

// ---- structural equality and deterministic order ----

inline bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var:
      return node_->var == o.node_->var;
    case Kind::App: {
      if (node_->op != o.node_->op || node_->args.size() != o.node_->args.size()) return false;
      for (std::size_t i = 0; i < node_->args.size(); ++i)
        if (!(node_->args[i] == o.node_->args[i])) return false;
      return true;
    }
    case Kind::ClassAbs:
      return node_->var == o.node_->var && node_->fbody[0] == o.node_->fbody[0];
  }
  return false;
}

inline bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Atom:
      if (node_->pred != o.node_->pred) return false;
      [[fallthrough]];
    case Kind::Equal: {
      if (node_->args.size() != o.node_->args.size()) return false;
      for (std::size_t i = 0; i < node_->args.size(); ++i)
        if (!(node_->args[i] == o.node_->args[i])) return false;
      return true;
    }
    case Kind::Neg:
      return node_->subs[0] == o.node_->subs[0];
    case Kind::Bin:
      return node_->bop == o.node_->bop && node_->subs[0] == o.node_->subs[0] &&
             node_->subs[1] == o.node_->subs[1];
    case Kind::Quant:
      return node_->q == o.node_->q && node_->var == o.node_->var &&
             node_->subs[0] == o.node_->subs[0];
  }
  return false;
}

inline int Term::compare(const Term& a, const Term& b) {
  if (a == b) return 0;
  if (int c = detail::cmp3(static_cast<int>(a.kind()), static_cast<int>(b.kind()))) return c;
  switch (a.kind()) {
    case Kind::Var:
      return detail::cmp_var(a.as_var(), b.as_var());
    case Kind::App: {
      if (int c = detail::cmp_str(a.op_name(), b.op_name())) return c;
      if (int c = detail::cmp3(static_cast<int>(a.args().size()), static_cast<int>(b.args().size()))) return c;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = compare(a.args()[i], b.args()[i])) return c;
      return 0;
    }
    case Kind::ClassAbs: {
      if (int c = detail::cmp_var(a.bound_var(), b.bound_var())) return c;
      return Formula::compare(a.body(), b.body());
    }
  }
  return 0;
}

inline int Formula::compare(const Formula& a, const Formula& b) {
  if (a == b) return 0;
  if (int c = detail::cmp3(static_cast<int>(a.kind()), static_cast<int>(b.kind()))) return c;
  switch (a.kind()) {
    case Kind::Atom:
      if (int c = detail::cmp_str(a.pred_name(), b.pred_name())) return c;
      [[fallthrough]];
    case Kind::Equal: {
      if (int c = detail::cmp3(static_cast<int>(a.args().size()), static_cast<int>(b.args().size()))) return c;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = Term::compare(a.args()[i], b.args()[i])) return c;
      return 0;
    }
    case Kind::Neg:
      return compare(a.sub(), b.sub());
    case Kind::Bin: {
      if (int c = detail::cmp3(static_cast<int>(a.bin_op()), static_cast<int>(b.bin_op()))) return c;
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
    }
    case Kind::Quant: {
      if (int c = detail::cmp3(static_cast<int>(a.quant_kind()), static_cast<int>(b.quant_kind()))) return c;
      if (int c = detail::cmp_var(a.bound_var(), b.bound_var())) return c;
      return compare(a.body(), b.body());
    }
  }
  return 0;
}

}  // namespace satstar::syntax

#endif  // SATSTAR_AST_HPP
