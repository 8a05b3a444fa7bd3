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

#ifndef SATSTAR_SEXPR_HPP
#define SATSTAR_SEXPR_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satstar::sexpr {

/// Thrown on malformed input; `pos` is a byte offset into the source text.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::string msg, std::size_t p)
      : std::runtime_error(std::move(msg) + " at offset " + std::to_string(p)), pos(p) {}
};

/// A node is an atom, a paren list (...) or a brace list {...}.
/// Brace lists carry hereditarily-finite-set literals; everything else
/// in the surface syntax uses paren lists.
class Node {
 public:
  enum class Kind { Atom, List, Braces };

  static Node atom(std::string s) { return Node(Kind::Atom, std::move(s), {}); }
  static Node list(std::vector<Node> xs) { return Node(Kind::List, {}, std::move(xs)); }
  static Node braces(std::vector<Node> xs) { return Node(Kind::Braces, {}, std::move(xs)); }

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_list() const { return kind_ == Kind::List; }
  bool is_braces() const { return kind_ == Kind::Braces; }

  const std::string& text() const { return text_; }
  const std::vector<Node>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Node& operator[](std::size_t i) const { return items_[i]; }

  std::size_t pos = 0;  // byte offset of the opening token

  std::string to_string() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  Node(Kind k, std::string t, std::vector<Node> xs)
      : kind_(k), text_(std::move(t)), items_(std::move(xs)) {}

  void write(std::string& out) const {
    switch (kind_) {
      case Kind::Atom:
        out += text_;
        break;
      case Kind::List:
      case Kind::Braces: {
        out += kind_ == Kind::List ? '(' : '{';
        for (std::size_t i = 0; i < items_.size(); ++i) {
          if (i) out += ' ';
          items_[i].write(out);
        }
        out += kind_ == Kind::List ? ')' : '}';
        break;
      }
    }
  }

  Kind kind_;
  std::string text_;
  std::vector<Node> items_;
};

namespace detail {

inline bool is_delim(char c) {
  return c == '(' || c == ')' || c == '{' || c == '}' || c == ';' ||
         c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  void skip_ws() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == ';') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return i_ >= src_.size();
  }

  Node next() {
    skip_ws();
    if (i_ >= src_.size()) throw ParseError("unexpected end of input", i_);
    std::size_t start = i_;
    char c = src_[i_];
    if (c == '(' || c == '{') {
      char close = c == '(' ? ')' : '}';
      ++i_;
      std::vector<Node> items;
      for (;;) {
        skip_ws();
        if (i_ >= src_.size()) throw ParseError("missing closing bracket", start);
        if (src_[i_] == close) {
          ++i_;
          Node n = c == '(' ? Node::list(std::move(items)) : Node::braces(std::move(items));
          n.pos = start;
          return n;
        }
        items.push_back(next());
      }
    }
    if (c == ')' || c == '}') throw ParseError("unexpected closing bracket", i_);
    std::size_t j = i_;
    while (j < src_.size() && !is_delim(src_[j])) ++j;
    Node n = Node::atom(std::string(src_.substr(i_, j - i_)));
    n.pos = i_;
    i_ = j;
    return n;
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parse exactly one node; trailing garbage is an error.
inline Node parse_one(std::string_view src) {
  detail::Reader r(src);
  Node n = r.next();
  if (!r.at_end()) throw ParseError("trailing input after expression", src.size());
  return n;
}

/// Parse a whole file: a sequence of nodes.
inline std::vector<Node> parse_many(std::string_view src) {
  detail::Reader r(src);
  std::vector<Node> out;
  while (!r.at_end()) out.push_back(r.next());
  return out;
}

}  // namespace satstar::sexpr

#endif  // SATSTAR_SEXPR_HPP
