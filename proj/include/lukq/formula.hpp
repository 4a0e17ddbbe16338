#pragma once

// Many-valued propositional formulas: AST, parser, canonical printer and
// exact evaluator.
//
// Grammar (tightest binding first, binary operators left-associative):
//
//   primary := IDENT | "F" | "V" | "(" expr ")"
//   unary   := "~" unary | primary
//   conj    := unary  (("&" | "/\") unary)*
//   expr    := conj   (("|" | "\/" | "^") conj)*
//
// with IDENT = [A-Za-z_][A-Za-z0-9_]* other than the constants F and V.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lukq/error.hpp"
#include "lukq/truth_value.hpp"

namespace lukq {

enum class Connective {
  Atom,
  ConstFalse,
  ConstTrue,
  Neg,
  LukConj,  // &
  LukDisj,  // |
  MinConj,  // /\  .
  MaxDisj,  // \/  .
  Xor,      // ^
};

/// 1-based position of a node's first character in the source text.
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
  bool known() const { return line != 0; }
};

class Formula {
 public:
  /// The constant F.
  Formula();
  static Formula atom(std::string name, SourceLocation loc = {});
  static Formula constant(bool value, SourceLocation loc = {});
  static Formula negation(Formula child, SourceLocation loc = {});
  static Formula binary(Connective op, Formula left, Formula right,
                        SourceLocation loc = {});

  Connective op() const { return node_->op; }
  /// Atom name; empty for every other node.
  const std::string& name() const { return node_->name; }
  /// Child of Neg, or left operand of a binary node.
  const Formula& left() const;
  const Formula& right() const;
  SourceLocation location() const { return node_->loc; }

  bool is_binary() const;

  /// Structural equality; source locations are ignored.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective op;
    std::string name;
    std::vector<Formula> children;
    SourceLocation loc;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

class SyntaxError : public ValidationError {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string token,
              const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class UnboundAtom : public ValidationError {
 public:
  explicit UnboundAtom(std::string name);
  const std::string& atom() const { return name_; }

 private:
  std::string name_;
};

using Assignment = std::map<std::string, TruthValue, std::less<>>;

Formula parse(std::string_view text);

/// Canonical text with the fewest parentheses that still parse back to
/// the same tree: "p & (q | r)", "~(p ^ q)", "F".
std::string format(const Formula& f);

std::set<std::string> atoms(const Formula& f);

/// Exact evaluation. Throws UnboundAtom for a missing atom and
/// NonCrispOperand (annotated with the XOR node's location) when an XOR
/// receives a non-crisp operand.
TruthValue evaluate(const Formula& f, const Assignment& a);

std::string_view connective_symbol(Connective op);

}  // namespace lukq
