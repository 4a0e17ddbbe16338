#include "lukq/formula.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace lukq {

// ---------------------------------------------------------------------------
// AST

Formula::Formula() : Formula(constant(false)) {}

Formula Formula::atom(std::string name, SourceLocation loc) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Atom, std::move(name), {}, loc}));
}

Formula Formula::constant(bool value, SourceLocation loc) {
  return Formula(std::make_shared<const Node>(
      Node{value ? Connective::ConstTrue : Connective::ConstFalse, {}, {}, loc}));
}

Formula Formula::negation(Formula child, SourceLocation loc) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Neg, {}, {std::move(child)}, loc}));
}

Formula Formula::binary(Connective op, Formula left, Formula right,
                        SourceLocation loc) {
  switch (op) {
    case Connective::LukConj:
    case Connective::LukDisj:
    case Connective::MinConj:
    case Connective::MaxDisj:
    case Connective::Xor:
      break;
    default:
      throw std::invalid_argument("Formula::binary: not a binary connective");
  }
  return Formula(std::make_shared<const Node>(
      Node{op, {}, {std::move(left), std::move(right)}, loc}));
}

const Formula& Formula::left() const {
  if (node_->children.empty()) throw std::logic_error("formula node has no operand");
  return node_->children.front();
}

const Formula& Formula::right() const {
  if (node_->children.size() < 2) {
    throw std::logic_error("formula node has no right operand");
  }
  return node_->children[1];
}

bool Formula::is_binary() const { return node_->children.size() == 2; }

bool Formula::equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.op != b.op || a.name != b.name) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equal(*a.children[i].node_, *b.children[i].node_)) return false;
  }
  return true;
}

bool operator==(const Formula& a, const Formula& b) {
  return Formula::equal(*a.node_, *b.node_);
}

std::string_view connective_symbol(Connective op) {
  switch (op) {
    case Connective::Atom: return "";
    case Connective::ConstFalse: return "F";
    case Connective::ConstTrue: return "V";
    case Connective::Neg: return "~";
    case Connective::LukConj: return "&";
    case Connective::LukDisj: return "|";
    case Connective::MinConj: return "/\\";
    case Connective::MaxDisj: return "\\/";
    case Connective::Xor: return "^";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Errors

namespace {

std::string where(std::size_t line, std::size_t column) {
  return std::to_string(line) + ":" + std::to_string(column);
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::string token, const std::string& message)
    : ValidationError("syntax error at " + where(line, column) + " near '" +
                      token + "': " + message),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

UnboundAtom::UnboundAtom(std::string name)
    : ValidationError("unbound atom '" + name + "'"), name_(std::move(name)) {}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok { Ident, False, True, Not, Conj, Disj, Min, Max, Xor, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourceLocation loc{line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "end of input", loc});
        return out;
      }
      char c = text_[pos_];
      if (ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
        std::string word(text_.substr(start, pos_ - start));
        Tok kind = word == "F" ? Tok::False : word == "V" ? Tok::True : Tok::Ident;
        out.push_back({kind, std::move(word), loc});
        continue;
      }
      switch (c) {
        case '~': out.push_back(single(Tok::Not, loc)); continue;
        case '&': out.push_back(single(Tok::Conj, loc)); continue;
        case '|': out.push_back(single(Tok::Disj, loc)); continue;
        case '^': out.push_back(single(Tok::Xor, loc)); continue;
        case '(': out.push_back(single(Tok::LParen, loc)); continue;
        case ')': out.push_back(single(Tok::RParen, loc)); continue;
        case '/':
          if (peek(1) == '\\') { out.push_back(pair(Tok::Min, loc)); continue; }
          break;
        case '\\':
          if (peek(1) == '/') { out.push_back(pair(Tok::Max, loc)); continue; }
          break;
        default:
          break;
      }
      throw SyntaxError(loc.line, loc.column, current_char(),
                        "unexpected character");
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  // Columns count code points, so UTF-8 continuation bytes do not advance.
  void advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      advance();
    }
  }

  std::string current_char() const {
    std::size_t len = 1;
    while (pos_ + len < text_.size() &&
           (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80) {
      ++len;
    }
    return std::string(text_.substr(pos_, len));
  }

  Token single(Tok kind, SourceLocation loc) {
    std::string t(1, text_[pos_]);
    advance();
    return {kind, std::move(t), loc};
  }

  Token pair(Tok kind, SourceLocation loc) {
    std::string t(text_.substr(pos_, 2));
    advance();
    advance();
    return {kind, std::move(t), loc};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::optional<Connective> conj_level(Tok t) {
  if (t == Tok::Conj) return Connective::LukConj;
  if (t == Tok::Min) return Connective::MinConj;
  return std::nullopt;
}

std::optional<Connective> disj_level(Tok t) {
  if (t == Tok::Disj) return Connective::LukDisj;
  if (t == Tok::Max) return Connective::MaxDisj;
  if (t == Tok::Xor) return Connective::Xor;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = expr();
    if (cur().kind != Tok::End) {
      fail(cur(), cur().kind == Tok::RParen ? "unbalanced ')'"
                                            : "expected an operator");
    }
    return f;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw SyntaxError(t.loc.line, t.loc.column, t.text, message);
  }

  Formula expr() {
    Formula lhs = conj();
    while (auto op = disj_level(cur().kind)) {
      const Token& op_tok = cur();
      ++pos_;
      Formula rhs = operand_after(op_tok, [this] { return conj(); });
      lhs = Formula::binary(*op, std::move(lhs), std::move(rhs), op_tok.loc);
    }
    return lhs;
  }

  Formula conj() {
    Formula lhs = unary();
    while (auto op = conj_level(cur().kind)) {
      const Token& op_tok = cur();
      ++pos_;
      Formula rhs = operand_after(op_tok, [this] { return unary(); });
      lhs = Formula::binary(*op, std::move(lhs), std::move(rhs), op_tok.loc);
    }
    return lhs;
  }

  // A binary operator at the very end of the input is reported at the
  // operator itself.
  template <typename Next>
  Formula operand_after(const Token& op_tok, Next next) {
    if (cur().kind == Tok::End) fail(op_tok, "missing right operand");
    return next();
  }

  Formula unary() {
    if (cur().kind == Tok::Not) {
      const Token& t = cur();
      ++pos_;
      if (cur().kind == Tok::End) fail(t, "missing operand");
      return Formula::negation(unary(), t.loc);
    }
    return primary();
  }

  Formula primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Ident:
        ++pos_;
        return Formula::atom(t.text, t.loc);
      case Tok::False:
      case Tok::True:
        ++pos_;
        return Formula::constant(t.kind == Tok::True, t.loc);
      case Tok::LParen: {
        ++pos_;
        if (cur().kind == Tok::End) fail(t, "unclosed '('");
        Formula inner = expr();
        if (cur().kind != Tok::RParen) fail(cur(), "expected ')'");
        ++pos_;
        return inner;
      }
      case Tok::End:
        fail(t, "empty formula");
      default:
        fail(t, "expected an operand");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer: larger binds tighter.
int precedence(Connective op) {
  switch (op) {
    case Connective::LukDisj:
    case Connective::MaxDisj:
    case Connective::Xor:
      return 1;
    case Connective::LukConj:
    case Connective::MinConj:
      return 2;
    default:
      return 3;
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::ConstFalse:
    case Connective::ConstTrue:
      out += connective_symbol(f.op());
      return;
    case Connective::Neg: {
      out += '~';
      bool wrap = f.left().is_binary();
      if (wrap) out += '(';
      print(f.left(), out);
      if (wrap) out += ')';
      return;
    }
    default:
      break;
  }
  int p = precedence(f.op());
  // Left-associative: a same-level left operand needs no parentheses, a
  // same-level right operand always does.
  bool wrap_left = precedence(f.left().op()) < p;
  bool wrap_right = precedence(f.right().op()) <= p;
  if (wrap_left) out += '(';
  print(f.left(), out);
  if (wrap_left) out += ')';
  out += ' ';
  out += connective_symbol(f.op());
  out += ' ';
  if (wrap_right) out += '(';
  print(f.right(), out);
  if (wrap_right) out += ')';
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Connective::Atom) {
    out.insert(f.name());
    return;
  }
  if (f.op() == Connective::ConstFalse || f.op() == Connective::ConstTrue) return;
  collect_atoms(f.left(), out);
  if (f.is_binary()) collect_atoms(f.right(), out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string format(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

TruthValue evaluate(const Formula& f, const Assignment& a) {
  switch (f.op()) {
    case Connective::Atom: {
      auto it = a.find(f.name());
      if (it == a.end()) throw UnboundAtom(f.name());
      return it->second;
    }
    case Connective::ConstFalse:
      return TruthValue::zero();
    case Connective::ConstTrue:
      return TruthValue::one();
    case Connective::Neg:
      return luk_neg(evaluate(f.left(), a));
    default:
      break;
  }
  TruthValue l = evaluate(f.left(), a);
  TruthValue r = evaluate(f.right(), a);
  switch (f.op()) {
    case Connective::LukConj: return luk_conj(l, r);
    case Connective::LukDisj: return luk_disj(l, r);
    case Connective::MinConj: return min_conj(l, r);
    case Connective::MaxDisj: return max_disj(l, r);
    case Connective::Xor:
      try {
        return xor_crisp(l, r);
      } catch (const NonCrispOperand& e) {
        if (!f.location().known()) throw;
        throw NonCrispOperand(std::string(e.what()) + " at " +
                              where(f.location().line, f.location().column) +
                              " in '" + format(f) + "'");
      }
    default:
      throw std::logic_error("evaluate: unhandled connective");
  }
}

}  // namespace lukq
