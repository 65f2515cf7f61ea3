#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "plausible/error.hpp"
#include "plausible/formula.hpp"

namespace plausible {

namespace {

enum class Tok {
  Atom,
  True,
  False,
  Not,
  Box,
  Diamond,
  Nabla,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok type;
  std::size_t pos;
  AtomIndex atom = 0;
  std::string text;
};

std::string describe(const Token& t) {
  return t.type == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

class Lexer {
 public:
  Lexer(std::string_view text, bool schema_mode) : text_(text), schema_mode_(schema_mode) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, pos_, 0, ""});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool lookahead(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  Token symbol(Tok type, std::string_view s) {
    Token t{type, pos_, 0, std::string(s)};
    pos_ += s.size();
    return t;
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (lookahead("<->")) return symbol(Tok::Iff, "<->");
    if (lookahead("->")) return symbol(Tok::Implies, "->");
    if (lookahead("<>")) return symbol(Tok::Diamond, "<>");
    if (lookahead("[]")) return symbol(Tok::Box, "[]");
    switch (c) {
      case '~': return symbol(Tok::Not, "~");
      case '&': return symbol(Tok::And, "&");
      case '|': return symbol(Tok::Or, "|");
      case '(': return symbol(Tok::LParen, "(");
      case ')': return symbol(Tok::RParen, ")");
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      return word_token(std::move(word), start);
    }
    throw ParseError(ParseError::Kind::UnknownToken, start,
                     "unknown token '" + std::string(1, c) + "'");
  }

  Token word_token(std::string word, std::size_t start) {
    if (word == "true") return {Tok::True, start, 0, word};
    if (word == "false") return {Tok::False, start, 0, word};
    if (word == "nabla") return {Tok::Nabla, start, 0, word};
    if (schema_mode_) {
      if (word.size() == 1 && std::isupper(static_cast<unsigned char>(word[0]))) {
        return {Tok::Atom, start, static_cast<AtomIndex>(word[0] - 'A'), word};
      }
    } else if (word.size() >= 2 && word[0] == 'p') {
      const char* first = word.data() + 1;
      const char* last = word.data() + word.size();
      AtomIndex index = 0;
      auto [ptr, ec] = std::from_chars(first, last, index);
      if (ec == std::errc() && ptr == last) return {Tok::Atom, start, index, word};
      if (ec == std::errc::result_out_of_range) {
        throw ParseError(ParseError::Kind::UnknownToken, start, "atom index out of range '" + word + "'");
      }
    }
    throw ParseError(ParseError::Kind::UnknownToken, start, "unknown token '" + word + "'");
  }

  std::string_view text_;
  bool schema_mode_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().type != Tok::End) {
      throw ParseError(ParseError::Kind::Syntax, peek().pos, "unexpected " + describe(peek()));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (peek().type == Tok::Iff) {
      advance();
      return Iff(lhs, parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (peek().type == Tok::Implies) {
      advance();
      return Implies(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().type == Tok::Or) {
      advance();
      f = Or(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().type == Tok::And) {
      advance();
      f = And(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (peek().type) {
      case Tok::Not: advance(); return Not(parse_unary());
      case Tok::Box: advance(); return Box(parse_unary());
      case Tok::Diamond: advance(); return Diamond(parse_unary());
      case Tok::Nabla: advance(); return Nabla(parse_unary());
      default: return parse_primary();
    }
  }

  Formula parse_primary() {
    const Token& t = advance();
    switch (t.type) {
      case Tok::Atom: return Atom(t.atom);
      case Tok::True: return Top();
      case Tok::False: return Bottom();
      case Tok::LParen: {
        Formula inner = parse_iff();
        if (peek().type != Tok::RParen) {
          throw ParseError(ParseError::Kind::Syntax, peek().pos,
                           "expected ')' but found " + describe(peek()));
        }
        advance();
        return inner;
      }
      default:
        throw ParseError(ParseError::Kind::Syntax, t.pos, "expected a formula but found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

// Binding strength used by the renderer; larger binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::Iff: return 0;
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    default: return 4;
  }
}

std::string_view symbol_of(Kind k) {
  switch (k) {
    case Kind::Not: return "~";
    case Kind::Box: return "[]";
    case Kind::Diamond: return "<>";
    case Kind::Nabla: return "nabla";
    case Kind::And: return " & ";
    case Kind::Or: return " | ";
    case Kind::Implies: return " -> ";
    case Kind::Iff: return " <-> ";
    default: return "";
  }
}

bool right_associative(Kind k) { return k == Kind::Implies || k == Kind::Iff; }

using AtomNamer = std::function<std::string(AtomIndex)>;

void render_into(const Formula& f, const AtomNamer& name, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom: out += name(f.atom_index()); return;
    case Kind::Top: out += "true"; return;
    case Kind::Bottom: out += "false"; return;
    default: break;
  }
  if (f.is_unary()) {
    out += symbol_of(f.kind());
    const Formula& operand = f.lhs();
    if (operand.is_binary()) {
      out += '(';
      render_into(operand, name, out);
      out += ')';
      return;
    }
    // A word-like operator needs a separator before a word-like operand.
    const bool word_operand = operand.kind() == Kind::Atom || operand.kind() == Kind::Top ||
                              operand.kind() == Kind::Bottom || operand.kind() == Kind::Nabla;
    if (f.kind() == Kind::Nabla && word_operand) out += ' ';
    render_into(operand, name, out);
    return;
  }
  const int prec = precedence(f.kind());
  const bool right = right_associative(f.kind());
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  const bool paren_lhs = right ? lp <= prec : lp < prec;
  const bool paren_rhs = right ? rp < prec : rp <= prec;
  if (paren_lhs) out += '(';
  render_into(f.lhs(), name, out);
  if (paren_lhs) out += ')';
  out += symbol_of(f.kind());
  if (paren_rhs) out += '(';
  render_into(f.rhs(), name, out);
  if (paren_rhs) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text, false).run()).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, [](AtomIndex i) { return "p" + std::to_string(i); }, out);
  return out;
}

Schema parse_schema(std::string_view text) { return Schema{Parser(Lexer(text, true).run()).run()}; }

std::string render_schema(const Schema& s) {
  std::string out;
  render_into(
      s.pattern,
      [](AtomIndex i) {
        if (i < 26) return std::string(1, static_cast<char>('A' + i));
        return "M" + std::to_string(i);
      },
      out);
  return out;
}

}  // namespace plausible
