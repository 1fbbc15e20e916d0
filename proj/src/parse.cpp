#include <cctype>
#include <string>
#include <vector>

#include "cml/error.hpp"
#include "cml/formula.hpp"

namespace cml {

namespace {

enum class Tok { Atom, Not, Box, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const std::vector<std::string> kUnaryStarts = {"~", "[]", "B", "(", "atom"};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& what) -> void {
    throw ParseError("syntax error at byte " + std::to_string(at) + ": " + what, at,
                     kUnaryStarts);
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    std::size_t at = i;
    switch (c) {
      case '~': out.push_back({Tok::Not, "~", at}); ++i; continue;
      case 'B': out.push_back({Tok::Box, "B", at}); ++i; continue;
      case '&': out.push_back({Tok::And, "&", at}); ++i; continue;
      case '|': out.push_back({Tok::Or, "|", at}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", at}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", at}); ++i; continue;
      case '[':
        if (i + 1 < src.size() && src[i + 1] == ']') {
          out.push_back({Tok::Box, "[]", at});
          i += 2;
          continue;
        }
        throw ParseError("syntax error at byte " + std::to_string(at) + ": expected ']' after '['",
                         at + 1, {"]"});
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          out.push_back({Tok::Implies, "->", at});
          i += 2;
          continue;
        }
        fail(at, "stray '-'");
        continue;
      case '<':
        if (i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
          out.push_back({Tok::Iff, "<->", at});
          i += 3;
          continue;
        }
        fail(at, "stray '<'");
        continue;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < src.size() &&
             ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= '0' && src[j] <= '9') ||
              src[j] == '_'))
        ++j;
      out.push_back({Tok::Atom, std::string(src.substr(i, j - i)), at});
      i = j;
      continue;
    }
    fail(at, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Formula run() {
    Formula f = formula();
    if (peek().kind != Tok::End)
      fail({"&", "|", "->", "<->", ")", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    std::string want;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k) want += expected.size() > 2 ? ", " : " ";
      if (k + 1 == expected.size() && k) want += "or ";
      want += expected[k];
    }
    throw ParseError("syntax error at byte " + std::to_string(t.offset) + ": got " + got +
                         ", expected " + want,
                     t.offset, std::move(expected));
  }

  Formula formula() { return iff(); }

  Formula iff() {
    std::vector<Formula> parts;
    parts.push_back(impl());
    while (peek().kind == Tok::Iff) {
      next();
      parts.push_back(impl());
    }
    Formula f = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
      f = Formula::equivalence(*it, f);
    return f;
  }

  Formula impl() {
    Formula l = disj();
    if (peek().kind != Tok::Implies) return l;
    next();
    return Formula::implication(std::move(l), impl());
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disjunction(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not:
        next();
        return Formula::negation(unary());
      case Tok::Box:
        next();
        return Formula::box(unary());
      case Tok::Atom:
        return Formula::atom(next().text);
      case Tok::LParen: {
        next();
        Formula f = formula();
        if (peek().kind != Tok::RParen) fail({")"});
        next();
        return f;
      }
      default:
        fail(kUnaryStarts);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

}  // namespace cml
