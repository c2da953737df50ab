#include "rlmc/parser.hpp"

#include <cctype>
#include <climits>
#include <vector>

namespace rlmc {

namespace {

struct Token {
  enum Kind { Word, Sym, End } kind = End;
  std::string text;  // Word
  char sym = 0;      // Sym
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      Token t;
      t.kind = Token::Word;
      t.line = line;
      t.col = col;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text.push_back(src[i]);
        advance(src[i]);
        ++i;
      }
      out.push_back(std::move(t));
      continue;
    }
    static const std::string syms = "<>{}[](),:|!&=-";
    if (syms.find(c) != std::string::npos) {
      Token t;
      t.kind = Token::Sym;
      t.sym = c;
      t.line = line;
      t.col = col;
      out.push_back(std::move(t));
      advance(c);
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  FormulaPtr formula() {
    const Token& t = peek();
    if (t.kind == Token::Word) {
      get();
      if (t.text == "true") return f_true();
      if (t.text == "false") return f_false();
      return f_prop(t.text);
    }
    if (t.kind == Token::Sym) {
      switch (t.sym) {
        case '!':
          get();
          return f_not(formula());
        case '(': {
          get();
          FormulaPtr lhs = formula();
          const Token& op = peek();
          if (op.kind == Token::Sym && op.sym == ')') {
            get();
            return lhs;  // redundant grouping
          }
          if (op.kind == Token::Sym && (op.sym == '&' || op.sym == '|')) {
            get();
            FormulaPtr rhs = formula();
            expect_sym(')', "to close the binary formula");
            return op.sym == '&' ? f_and(std::move(lhs), std::move(rhs))
                                 : f_or(std::move(lhs), std::move(rhs));
          }
          fail("expected '&', '|' or ')'", op);
        }
        case '<':
          return modality();
        default:
          break;
      }
    }
    fail("expected a formula", t);
  }

  std::map<std::string, ResourceVector> vectors(const char* what) {
    std::map<std::string, ResourceVector> out;
    expect_sym('[', what);
    if (peek().kind == Token::Sym && peek().sym == ']') {
      get();
      return out;
    }
    for (;;) {
      const Token& name = peek();
      if (name.kind != Token::Word) fail("expected an agent name", name);
      get();
      expect_sym('=', what);
      expect_sym('(', what);
      ResourceVector v;
      for (;;) {
        v.push_back(integer(what));
        const Token& sep = peek();
        if (sep.kind == Token::Sym && sep.sym == ',') {
          get();
          continue;
        }
        break;
      }
      expect_sym(')', what);
      if (!out.emplace(name.text, std::move(v)).second)
        fail("duplicate agent " + name.text, name);
      const Token& sep = peek();
      if (sep.kind == Token::Sym && sep.sym == ',') {
        get();
        continue;
      }
      break;
    }
    expect_sym(']', what);
    return out;
  }

  void expect_end() {
    const Token& t = peek();
    if (t.kind != Token::End) fail("unexpected trailing input", t);
  }

 private:
  FormulaPtr modality() {
    expect_sym('<', "to open a modality");
    std::vector<std::string> coalition = coalition_names();
    const Token& t = peek();
    if (t.kind == Token::Sym && t.sym == ':') {
      get();
      auto bound = vectors("in the bound");
      expect_sym('>', "to close the modality");
      return body_rb(std::move(coalition), std::move(bound));
    }
    if (t.kind == Token::Sym && t.sym == '|') {
      get();
      std::vector<std::string> opponents = coalition_names();
      const Token& mode = peek();
      if (mode.kind == Token::Word && mode.text == "down") {
        get();
        expect_sym('>', "to close the modality");
        return body_ral(std::move(coalition), std::move(opponents), RalMode::Down, {});
      }
      if (mode.kind == Token::Word && mode.text == "eta") {
        get();
        expect_sym('=', "after eta");
        auto endw = vectors("in the endowment");
        expect_sym('>', "to close the modality");
        return body_ral(std::move(coalition), std::move(opponents), RalMode::Fresh,
                        std::move(endw));
      }
      fail("expected 'down' or 'eta=' after the opponent coalition", mode);
    }
    fail("expected ':' or '|' after the coalition", t);
  }

  FormulaPtr body_rb(std::vector<std::string> coalition,
                     std::map<std::string, ResourceVector> bound) {
    const Token& t = peek();
    if (t.kind == Token::Word && t.text == "X") {
      get();
      return f_next(std::move(coalition), std::move(bound), formula());
    }
    if (t.kind == Token::Sym && t.sym == '(') {
      get();
      FormulaPtr lhs = formula();
      bool until = temporal_op();
      FormulaPtr rhs = formula();
      expect_sym(')', "to close the temporal body");
      return until ? f_until(std::move(coalition), std::move(bound), std::move(lhs),
                             std::move(rhs))
                   : f_release(std::move(coalition), std::move(bound), std::move(lhs),
                               std::move(rhs));
    }
    fail("expected 'X' or a '( U )' / '( R )' body after the modality", t);
  }

  FormulaPtr body_ral(std::vector<std::string> coalition,
                      std::vector<std::string> opponents, RalMode mode,
                      std::map<std::string, ResourceVector> endowment) {
    const Token& t = peek();
    if (t.kind == Token::Word && t.text == "X") {
      get();
      return f_ral_next(std::move(coalition), std::move(opponents), mode,
                        std::move(endowment), formula());
    }
    if (t.kind == Token::Sym && t.sym == '(') {
      get();
      FormulaPtr lhs = formula();
      bool until = temporal_op();
      FormulaPtr rhs = formula();
      expect_sym(')', "to close the temporal body");
      return until ? f_ral_until(std::move(coalition), std::move(opponents), mode,
                                 std::move(endowment), std::move(lhs), std::move(rhs))
                   : f_ral_release(std::move(coalition), std::move(opponents), mode,
                                   std::move(endowment), std::move(lhs), std::move(rhs));
    }
    fail("expected 'X' or a '( U )' / '( R )' body after the modality", t);
  }

  // true for U, false for R
  bool temporal_op() {
    const Token& t = peek();
    if (t.kind == Token::Word && (t.text == "U" || t.text == "R")) {
      get();
      return t.text == "U";
    }
    fail("expected 'U' or 'R' in the temporal body", t);
  }

  std::vector<std::string> coalition_names() {
    expect_sym('{', "to open a coalition");
    std::vector<std::string> names;
    if (peek().kind == Token::Sym && peek().sym == '}') {
      get();
      return names;
    }
    for (;;) {
      const Token& t = peek();
      if (t.kind != Token::Word) fail("expected an agent name", t);
      get();
      names.push_back(t.text);
      const Token& sep = peek();
      if (sep.kind == Token::Sym && sep.sym == ',') {
        get();
        continue;
      }
      if (sep.kind == Token::Sym && sep.sym == '}') {
        get();
        return names;
      }
      fail("expected ',' or '}' in the coalition", sep);
    }
  }

  int integer(const char* what) {
    const Token& t = peek();
    if (t.kind == Token::Sym && t.sym == '-')
      fail(std::string("negative entries are not allowed ") + what, t);
    if (t.kind != Token::Word) fail(std::string("expected an integer ") + what, t);
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(std::string("expected an integer ") + what, t);
    get();
    long long v = 0;
    for (char c : t.text) {
      v = v * 10 + (c - '0');
      if (v > INT_MAX) fail("integer too large", t);
    }
    return static_cast<int>(v);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[pos_++]; }

  void expect_sym(char c, const std::string& why) {
    const Token& t = peek();
    if (t.kind != Token::Sym || t.sym != c)
      fail(std::string("expected '") + c + "' " + why, t);
    get();
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    std::string detail = msg;
    if (at.kind == Token::Word)
      detail += " (found '" + at.text + "')";
    else if (at.kind == Token::Sym)
      detail += std::string(" (found '") + at.sym + "')";
    else
      detail += " (found end of input)";
    throw ParseError(detail, at.line, at.col);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.formula();
  p.expect_end();
  return f;
}

std::map<std::string, ResourceVector> parse_endowment(const std::string& text) {
  Parser p(text);
  auto v = p.vectors("in the endowment");
  p.expect_end();
  return v;
}

}  // namespace rlmc
