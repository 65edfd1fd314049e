#include "npcoh/parse.hpp"

#include <cctype>
#include <map>

namespace npcoh {

namespace {

enum class Tok { Nat, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t pos;
  std::string text;  // Nat and Name payload
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_.kind = Tok::End;
      cur_.text.clear();
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      cur_ = {Tok::Nat, i_, s_.substr(i_, j - i_)};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      cur_ = {Tok::Name, i_, s_.substr(i_, j - i_)};
      i_ = j;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(i_, std::string("unexpected character '") + c + "'");
    }
    cur_ = {k, i_, std::string(1, c)};
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, int>& slots, int nvars)
      : lex_(text), slots_(slots), nvars_(nvars) {}

  Polynomial run() {
    Polynomial p = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw ParseError(t.pos, "unexpected '" + t.text + "' after expression");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        p += term();
      } else if (k == Tok::Minus) {
        lex_.take();
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Minus:
      case Tok::Nat:
        return Polynomial::constant(nvars_, rational());
      case Tok::Name: {
        lex_.take();
        auto it = slots_.find(t.text);
        if (it == slots_.end())
          throw ParseError(t.pos, "unknown variable '" + t.text + "'");
        Monomial m(nvars_);
        unsigned e = 1;
        if (lex_.peek().kind == Tok::Caret) {
          lex_.take();
          e = exponent();
        }
        m.set_exp(it->second, e);
        return Polynomial::term(m, Rational(1));
      }
      case Tok::LParen: {
        lex_.take();
        Polynomial p = expr();
        const Token& r = lex_.peek();
        if (r.kind != Tok::RParen) throw ParseError(r.pos, "expected ')'");
        lex_.take();
        return p;
      }
      default:
        throw ParseError(t.pos, "expected a number, variable, or '('");
    }
  }

  Rational rational() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    const Token t = lex_.peek();
    if (t.kind != Tok::Nat) throw ParseError(t.pos, "expected a number");
    lex_.take();
    Integer num(t.text);
    Integer den(1);
    if (lex_.peek().kind == Tok::Slash) {
      lex_.take();
      const Token d = lex_.peek();
      if (d.kind != Tok::Nat) throw ParseError(d.pos, "expected a denominator");
      lex_.take();
      den = Integer(d.text);
      if (den == 0) throw ParseError(d.pos, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  unsigned exponent() {
    const Token t = lex_.peek();
    if (t.kind != Tok::Nat) throw ParseError(t.pos, "expected an exponent");
    lex_.take();
    Integer e(t.text);
    if (e <= 0) throw ParseError(t.pos, "exponent must be positive");
    if (e > 100000) throw ParseError(t.pos, "exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  Lexer lex_;
  const std::map<std::string, int>& slots_;
  int nvars_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars) {
  std::map<std::string, int> slots;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw InputError("empty variable name");
    if (!slots.emplace(vars[i], static_cast<int>(i)).second)
      throw InputError("duplicate variable name '" + vars[i] + "'");
  }
  Parser p(text, slots, static_cast<int>(vars.size()));
  return p.run();
}

std::vector<std::string> resolve_variable_names(
    int n, const std::vector<std::string>& explicit_names) {
  if (!explicit_names.empty()) {
    if (static_cast<int>(explicit_names.size()) != n)
      throw InputError("expected " + std::to_string(n) + " variable names, got " +
                       std::to_string(explicit_names.size()));
    return explicit_names;
  }
  return default_variable_names(n);
}

Polynomial parse_polynomial_with_aliases(const std::string& text, int n) {
  std::map<std::string, int> slots;
  auto names = default_variable_names(n);
  for (int i = 0; i < n; ++i) slots.emplace(names[i], i);
  if (n <= 4) {
    const char* alias[] = {"x", "y", "z", "t"};
    for (int i = 0; i < n; ++i) slots.emplace(alias[i], i);
  }
  Parser p(text, slots, n);
  return p.run();
}

}  // namespace npcoh
