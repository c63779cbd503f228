#include "eisenkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "eisenkit/errors.hpp"

namespace eisenkit {

namespace {

enum class Tok { Num, Var, Plus, Minus, Mul, Div, Pow, LParen, RParen, End };

struct Token {
  Tok kind;
  Integer num;
  char var = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& s, const std::string& vars) : s_(s), vars_(vars) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) bump();
    cur_ = Token{};
    cur_.line = line_;
    cur_.col = col_;
    if (i_ >= s_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = s_[i_];
    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) {
        digits += s_[i_];
        bump();
      }
      cur_.kind = Tok::Num;
      cur_.num = Integer(digits);
      return;
    }
    if (std::isalpha((unsigned char)c)) {
      if (vars_.find(c) == std::string::npos)
        throw ParseError(std::string("unexpected variable '") + c + "'", line_, col_);
      cur_.kind = Tok::Var;
      cur_.var = c;
      bump();
      return;
    }
    switch (c) {
      case '+': cur_.kind = Tok::Plus; break;
      case '-': cur_.kind = Tok::Minus; break;
      case '*': cur_.kind = Tok::Mul; break;
      case '/': cur_.kind = Tok::Div; break;
      case '^': cur_.kind = Tok::Pow; break;
      case '(': cur_.kind = Tok::LParen; break;
      case ')': cur_.kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
    bump();
  }
  void bump() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  const std::string& s_;
  std::string vars_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

// Recursive descent over BiPoly values; non-variable input "x" etc. already
// rejected by the lexer.
class Parser {
 public:
  Parser(const std::string& s, const std::string& vars) : lx_(s, vars) {}

  QBiPoly parse() {
    QBiPoly p = expression();
    const Token& t = lx_.peek();
    if (t.kind != Tok::End) throw ParseError("trailing input", t.line, t.col);
    return p;
  }

 private:
  QBiPoly expression() {
    bool neg = false;
    while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
      if (lx_.take().kind == Tok::Minus) neg = !neg;
    }
    QBiPoly acc = term();
    if (neg) acc = acc.scaled(Rational(-1));
    while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
      bool minus = lx_.take().kind == Tok::Minus;
      QBiPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  QBiPoly term() {
    QBiPoly acc = factor();
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::Mul) {
        lx_.take();
        acc = acc * factor();
      } else if (k == Tok::Div) {
        Token slash = lx_.take();
        Token t = lx_.peek();
        if (t.kind != Tok::Num)
          throw ParseError("'/' must be followed by an integer", slash.line, slash.col);
        lx_.take();
        if (t.num == 0) throw ParseError("division by zero", t.line, t.col);
        acc = acc.scaled(Rational(Integer(1), t.num));
      } else if (k == Tok::Var || k == Tok::LParen || k == Tok::Num) {
        // implicit multiplication: "2w", "z w", ")(", "2 3" is rejected below
        if (k == Tok::Num) {
          Token t = lx_.peek();
          throw ParseError("unexpected number (missing operator?)", t.line, t.col);
        }
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  QBiPoly factor() {
    QBiPoly base = atom();
    if (lx_.peek().kind == Tok::Pow) {
      Token caret = lx_.take();
      Token t = lx_.peek();
      if (t.kind != Tok::Num)
        throw ParseError("'^' must be followed by a nonnegative integer", caret.line, caret.col);
      lx_.take();
      if (!t.num.fits_slong_p() || t.num.get_si() > 64)
        throw ParseError("exponent too large", t.line, t.col);
      long e = t.num.get_si();
      QBiPoly acc;
      acc.add_term(0, 0, Rational(1));
      for (long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  QBiPoly atom() {
    Token t = lx_.take();
    QBiPoly p;
    switch (t.kind) {
      case Tok::Num:
        p.add_term(0, 0, Rational(t.num));
        return p;
      case Tok::Var:
        if (t.var == 'z' || t.var == 'x') {
          p.add_term(1, 0, Rational(1));
        } else {
          p.add_term(0, 1, Rational(1));
        }
        return p;
      case Tok::LParen: {
        QBiPoly inner = expression();
        Token close = lx_.take();
        if (close.kind != Tok::RParen)
          throw ParseError("expected ')'", close.line, close.col);
        return inner;
      }
      case Tok::Minus:
        return atom().scaled(Rational(-1));
      default:
        throw ParseError("expected a number, variable or '('", t.line, t.col);
    }
  }

  Lexer lx_;
};

std::string rational_coeff_str(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace

QBiPoly parse_bipoly(const std::string& text) {
  Parser p(text, "zw");
  return p.parse();
}

QPoly parse_unipoly(const std::string& text, char variable) {
  Parser p(text, std::string(1, variable));
  QBiPoly bp = p.parse();
  // Single-variable parse maps 'x'/'z' to z-slot, 'w' etc. to w-slot.
  std::vector<Rational> coeffs;
  for (auto& [key, v] : bp.monomials()) {
    long d = key.first + key.second;
    if (key.first != 0 && key.second != 0)
      throw InternalError("parse_unipoly: mixed exponents");
    if ((long)coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] = v;
  }
  return QPoly(std::move(coeffs));
}

std::string print_rational(const Rational& q) { return rational_coeff_str(q); }

std::string print_bipoly(const QBiPoly& p) {
  if (p.is_zero()) return "0";
  // graded-lex: total degree descending, then z-exponent descending
  std::vector<std::pair<std::pair<long, long>, Rational>> terms(p.monomials().begin(),
                                                                p.monomials().end());
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
    long ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [key, v] : terms) {
    Rational c = v;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool has_vars = key.first > 0 || key.second > 0;
    if (c != 1 || !has_vars) {
      os << rational_coeff_str(c);
      if (has_vars) os << "*";
    }
    if (key.first > 0) {
      os << "z";
      if (key.first > 1) os << "^" << key.first;
      if (key.second > 0) os << "*";
    }
    if (key.second > 0) {
      os << "w";
      if (key.second > 1) os << "^" << key.second;
    }
  }
  return os.str();
}

std::string print_unipoly(const QPoly& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (coeff_is_zero(c)) continue;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    if (c != 1 || i == 0) {
      os << rational_coeff_str(c);
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << variable;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace eisenkit
