#include "gaugeforge/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gaugeforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

enum class Tok { Number, ImagNumber, Ident, Plus, Minus, Star, Slash, Caret,
                 LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  double number = 0.0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    tok_.text.clear();
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': tok_.kind = Tok::Plus; ++pos_; return;
      case '-': tok_.kind = Tok::Minus; ++pos_; return;
      case '*': tok_.kind = Tok::Star; ++pos_; return;
      case '/': tok_.kind = Tok::Slash; ++pos_; return;
      case '^': tok_.kind = Tok::Caret; ++pos_; return;
      case '(': tok_.kind = Tok::LParen; ++pos_; return;
      case ')': tok_.kind = Tok::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lexNumber();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      tok_.kind = Tok::Ident;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    throw SyntaxError(pos_, {"number", "identifier", "operator", "'('"},
                      "unexpected character '" + std::string(1, c) +
                          "' at offset " + std::to_string(pos_));
  }

  void lexNumber() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
    }
    // scientific exponent; 'e'/'E' only counts when digits follow
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
      } else {
        pos_ = mark;
      }
    }
    tok_.number = std::strtod(src_.substr(start, pos_ - start).c_str(), nullptr);
    tok_.kind = Tok::Number;
    if (pos_ < src_.size() && src_[pos_] == 'i' &&
        !(pos_ + 1 < src_.size() &&
          std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
      tok_.kind = Tok::ImagNumber;
      ++pos_;
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parseAll() {
    ExprPtr e = parseExpr();
    if (lex_.peek().kind != Tok::End)
      throw SyntaxError(lex_.peek().offset, {"operator", "end of input"},
                        "trailing input at offset " +
                            std::to_string(lex_.peek().offset));
    return e;
  }

 private:
  static ExprPtr make(FieldExpr e) {
    return std::make_shared<const FieldExpr>(std::move(e));
  }

  static ExprPtr binary(FieldExpr::Kind k, ExprPtr l, ExprPtr r) {
    FieldExpr e;
    e.kind = k;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    return make(std::move(e));
  }

  ExprPtr parseExpr() {
    ExprPtr e = parseTerm();
    for (;;) {
      if (lex_.peek().kind == Tok::Plus) {
        lex_.take();
        e = binary(FieldExpr::Kind::Add, e, parseTerm());
      } else if (lex_.peek().kind == Tok::Minus) {
        lex_.take();
        e = binary(FieldExpr::Kind::Sub, e, parseTerm());
      } else {
        return e;
      }
    }
  }

  ExprPtr parseTerm() {
    ExprPtr e = parseFactor();
    for (;;) {
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        e = binary(FieldExpr::Kind::Mul, e, parseFactor());
      } else if (lex_.peek().kind == Tok::Slash) {
        lex_.take();
        e = binary(FieldExpr::Kind::Div, e, parseFactor());
      } else {
        return e;
      }
    }
  }

  ExprPtr parseFactor() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      FieldExpr e;
      e.kind = FieldExpr::Kind::Neg;
      e.lhs = parseFactor();
      return make(std::move(e));
    }
    return parsePower();
  }

  ExprPtr parsePower() {
    ExprPtr base = parseAtom();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.take();
    FieldExpr e;
    e.kind = FieldExpr::Kind::Pow;
    e.exponent = parseExponent();
    e.lhs = std::move(base);
    return make(std::move(e));
  }

  int parseExponent() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negate = true;
    }
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      int inner = parseExponent();
      expect(Tok::RParen, "')'");
      return negate ? -inner : inner;
    }
    Token t = lex_.peek();
    if (t.kind != Tok::Number || t.number != std::floor(t.number) ||
        std::abs(t.number) > 64.0)
      throw SyntaxError(t.offset, {"integer exponent"},
                        "exponent must be an integer literal with magnitude <= 64, "
                        "at offset " + std::to_string(t.offset));
    lex_.take();
    int n = static_cast<int>(t.number);
    return negate ? -n : n;
  }

  ExprPtr parseAtom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lex_.take();
        FieldExpr e;
        e.kind = FieldExpr::Kind::Literal;
        e.literal = Complex(t.number, 0.0);
        return make(std::move(e));
      }
      case Tok::ImagNumber: {
        lex_.take();
        FieldExpr e;
        e.kind = FieldExpr::Kind::Literal;
        e.literal = Complex(0.0, t.number);
        return make(std::move(e));
      }
      case Tok::LParen: {
        lex_.take();
        ExprPtr inner = parseExpr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return parseIdent();
      default:
        throw SyntaxError(t.offset, {"number", "coordinate", "function", "'('"},
                          "expected an operand at offset " +
                              std::to_string(t.offset));
    }
  }

  ExprPtr parseIdent() {
    Token t = lex_.take();
    const std::string& s = t.text;
    FieldExpr e;
    if (s == "i") {
      e.kind = FieldExpr::Kind::Literal;
      e.literal = Complex(0.0, 1.0);
      return make(std::move(e));
    }
    if (s == "pi") {
      e.kind = FieldExpr::Kind::Literal;
      e.literal = Complex(kPi, 0.0);
      return make(std::move(e));
    }
    int coord = -1;
    if (s == "t" || s == "x0") coord = 0;
    else if (s == "x" || s == "x1") coord = 1;
    else if (s == "y" || s == "x2") coord = 2;
    else if (s == "z" || s == "x3") coord = 3;
    if (coord >= 0) {
      e.kind = FieldExpr::Kind::Coordinate;
      e.coordinate = coord;
      return make(std::move(e));
    }
    FieldExpr::Func f;
    if (s == "sin") f = FieldExpr::Func::Sin;
    else if (s == "cos") f = FieldExpr::Func::Cos;
    else if (s == "exp") f = FieldExpr::Func::Exp;
    else if (s == "conj") f = FieldExpr::Func::Conj;
    else
      throw SyntaxError(t.offset,
                        {"t", "x", "y", "z", "x0..x3", "i", "pi",
                         "sin", "cos", "exp", "conj"},
                        "unknown identifier '" + s + "' at offset " +
                            std::to_string(t.offset));
    expect(Tok::LParen, "'('");
    e.kind = FieldExpr::Kind::Call;
    e.func = f;
    e.lhs = parseExpr();
    expect(Tok::RParen, "')'");
    return make(std::move(e));
  }

  void expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      throw SyntaxError(lex_.peek().offset, {what},
                        "expected " + what + " at offset " +
                            std::to_string(lex_.peek().offset));
    lex_.take();
  }

  Lexer lex_;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* func_name(FieldExpr::Func f) {
  switch (f) {
    case FieldExpr::Func::Sin: return "sin";
    case FieldExpr::Func::Cos: return "cos";
    case FieldExpr::Func::Exp: return "exp";
    case FieldExpr::Func::Conj: return "conj";
  }
  return "?";
}

const char* coord_name(int c) {
  static const char* names[4] = {"t", "x", "y", "z"};
  return names[c];
}

}  // namespace

ExprPtr parse(const std::string& src) { return Parser(src).parseAll(); }

std::string print(const FieldExpr& e) {
  switch (e.kind) {
    case FieldExpr::Kind::Literal: {
      // Parser-produced literals are non-negative and purely real or
      // purely imaginary; other values render as equivalent expressions.
      const double re = e.literal.real();
      const double im = e.literal.imag();
      if (im == 0.0) return re < 0.0 ? "(-" + fmt_double(-re) + ")" : fmt_double(re);
      if (re == 0.0)
        return im < 0.0 ? "(-" + fmt_double(-im) + "i)" : fmt_double(im) + "i";
      std::string res = re < 0.0 ? "(-" + fmt_double(-re) + ")" : fmt_double(re);
      std::string ims = im < 0.0 ? "(-" + fmt_double(-im) + "i)" : fmt_double(im) + "i";
      return "(" + res + " + " + ims + ")";
    }
    case FieldExpr::Kind::Coordinate:
      return coord_name(e.coordinate);
    case FieldExpr::Kind::Neg:
      return "(-" + print(*e.lhs) + ")";
    case FieldExpr::Kind::Add:
      return "(" + print(*e.lhs) + " + " + print(*e.rhs) + ")";
    case FieldExpr::Kind::Sub:
      return "(" + print(*e.lhs) + " - " + print(*e.rhs) + ")";
    case FieldExpr::Kind::Mul:
      return "(" + print(*e.lhs) + " * " + print(*e.rhs) + ")";
    case FieldExpr::Kind::Div:
      return "(" + print(*e.lhs) + " / " + print(*e.rhs) + ")";
    case FieldExpr::Kind::Pow:
      return "(" + print(*e.lhs) + "^" +
             (e.exponent < 0 ? "(-" + std::to_string(-e.exponent) + ")"
                             : std::to_string(e.exponent)) +
             ")";
    case FieldExpr::Kind::Call:
      return std::string(func_name(e.func)) + "(" + print(*e.lhs) + ")";
  }
  return "?";
}

bool FieldExpr::structurally_equal(const FieldExpr& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Literal:
      return literal == other.literal;
    case Kind::Coordinate:
      return coordinate == other.coordinate;
    case Kind::Neg:
      return lhs->structurally_equal(*other.lhs);
    case Kind::Pow:
      return exponent == other.exponent && lhs->structurally_equal(*other.lhs);
    case Kind::Call:
      return func == other.func && lhs->structurally_equal(*other.lhs);
    default:
      return lhs->structurally_equal(*other.lhs) &&
             rhs->structurally_equal(*other.rhs);
  }
}

Jet eval_expr(const FieldExpr& e, const SpacetimePoint& p, int order) {
  switch (e.kind) {
    case FieldExpr::Kind::Literal:
      return Jet::constant(e.literal, order);
    case FieldExpr::Kind::Coordinate:
      return Jet::coordinate(e.coordinate, p, order);
    case FieldExpr::Kind::Neg:
      return -eval_expr(*e.lhs, p, order);
    case FieldExpr::Kind::Add:
      return eval_expr(*e.lhs, p, order) + eval_expr(*e.rhs, p, order);
    case FieldExpr::Kind::Sub:
      return eval_expr(*e.lhs, p, order) - eval_expr(*e.rhs, p, order);
    case FieldExpr::Kind::Mul:
      return eval_expr(*e.lhs, p, order) * eval_expr(*e.rhs, p, order);
    case FieldExpr::Kind::Div:
      return eval_expr(*e.lhs, p, order) / eval_expr(*e.rhs, p, order);
    case FieldExpr::Kind::Pow:
      return pow_int(eval_expr(*e.lhs, p, order), e.exponent);
    case FieldExpr::Kind::Call: {
      Jet u = eval_expr(*e.lhs, p, order);
      switch (e.func) {
        case FieldExpr::Func::Sin: return sin(u);
        case FieldExpr::Func::Cos: return cos(u);
        case FieldExpr::Func::Exp: return exp(u);
        case FieldExpr::Func::Conj: return conj(u);
      }
      break;
    }
  }
  throw Error("corrupt expression node");
}

}  // namespace gaugeforge
