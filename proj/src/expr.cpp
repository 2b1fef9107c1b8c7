#include "swapalg/expr.hpp"

#include <cctype>

#include "swapalg/bracket.hpp"
#include "swapalg/cross_ratio.hpp"
#include "swapalg/determinant.hpp"
#include "swapalg/errors.hpp"

namespace swapalg {

namespace {

// ---- lexer ----

struct Token {
  enum class Type { Int, Id, Plus, Minus, Star, Slash, LParen, RParen, LBracket, RBracket,
                    Comma, End };
  Type type;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  const auto push = [&](Token::Type t, std::string s) {
    out.push_back({t, std::move(s), line, col});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Type::Int, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      push(Token::Type::Id, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Type::Plus; break;
      case '-': t = Token::Type::Minus; break;
      case '*': t = Token::Type::Star; break;
      case '/': t = Token::Type::Slash; break;
      case '(': t = Token::Type::LParen; break;
      case ')': t = Token::Type::RParen; break;
      case '[': t = Token::Type::LBracket; break;
      case ']': t = Token::Type::RBracket; break;
      case ',': t = Token::Type::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    push(t, std::string(1, c));
    ++col;
    ++i;
  }
  out.push_back({Token::Type::End, "", line, col});
  return out;
}

// ---- parser ----

class Parser {
 public:
  Parser(std::vector<Token> tokens, const PointSetPtr& ps)
      : toks_(std::move(tokens)), ps_(ps) {}

  ExprPtr run() {
    ExprPtr e = expr();
    expect(Token::Type::End, "end of input");
    return e;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    const size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Token::Type t) const { return peek().type == t; }

  Token expect(Token::Type t, const std::string& what) {
    if (!at(t)) {
      const Token& tok = peek();
      const std::string got = tok.type == Token::Type::End ? "end of input"
                                                           : "'" + tok.text + "'";
      throw ParseError("expected " + what + ", got " + got, tok.line, tok.col);
    }
    return take();
  }

  int point(const Token& tok) const {
    if (!ps_->contains(tok.text))
      throw UnknownPoint("unknown point '" + tok.text + "' (line " +
                         std::to_string(tok.line) + ", column " + std::to_string(tok.col) +
                         ")");
    return ps_->index_of(tok.text);
  }

  static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at(Token::Type::Plus) || at(Token::Type::Minus)) {
      const bool plus = take().type == Token::Type::Plus;
      ExprPtr rhs = term();
      Expr n;
      n.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
      n.a = std::move(e);
      n.b = std::move(rhs);
      e = node(std::move(n));
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (at(Token::Type::Star) || at(Token::Type::Slash)) {
      const bool mul = take().type == Token::Type::Star;
      ExprPtr rhs = factor();
      Expr n;
      n.kind = mul ? Expr::Kind::Mul : Expr::Kind::Div;
      n.a = std::move(e);
      n.b = std::move(rhs);
      e = node(std::move(n));
    }
    return e;
  }

  ExprPtr factor() {
    const Token& tok = peek();
    switch (tok.type) {
      case Token::Type::Int: {
        const Token num = take();
        Expr n;
        n.kind = Expr::Kind::Literal;
        // Two-token lookahead: INT '/' INT is a rational literal, while
        // INT '/' <anything else> leaves the slash to the term level.
        if (at(Token::Type::Slash) && peek(1).type == Token::Type::Int) {
          take();
          const Token den = take();
          if (den.text == "0") throw ParseError("zero denominator", den.line, den.col);
          n.lit = Rat(num.text + "/" + den.text, 10);
          n.lit.canonicalize();
        } else {
          n.lit = Rat(num.text, 10);
        }
        return node(std::move(n));
      }
      case Token::Type::Minus: {
        take();
        Expr n;
        n.kind = Expr::Kind::Neg;
        n.a = factor();
        return node(std::move(n));
      }
      case Token::Type::LParen: {
        take();
        ExprPtr e = expr();
        expect(Token::Type::RParen, "')'");
        return e;
      }
      case Token::Type::Id:
        return builtin();
      default:
        throw ParseError("expected a factor, got " +
                             (tok.type == Token::Type::End ? "end of input"
                                                           : "'" + tok.text + "'"),
                         tok.line, tok.col);
    }
  }

  ExprPtr builtin() {
    const Token name = take();
    if (name.text != "p" && name.text != "cr" && name.text != "det" && name.text != "br")
      throw ParseError("unknown function '" + name.text + "'", name.line, name.col);
    expect(Token::Type::LParen, "'(' after " + name.text);
    Expr n;
    if (name.text == "p") {
      n.kind = Expr::Kind::Pair;
      n.ids.push_back(point(expect(Token::Type::Id, "a point name")));
      expect(Token::Type::Comma, "','");
      n.ids.push_back(point(expect(Token::Type::Id, "a point name")));
    } else if (name.text == "cr") {
      n.kind = Expr::Kind::Cross;
      for (int i = 0; i < 4; ++i) {
        if (i) expect(Token::Type::Comma, "','");
        n.ids.push_back(point(expect(Token::Type::Id, "a point name")));
      }
      if (n.ids[0] == n.ids[3] || n.ids[1] == n.ids[2])
        throw IllegalCrossFraction(
            "cross fraction needs first != fourth and second != third");
    } else if (name.text == "det") {
      n.kind = Expr::Kind::Det;
      n.xs = id_list();
      expect(Token::Type::Comma, "','");
      n.ys = id_list();
      if (n.xs.size() != n.ys.size())
        throw BadSpec("determinant needs equally long point lists");
      if (n.xs.size() < 2 || n.xs.size() > 4)
        throw BadSpec("determinant size must be between 2 and 4");
    } else {
      n.kind = Expr::Kind::Bracket;
      n.a = expr();
      expect(Token::Type::Comma, "','");
      n.b = expr();
    }
    expect(Token::Type::RParen, "')'");
    return node(std::move(n));
  }

  std::vector<int> id_list() {
    expect(Token::Type::LBracket, "'['");
    std::vector<int> out;
    out.push_back(point(expect(Token::Type::Id, "a point name")));
    while (at(Token::Type::Comma)) {
      take();
      out.push_back(point(expect(Token::Type::Id, "a point name")));
    }
    expect(Token::Type::RBracket, "']'");
    return out;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  PointSetPtr ps_;
};

// ---- printer ----

// Precedence levels: additive 1, multiplicative 2, unary minus 3, atoms 4.
std::string print_rec(const ExprPtr& e, const PointSetPtr& ps, int context) {
  std::string s;
  switch (e->kind) {
    case Expr::Kind::Literal:
      s = rat_str(e->lit);
      if (sign_of(e->lit) < 0 && context > 1) s = "(" + s + ")";
      return s;
    case Expr::Kind::Pair:
      return "p(" + ps->name(e->ids[0]) + "," + ps->name(e->ids[1]) + ")";
    case Expr::Kind::Cross:
      return "cr(" + ps->name(e->ids[0]) + "," + ps->name(e->ids[1]) + "," +
             ps->name(e->ids[2]) + "," + ps->name(e->ids[3]) + ")";
    case Expr::Kind::Det: {
      s = "det([";
      for (size_t i = 0; i < e->xs.size(); ++i) {
        if (i) s += ",";
        s += ps->name(e->xs[i]);
      }
      s += "],[";
      for (size_t i = 0; i < e->ys.size(); ++i) {
        if (i) s += ",";
        s += ps->name(e->ys[i]);
      }
      return s + "])";
    }
    case Expr::Kind::Bracket:
      return "br(" + print_rec(e->a, ps, 0) + ", " + print_rec(e->b, ps, 0) + ")";
    case Expr::Kind::Neg:
      s = "-" + print_rec(e->a, ps, 3);
      if (context > 2) s = "(" + s + ")";
      return s;
    case Expr::Kind::Add:
      s = print_rec(e->a, ps, 1) + " + " + print_rec(e->b, ps, 2);
      if (context > 1) s = "(" + s + ")";
      return s;
    case Expr::Kind::Sub:
      s = print_rec(e->a, ps, 1) + " - " + print_rec(e->b, ps, 2);
      if (context > 1) s = "(" + s + ")";
      return s;
    case Expr::Kind::Mul:
      s = print_rec(e->a, ps, 2) + "*" + print_rec(e->b, ps, 3);
      if (context > 2) s = "(" + s + ")";
      return s;
    case Expr::Kind::Div:
      s = print_rec(e->a, ps, 2) + "/" + print_rec(e->b, ps, 3);
      if (context > 2) s = "(" + s + ")";
      return s;
  }
  return s;
}

}  // namespace

ExprPtr parse_expr(const std::string& text, const PointSetPtr& ps) {
  if (text.empty()) throw ParseError("empty expression", 1, 1);
  return Parser(lex(text), ps).run();
}

std::string print_expr(const ExprPtr& e, const PointSetPtr& ps) {
  return print_rec(e, ps, 0);
}

SwapFraction eval_expr(const ExprPtr& e, const PointSetPtr& ps) {
  switch (e->kind) {
    case Expr::Kind::Literal:
      return SwapFraction::from_poly(SwapPoly::constant(ps, e->lit));
    case Expr::Kind::Pair:
      return SwapFraction::from_poly(SwapPoly::pair_at(ps, e->ids[0], e->ids[1]));
    case Expr::Kind::Cross:
      return cross_fraction_at(ps, e->ids[0], e->ids[1], e->ids[2], e->ids[3]);
    case Expr::Kind::Det:
      return SwapFraction::from_poly(determinant(ps, make_det_spec_at(ps, e->xs, e->ys)));
    case Expr::Kind::Bracket:
      return bracket_fraction(eval_expr(e->a, ps), eval_expr(e->b, ps));
    case Expr::Kind::Neg:
      return -eval_expr(e->a, ps);
    case Expr::Kind::Add:
      return eval_expr(e->a, ps) + eval_expr(e->b, ps);
    case Expr::Kind::Sub:
      return eval_expr(e->a, ps) - eval_expr(e->b, ps);
    case Expr::Kind::Mul:
      return eval_expr(e->a, ps) * eval_expr(e->b, ps);
    case Expr::Kind::Div:
      return eval_expr(e->a, ps) / eval_expr(e->b, ps);
  }
  throw ParseError("corrupt expression tree", 0, 0);  // unreachable
}

}  // namespace swapalg
