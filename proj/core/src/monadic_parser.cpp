#include "deduce/monadic.hpp"
#include "lexer.hpp"

namespace deduce {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

namespace {

class MonadicParser {
 public:
  explicit MonadicParser(std::string_view text) : lex_(text) {}

  MonadicFormula parse_all() {
    auto f = parse_implies();
    const auto& next = lex_.peek();
    if (next.kind == TokenKind::RParen) {
      throw ParseError(ParseErrorKind::UnbalancedParen, next.span,
                       "closing parenthesis without a matching '('");
    }
    if (next.kind == TokenKind::Invalid) {
      throw ParseError(ParseErrorKind::UnknownToken, next.span,
                       "unrecognized token " + detail::describe(next));
    }
    if (next.kind != TokenKind::End) unexpected_after(next);
    return f;
  }

 private:
  [[noreturn]] void unexpected_after(const Token& tok) {
    if (tok.kind == TokenKind::Iff) {
      throw ParseError(ParseErrorKind::UnknownToken, tok.span,
                       "the biconditional is not available in monadic formulas");
    }
    throw ParseError(ParseErrorKind::TrailingInput, tok.span,
                     "unexpected " + detail::describe(tok) + " after a complete formula");
  }

  MonadicFormula parse_implies() {
    auto lhs = parse_or();
    if (lex_.peek().kind == TokenKind::Implies) {
      lex_.take();
      return MonadicFormula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  MonadicFormula parse_or() {
    auto acc = parse_and();
    while (lex_.peek().kind == TokenKind::Or) {
      lex_.take();
      acc = MonadicFormula::disjunction(std::move(acc), parse_and());
    }
    return acc;
  }

  MonadicFormula parse_and() {
    auto acc = parse_unary();
    while (lex_.peek().kind == TokenKind::And) {
      lex_.take();
      acc = MonadicFormula::conjunction(std::move(acc), parse_unary());
    }
    return acc;
  }

  MonadicFormula parse_unary() {
    const auto kind = lex_.peek().kind;
    if (kind == TokenKind::Not) {
      lex_.take();
      return MonadicFormula::negation(parse_unary());
    }
    if (kind == TokenKind::ForAll || kind == TokenKind::Exists) {
      lex_.take();
      auto var = expect(TokenKind::Variable, "a lowercase variable");
      expect(TokenKind::Dot, "'.'");
      auto body = parse_implies();
      return kind == TokenKind::ForAll ? MonadicFormula::for_all(var.text, std::move(body))
                                       : MonadicFormula::exists(var.text, std::move(body));
    }
    return parse_primary();
  }

  MonadicFormula parse_primary() {
    auto tok = lex_.take();
    switch (tok.kind) {
      case TokenKind::Name: {
        const auto open = expect(TokenKind::LParen, "'(' after a predicate");
        auto var = expect(TokenKind::Variable, "a lowercase variable");
        close_paren(open);
        return MonadicFormula::predicate(tok.text, var.text);
      }
      case TokenKind::LParen: {
        auto inner = parse_implies();
        close_paren(tok);
        return inner;
      }
      case TokenKind::End:
        throw ParseError(ParseErrorKind::UnexpectedEnd, tok.span,
                         "input ended where a formula was expected");
      case TokenKind::Invalid:
        throw ParseError(ParseErrorKind::UnknownToken, tok.span,
                         "unrecognized token " + detail::describe(tok));
      default:
        throw ParseError(ParseErrorKind::UnknownToken, tok.span,
                         "expected a formula but found " + detail::describe(tok));
    }
  }

  void close_paren(const Token& open) {
    const auto& close = lex_.peek();
    if (close.kind == TokenKind::RParen) {
      lex_.take();
      return;
    }
    if (close.kind == TokenKind::End) {
      throw ParseError(ParseErrorKind::UnbalancedParen, open.span,
                       "parenthesis opened here is never closed");
    }
    throw ParseError(ParseErrorKind::UnknownToken, close.span,
                     "expected ')' but found " + detail::describe(close));
  }

  Token expect(TokenKind kind, const std::string& what) {
    auto tok = lex_.take();
    if (tok.kind == kind) return tok;
    if (tok.kind == TokenKind::End) {
      throw ParseError(ParseErrorKind::UnexpectedEnd, tok.span, "input ended; expected " + what);
    }
    throw ParseError(ParseErrorKind::UnknownToken, tok.span,
                     "expected " + what + " but found " + detail::describe(tok));
  }

  Lexer lex_;
};

struct MonadicGlyphs {
  std::string_view not_, and_, or_, implies, forall, exists;
};

constexpr MonadicGlyphs monadic_glyphs(Style style) {
  switch (style) {
    case Style::Ascii: return {"!", "&", "|", "->", "forall ", "exists "};
    case Style::Unicode: return {"¬", "∧", "∨", "⇒", "∀", "∃"};
    case Style::Spanish: return {"¬", "y", "ó", "⇒", "∀", "∃"};
  }
  return {"!", "&", "|", "->", "forall ", "exists "};
}

int precedence(const MonadicFormula& f) {
  switch (f.kind()) {
    case MonadicKind::Implies: return 2;
    case MonadicKind::Or: return 3;
    case MonadicKind::And: return 4;
    case MonadicKind::Not: return 5;
    default: return 6;
  }
}

// `tail` is true when nothing follows at this nesting level, so a quantifier
// printed here may extend to the right without parentheses.
void emit(const MonadicFormula& f, bool tail, const MonadicGlyphs& g, std::string& out) {
  auto wrapped = [&](const MonadicFormula& sub, bool parens, bool sub_tail) {
    if (parens) out += '(';
    emit(sub, parens || sub_tail, g, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case MonadicKind::Predicate:
      out += f.predicate() + "(" + f.variable() + ")";
      return;
    case MonadicKind::Not:
      out += g.not_;
      wrapped(f.operand(), f.operand().is_binary(), tail);
      return;
    case MonadicKind::ForAll:
    case MonadicKind::Exists:
      if (!tail) out += '(';
      out += f.kind() == MonadicKind::ForAll ? g.forall : g.exists;
      out += f.variable() + ". ";
      emit(f.operand(), true, g, out);
      if (!tail) out += ')';
      return;
    default: {
      const int prec = precedence(f);
      const bool right_assoc = f.kind() == MonadicKind::Implies;
      const int lp = precedence(f.left());
      const int rp = precedence(f.right());
      wrapped(f.left(), right_assoc ? lp <= prec : lp < prec, false);
      out += ' ';
      out += f.kind() == MonadicKind::And ? g.and_ : f.kind() == MonadicKind::Or ? g.or_ : g.implies;
      out += ' ';
      wrapped(f.right(), right_assoc ? rp < prec : rp <= prec, tail);
      return;
    }
  }
}

}  // namespace

MonadicFormula parse_monadic(std::string_view text) { return MonadicParser(text).parse_all(); }

std::string print(const MonadicFormula& f, Style style) {
  std::string out;
  emit(f, true, monadic_glyphs(style), out);
  return out;
}

}  // namespace deduce
