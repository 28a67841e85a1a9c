#include "deduce/parser.hpp"

#include "lexer.hpp"

namespace deduce {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::UnbalancedParen: return "unbalanced-paren";
    case ParseErrorKind::UnknownToken: return "unknown-token";
    case ParseErrorKind::UnexpectedEnd: return "unexpected-end";
    case ParseErrorKind::TrailingInput: return "trailing-input";
  }
  return "";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse_all() {
    auto f = parse_iff();
    const auto& next = lex_.peek();
    if (next.kind == TokenKind::RParen) {
      throw ParseError(ParseErrorKind::UnbalancedParen, next.span,
                       "closing parenthesis without a matching '('");
    }
    if (next.kind == TokenKind::Invalid) {
      throw ParseError(ParseErrorKind::UnknownToken, next.span,
                       "unrecognized token " + detail::describe(next));
    }
    if (next.kind != TokenKind::End) {
      throw ParseError(ParseErrorKind::TrailingInput, next.span,
                       "unexpected " + detail::describe(next) + " after a complete formula");
    }
    return f;
  }

 private:
  Formula parse_iff() {
    auto lhs = parse_implies();
    if (lex_.peek().kind == TokenKind::Iff) {
      lex_.take();
      return Formula::biconditional(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    auto lhs = parse_or();
    if (lex_.peek().kind == TokenKind::Implies) {
      lex_.take();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    auto acc = parse_and();
    while (lex_.peek().kind == TokenKind::Or) {
      lex_.take();
      acc = Formula::disjunction(std::move(acc), parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    auto acc = parse_unary();
    while (lex_.peek().kind == TokenKind::And) {
      lex_.take();
      acc = Formula::conjunction(std::move(acc), parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    if (lex_.peek().kind == TokenKind::Not) {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    auto tok = lex_.take();
    switch (tok.kind) {
      case TokenKind::Name:
        return Formula::atom(Atom(tok.text));
      case TokenKind::LParen: {
        auto inner = parse_iff();
        const auto& close = lex_.peek();
        if (close.kind == TokenKind::RParen) {
          lex_.take();
          return inner;
        }
        if (close.kind == TokenKind::End) {
          throw ParseError(ParseErrorKind::UnbalancedParen, tok.span,
                           "parenthesis opened here is never closed");
        }
        throw ParseError(ParseErrorKind::UnknownToken, close.span,
                         "expected ')' but found " + detail::describe(close));
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

  Lexer lex_;
};

enum Precedence { kIff = 1, kImplies = 2, kOr = 3, kAnd = 4, kNot = 5, kAtom = 6 };

int precedence(const Formula& f) {
  switch (f.connective()) {
    case Connective::Atomic: return kAtom;
    case Connective::Not: return kNot;
    case Connective::And: return kAnd;
    case Connective::Or: return kOr;
    case Connective::Implies: return kImplies;
    case Connective::Iff: return kIff;
  }
  return kAtom;
}

bool right_associative(Connective op) { return op == Connective::Implies || op == Connective::Iff; }

struct Glyphs {
  std::string_view not_, and_, or_, implies, iff;
};

constexpr Glyphs glyphs_for(Style style) {
  switch (style) {
    case Style::Ascii: return {"!", "&", "|", "->", "<->"};
    case Style::Unicode: return {"¬", "∧", "∨", "⇒", "⇔"};
    case Style::Spanish: return {"¬", "y", "ó", "⇒", "⇔"};
  }
  return {"!", "&", "|", "->", "<->"};
}

void emit(const Formula& f, const Glyphs& g, std::string& out);

void emit_operand(const Formula& f, bool parens, const Glyphs& g, std::string& out) {
  if (parens) out += '(';
  emit(f, g, out);
  if (parens) out += ')';
}

void emit(const Formula& f, const Glyphs& g, std::string& out) {
  switch (f.connective()) {
    case Connective::Atomic:
      out += f.atom().name();
      return;
    case Connective::Not:
      out += g.not_;
      emit_operand(f.operand(), precedence(f.operand()) < kNot, g, out);
      return;
    default: {
      const int prec = precedence(f);
      const bool right_assoc = right_associative(f.connective());
      const int lp = precedence(f.left());
      const int rp = precedence(f.right());
      emit_operand(f.left(), right_assoc ? lp <= prec : lp < prec, g, out);
      out += ' ';
      switch (f.connective()) {
        case Connective::And: out += g.and_; break;
        case Connective::Or: out += g.or_; break;
        case Connective::Implies: out += g.implies; break;
        default: out += g.iff; break;
      }
      out += ' ';
      emit_operand(f.right(), right_assoc ? rp < prec : rp <= prec, g, out);
      return;
    }
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f, Style style) {
  std::string out;
  emit(f, glyphs_for(style), out);
  return out;
}

}  // namespace deduce
