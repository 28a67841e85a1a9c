#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "deduce/parser.hpp"

namespace deduce::detail {

enum class TokenKind {
  Name,      // uppercase-initial identifier: atom or predicate
  Variable,  // lowercase identifier that is not a keyword
  Not,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  Dot,
  ForAll,
  Exists,
  Invalid,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

// On-demand tokenizer; spans count code points, not bytes.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const noexcept { return current_; }
  Token take();

  std::size_t length() const noexcept { return length_; }

 private:
  Token scan();

  std::string_view text_;
  std::size_t pos_ = 0;    // byte offset
  std::size_t chars_ = 0;  // code points consumed
  std::size_t length_ = 0;
  Token current_;
};

std::string describe(const Token& token);

}  // namespace deduce::detail
