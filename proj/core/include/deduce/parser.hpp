#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "deduce/errors.hpp"
#include "deduce/formula.hpp"

namespace deduce {

// Half-open range of code-point offsets into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind { UnbalancedParen, UnknownToken, UnexpectedEnd, TrailingInput };

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
      : Error(message), kind_(kind), span_(span) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  const SourceSpan& span() const noexcept { return span_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
};

// Operator spellings accepted on input (any style, mixed freely):
//   not  ¬ ! ~ no        and  y & ∧        or  ó o | ∨
//   implies  ⇒ -> =>     iff  ⇔ <-> <=>
// Precedence, tightest first: not, and, or, implies, iff. And/or associate
// to the left, implies/iff to the right.
Formula parse(std::string_view text);

enum class Style { Ascii, Unicode, Spanish };

// Minimal parenthesization; parse(print(f, s)) == f for every style.
std::string print(const Formula& f, Style style = Style::Ascii);

}  // namespace deduce
