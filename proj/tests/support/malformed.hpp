#pragma once

#include <string_view>

#include "deduce/parser.hpp"

namespace deduce::testkit {

struct MalformedCase {
  std::string_view input;
  ParseErrorKind kind;
  SourceSpan span;
};

// Curated malformed formulas with the error each must produce.
inline constexpr MalformedCase kMalformed[] = {
    {"P y ó Q", ParseErrorKind::UnknownToken, {4, 5}},
    {"", ParseErrorKind::UnexpectedEnd, {0, 0}},
    {"P y", ParseErrorKind::UnexpectedEnd, {3, 3}},
    {"(P", ParseErrorKind::UnbalancedParen, {0, 1}},
    {"P)", ParseErrorKind::UnbalancedParen, {1, 2}},
    {"P Q", ParseErrorKind::TrailingInput, {2, 3}},
    {"P # Q", ParseErrorKind::UnknownToken, {2, 3}},
    {"p -> Q", ParseErrorKind::UnknownToken, {0, 1}},
    {"P -> ", ParseErrorKind::UnexpectedEnd, {5, 5}},
    {"((P & Q)", ParseErrorKind::UnbalancedParen, {0, 1}},
    {"()", ParseErrorKind::UnknownToken, {1, 2}},
    {"P & & Q", ParseErrorKind::UnknownToken, {4, 5}},
    {"-> P", ParseErrorKind::UnknownToken, {0, 2}},
    {"¬", ParseErrorKind::UnexpectedEnd, {1, 1}},
    {"(P | Q))", ParseErrorKind::UnbalancedParen, {7, 8}},
    {"P <- Q", ParseErrorKind::UnknownToken, {2, 3}},
    {"P ⇒ Q R", ParseErrorKind::TrailingInput, {6, 7}},
    {"(P Q)", ParseErrorKind::UnknownToken, {3, 4}},
    {"P ∧ (Q ∨", ParseErrorKind::UnexpectedEnd, {8, 8}},
    {"forall", ParseErrorKind::UnknownToken, {0, 6}},
    {"P <=> ⇔ Q", ParseErrorKind::UnknownToken, {6, 7}},
};

}  // namespace deduce::testkit
