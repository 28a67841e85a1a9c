#include "lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace deduce::detail {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

std::size_t count_code_points(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += is_continuation(static_cast<unsigned char>(c)) ? 0 : 1;
  return n;
}

struct Spelling {
  std::string_view text;
  TokenKind kind;
};

// Longest spellings first so "<->" wins over "<", "->" over "-".
constexpr std::array<Spelling, 20> kSymbols = {{
    {"<->", TokenKind::Iff},     {"<=>", TokenKind::Iff},     {"->", TokenKind::Implies},
    {"=>", TokenKind::Implies},  {"⇔", TokenKind::Iff},  {"⇒", TokenKind::Implies},
    {"∧", TokenKind::And},  {"∨", TokenKind::Or},   {"¬", TokenKind::Not},
    {"ó", TokenKind::Or},   {"∀", TokenKind::ForAll}, {"∃", TokenKind::Exists},
    {"!", TokenKind::Not},       {"~", TokenKind::Not},       {"&", TokenKind::And},
    {"|", TokenKind::Or},        {"(", TokenKind::LParen},    {")", TokenKind::RParen},
    {".", TokenKind::Dot},       {",", TokenKind::Invalid},
}};

TokenKind classify_word(std::string_view word) {
  if (std::isupper(static_cast<unsigned char>(word.front()))) return TokenKind::Name;
  if (word == "y") return TokenKind::And;
  if (word == "o") return TokenKind::Or;
  if (word == "no") return TokenKind::Not;
  if (word == "forall") return TokenKind::ForAll;
  if (word == "exists") return TokenKind::Exists;
  return TokenKind::Variable;
}

}  // namespace

Lexer::Lexer(std::string_view text) : text_(text), length_(count_code_points(text)) {
  current_ = scan();
}

Token Lexer::take() { return std::exchange(current_, scan()); }

Token Lexer::scan() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
    ++pos_;
    ++chars_;
  }
  const auto start = chars_;
  if (pos_ >= text_.size()) return {TokenKind::End, "", {start, start}};

  const auto rest = text_.substr(pos_);
  for (const auto& sym : kSymbols) {
    if (rest.starts_with(sym.text)) {
      pos_ += sym.text.size();
      chars_ += count_code_points(sym.text);
      return {sym.kind, std::string(sym.text), {start, chars_}};
    }
  }

  const auto c = static_cast<unsigned char>(rest.front());
  if (c < 0x80 && std::isalpha(c)) {
    std::size_t len = 1;
    while (len < rest.size() && static_cast<unsigned char>(rest[len]) < 0x80 &&
           std::isalnum(static_cast<unsigned char>(rest[len]))) {
      ++len;
    }
    const auto word = rest.substr(0, len);
    pos_ += len;
    chars_ += len;
    return {classify_word(word), std::string(word), {start, chars_}};
  }

  // Unknown character: consume one whole code point.
  std::size_t len = 1;
  while (len < rest.size() && is_continuation(static_cast<unsigned char>(rest[len]))) ++len;
  pos_ += len;
  chars_ += 1;
  return {TokenKind::Invalid, std::string(rest.substr(0, len)), {start, chars_}};
}

std::string describe(const Token& token) {
  if (token.kind == TokenKind::End) return "end of input";
  return "'" + token.text + "'";
}

}  // namespace deduce::detail
