#include <gtest/gtest.h>

#include "deduce/parser.hpp"
#include "generators.hpp"
#include "malformed.hpp"

using namespace deduce;

namespace {

Formula P() { return Formula::atom("P"); }
Formula Q() { return Formula::atom("Q"); }
Formula R() { return Formula::atom("R"); }

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "'" << text << "' parsed";
  return ParseError(ParseErrorKind::UnknownToken, {}, "");
}

// First `chars` code points of s.
std::string prefix(std::string_view s, std::size_t chars) {
  std::size_t i = 0;
  for (std::size_t seen = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) continue;
    if (seen++ == chars) break;
  }
  return std::string(s.substr(0, i));
}

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return n;
}

std::string random_token_soup(testkit::Rng& rng) {
  static const std::vector<std::string> tokens = {
      "P", "Q", "R", "Llueve", "(", ")", "(", ")", "¬", "!", "~", "no", "y", "&", "∧",
      "ó", "o", "|", "∨", "⇒", "->", "=>", "⇔", "<->", "<=>", "#", "x", " "};
  std::string out;
  const auto n = 1 + testkit::pick(rng, 9);
  for (std::size_t i = 0; i < n; ++i) out += tokens[testkit::pick(rng, tokens.size())] + " ";
  return out;
}

}  // namespace

TEST(ParseTest, Examples) {
  EXPECT_EQ(parse("P -> Q"), Formula::implication(P(), Q()));
  EXPECT_EQ(parse("(P ó Q) y (¬P)"),
            Formula::conjunction(Formula::disjunction(P(), Q()), Formula::negation(P())));
  EXPECT_EQ(parse("P -> Q -> R"), Formula::implication(P(), Formula::implication(Q(), R())));
}

TEST(ParseTest, MalformedExample) {
  const auto e = parse_error("P y ó Q");
  EXPECT_EQ(e.kind(), ParseErrorKind::UnknownToken);
  EXPECT_EQ(e.span(), (SourceSpan{4, 5}));
}

TEST(ParseTest, AllAliasesAgree) {
  const auto expected = Formula::biconditional(
      Formula::implication(Formula::disjunction(Formula::conjunction(Formula::negation(P()), Q()), R()), P()), Q());
  for (const auto* text : {"¬P y Q ó R ⇒ P ⇔ Q", "!P & Q | R -> P <-> Q", "~P ∧ Q ∨ R => P <=> Q",
                           "no P y Q o R ⇒ P ⇔ Q", "((¬P) y Q) ó R ⇒ P ⇔ Q"}) {
    EXPECT_EQ(parse(text), expected) << text;
  }
}

TEST(ParseTest, Associativity) {
  EXPECT_EQ(parse("P & Q & R"), Formula::conjunction(Formula::conjunction(P(), Q()), R()));
  EXPECT_EQ(parse("P | Q | R"), Formula::disjunction(Formula::disjunction(P(), Q()), R()));
  EXPECT_EQ(parse("P <-> Q <-> R"), Formula::biconditional(P(), Formula::biconditional(Q(), R())));
}

TEST(ParseTest, WhitespaceInsensitive) {
  EXPECT_EQ(parse("  P->Q  "), parse("P -> Q"));
  EXPECT_EQ(parse("!(P&Q)"), parse("! ( P & Q )"));
  EXPECT_EQ(parse("P\ty\nQ"), parse("P y Q"));
}

TEST(ParseTest, LongAtomNames) {
  EXPECT_EQ(parse("Llueve ⇒ PastoMojado"),
            Formula::implication(Formula::atom("Llueve"), Formula::atom("PastoMojado")));
}

TEST(ParseTest, CuratedMalformedInputs) {
  for (const auto& c : testkit::kMalformed) {
    const auto e = parse_error(c.input);
    EXPECT_EQ(e.kind(), c.kind) << c.input << ": " << e.what();
    EXPECT_EQ(e.span(), c.span) << c.input;
  }
}

TEST(PrintTest, Examples) {
  EXPECT_EQ(print(Formula::implication(P(), Q()), Style::Unicode), "P ⇒ Q");
  EXPECT_EQ(print(Formula::conjunction(Formula::disjunction(P(), Q()), Formula::negation(P())), Style::Spanish),
            "(P ó Q) y ¬P");
  EXPECT_EQ(print(Formula::negation(Formula::negation(P())), Style::Ascii), "!!P");
}

TEST(PrintTest, MinimalParentheses) {
  EXPECT_EQ(print(parse("(P -> Q) -> R")), "(P -> Q) -> R");
  EXPECT_EQ(print(parse("P -> (Q -> R)")), "P -> Q -> R");
  EXPECT_EQ(print(parse("(P & Q) & R")), "P & Q & R");
  EXPECT_EQ(print(parse("P & (Q & R)")), "P & (Q & R)");
  EXPECT_EQ(print(parse("!(P | Q)")), "!(P | Q)");
  EXPECT_EQ(print(parse("((P))")), "P");
  EXPECT_EQ(print(parse("(P | Q) & R")), "(P | Q) & R");
  EXPECT_EQ(print(parse("P | (Q & R)")), "P | Q & R");
}

TEST(PrintTest, RoundTripAllStyles) {
  testkit::Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const auto f = testkit::random_formula(rng, 6, 8);
    for (auto style : {Style::Ascii, Style::Unicode, Style::Spanish}) {
      const auto text = print(f, style);
      EXPECT_EQ(parse(text), f) << text;
    }
  }
}

TEST(PrintTest, NormalizationIsIdempotent) {
  testkit::Rng rng(99);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto text = random_token_soup(rng);
    try {
      const auto once = print(parse(text));
      EXPECT_EQ(once, print(parse(once))) << text;
      ++parsed;
    } catch (const ParseError&) {
    }
  }
  EXPECT_GT(parsed, 50);
}

TEST(ParseErrorTest, SpansInBoundsAndPrefixesFailNoEarlier) {
  testkit::Rng rng(17);
  auto check = [](std::string_view text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      const auto len = code_points(text);
      EXPECT_LE(e.span().start, e.span().end) << text;
      EXPECT_LE(e.span().end, len) << text;
      const auto head = prefix(text, e.span().start);
      try {
        parse(head);
      } catch (const ParseError& earlier) {
        EXPECT_FALSE(earlier.kind() == e.kind() && earlier.span().start < e.span().start)
            << "'" << text << "' vs prefix '" << head << "'";
      }
    }
  };
  for (const auto& c : testkit::kMalformed) check(c.input);
  for (int i = 0; i < 3000; ++i) check(random_token_soup(rng));
}
