#include <gtest/gtest.h>

#include "deduce/monadic.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace deduce;

namespace {

using MF = MonadicFormula;

MF pred(const char* p, const char* v = "x") { return MF::predicate(p, v); }

FiniteModel model(std::size_t size, std::map<std::string, std::set<std::size_t>> ext) {
  return {size, std::move(ext)};
}

}  // namespace

TEST(EvalMonadicTest, Examples) {
  EXPECT_TRUE(eval_monadic(MF::for_all("x", pred("P")), model(0, {{"P", {}}})));
  EXPECT_FALSE(eval_monadic(MF::exists("x", pred("P")), model(0, {{"P", {}}})));
  EXPECT_TRUE(eval_monadic(MF::exists("x", pred("P")), model(2, {{"P", {1}}})));
  const auto excluded_middle = MF::for_all("x", MF::disjunction(pred("P"), MF::negation(pred("P"))));
  testkit::for_each_model({"P"}, 3, [&](const FiniteModel& m) { EXPECT_TRUE(eval_monadic(excluded_middle, m)); });
}

TEST(EvalMonadicTest, NestedAndShadowedVariables) {
  // forall x. exists z. P(x) -> Q(z)
  const auto f = MF::for_all("x", MF::exists("z", MF::implication(pred("P"), pred("Q", "z"))));
  EXPECT_TRUE(eval_monadic(f, model(2, {{"P", {0}}, {"Q", {1}}})));
  EXPECT_FALSE(eval_monadic(f, model(2, {{"P", {0}}, {"Q", {}}})));
  // exists x. (P(x) & forall x. Q(x)): the inner x shadows the outer one.
  const auto g = MF::exists("x", MF::conjunction(pred("P"), MF::for_all("x", pred("Q"))));
  EXPECT_TRUE(eval_monadic(g, model(2, {{"P", {0}}, {"Q", {0, 1}}})));
  EXPECT_FALSE(eval_monadic(g, model(2, {{"P", {0}}, {"Q", {0}}})));
}

TEST(EvalMonadicTest, Errors) {
  EXPECT_THROW(eval_monadic(pred("P"), model(1, {{"P", {0}}})), InvalidArgument);
  EXPECT_THROW(eval_monadic(MF::for_all("x", pred("Q")), model(1, {{"P", {0}}})), UnknownPredicate);
  // Unknown predicates are reported even over the empty universe.
  EXPECT_THROW(eval_monadic(MF::for_all("x", pred("Q")), model(0, {})), UnknownPredicate);
}

TEST(NegateQuantifiersTest, Examples) {
  EXPECT_EQ(negate_quantifiers(MF::exists("x", pred("P"))), MF::for_all("x", MF::negation(pred("P"))));
  EXPECT_EQ(negate_quantifiers(MF::for_all("x", pred("P"))), MF::exists("x", MF::negation(pred("P"))));
  EXPECT_EQ(negate_quantifiers(MF::for_all("x", MF::implication(pred("P"), pred("Q")))),
            MF::exists("x", MF::conjunction(pred("P"), MF::negation(pred("Q")))));
}

TEST(NegateQuantifiersTest, ImplicationExampleIsSemanticallyCorrect) {
  const auto f = MF::for_all("x", MF::implication(pred("P"), pred("Q")));
  const auto g = negate_quantifiers(f);
  testkit::for_each_model({"P", "Q"}, 3, [&](const FiniteModel& m) { EXPECT_NE(eval_monadic(f, m), eval_monadic(g, m)); });
}

TEST(NegateQuantifiersTest, SoundAndNegationNormal) {
  testkit::Rng rng(1);
  for (int i = 0; i < 150; ++i) {
    const auto f = testkit::random_monadic(rng, 3, 4);
    ASSERT_TRUE(is_closed(f));
    const auto g = negate_quantifiers(f);
    EXPECT_TRUE(is_negation_normal(g)) << print(g);
    EXPECT_TRUE(is_closed(g));
    EXPECT_EQ(negation_normal_form(MF::negation(f)), g);
    testkit::for_each_model({"P", "Q", "R"}, 2, [&](const FiniteModel& m) {
      EXPECT_NE(eval_monadic(f, m), eval_monadic(g, m)) << print(f);
    });
  }
}

TEST(NegateQuantifiersTest, DoubleNegationRestoresMeaning) {
  testkit::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = testkit::random_monadic(rng, 2, 4);
    const auto back = negate_quantifiers(negate_quantifiers(f));
    EXPECT_EQ(back, negation_normal_form(f));
    testkit::for_each_model({"P", "Q"}, 2,
                            [&](const FiniteModel& m) { EXPECT_EQ(eval_monadic(f, m), eval_monadic(back, m)); });
  }
}

TEST(StructureTest, ClosedAndNormalForm) {
  EXPECT_FALSE(is_closed(pred("P")));
  EXPECT_FALSE(is_closed(MF::for_all("y", pred("P", "x"))));
  EXPECT_TRUE(is_closed(MF::for_all("x", pred("P"))));
  EXPECT_FALSE(is_negation_normal(MF::negation(MF::for_all("x", pred("P")))));
  EXPECT_FALSE(is_negation_normal(MF::for_all("x", MF::implication(pred("P"), pred("Q")))));
  EXPECT_TRUE(is_negation_normal(MF::exists("x", MF::conjunction(pred("P"), MF::negation(pred("Q"))))));
  EXPECT_EQ(predicates(MF::for_all("x", MF::implication(pred("Q"), pred("P")))),
            (std::set<std::string>{"P", "Q"}));
}

TEST(MonadicParseTest, SurfaceSyntax) {
  EXPECT_EQ(parse_monadic("forall x. P(x) -> Q(x)"), MF::for_all("x", MF::implication(pred("P"), pred("Q"))));
  EXPECT_EQ(parse_monadic("exists x. P(x) & ~Q(x)"),
            MF::exists("x", MF::conjunction(pred("P"), MF::negation(pred("Q")))));
  EXPECT_EQ(parse_monadic("∀x. P(x) ⇒ Q(x)"), parse_monadic("forall x. P(x) -> Q(x)"));
  EXPECT_EQ(parse_monadic("¬(∃x. P(x))"), MF::negation(MF::exists("x", pred("P"))));
  EXPECT_EQ(parse_monadic("(forall x. P(x)) & exists z. Q(z)"),
            MF::conjunction(MF::for_all("x", pred("P")), MF::exists("z", pred("Q", "z"))));
}

TEST(MonadicParseTest, QuantifierBodyExtendsRight) {
  EXPECT_EQ(parse_monadic("P(x) & forall z. Q(z) | R(z)"),
            MF::conjunction(pred("P"), MF::for_all("z", MF::disjunction(pred("Q", "z"), pred("R", "z")))));
}

TEST(MonadicParseTest, Errors) {
  auto kind_of = [](std::string_view text) {
    try {
      parse_monadic(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    ADD_FAILURE() << text;
    return ParseErrorKind::TrailingInput;
  };
  EXPECT_EQ(kind_of("forall x P(x)"), ParseErrorKind::UnknownToken);
  EXPECT_EQ(kind_of("forall z. P(z"), ParseErrorKind::UnbalancedParen);
  EXPECT_EQ(kind_of("forall x."), ParseErrorKind::UnexpectedEnd);
  EXPECT_EQ(kind_of("forall x. P(x) <-> Q(x)"), ParseErrorKind::UnknownToken);
  EXPECT_EQ(kind_of("P"), ParseErrorKind::UnexpectedEnd);
  EXPECT_EQ(kind_of("forall z. P(z) Q(z)"), ParseErrorKind::TrailingInput);
  EXPECT_EQ(kind_of("forall no. P(no)"), ParseErrorKind::UnknownToken);
}

TEST(MonadicPrintTest, RoundTrip) {
  testkit::Rng rng(9);
  for (int i = 0; i < 400; ++i) {
    const auto f = testkit::random_monadic(rng, 3, 5);
    for (auto style : {Style::Ascii, Style::Unicode, Style::Spanish}) {
      const auto text = print(f, style);
      EXPECT_EQ(parse_monadic(text), f) << text;
    }
  }
}

TEST(MonadicPrintTest, Examples) {
  EXPECT_EQ(print(parse_monadic("forall x. P(x) -> Q(x)")), "forall x. P(x) -> Q(x)");
  EXPECT_EQ(print(parse_monadic("exists x. P(x) & ~Q(x)"), Style::Unicode), "∃x. P(x) ∧ ¬Q(x)");
  EXPECT_EQ(print(parse_monadic("(forall x. P(x)) & Q(z)")), "(forall x. P(x)) & Q(z)");
  EXPECT_EQ(print(parse_monadic("~(forall x. P(x)) | Q(z)")), "!(forall x. P(x)) | Q(z)");
}
