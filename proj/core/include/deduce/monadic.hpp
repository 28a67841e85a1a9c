#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "deduce/categorical.hpp"
#include "deduce/finite_model.hpp"
#include "deduce/parser.hpp"

namespace deduce {

enum class MonadicKind { Predicate, Not, And, Or, Implies, ForAll, Exists };

// Monadic first-order formula: unary predicates applied to variables, the
// propositional connectives without <=>, and the two quantifiers.
class MonadicFormula {
 public:
  static MonadicFormula predicate(std::string pred, std::string var);
  static MonadicFormula negation(MonadicFormula inner);
  static MonadicFormula conjunction(MonadicFormula l, MonadicFormula r);
  static MonadicFormula disjunction(MonadicFormula l, MonadicFormula r);
  static MonadicFormula implication(MonadicFormula l, MonadicFormula r);
  static MonadicFormula for_all(std::string var, MonadicFormula body);
  static MonadicFormula exists(std::string var, MonadicFormula body);
  static MonadicFormula binary(MonadicKind kind, MonadicFormula l, MonadicFormula r);

  MonadicKind kind() const noexcept;
  bool is_binary() const noexcept;
  bool is_quantifier() const noexcept;

  // predicate(): Predicate. variable(): Predicate or quantifier.
  const std::string& predicate() const;
  const std::string& variable() const;
  // operand(): Not, or the body of a quantifier.
  const MonadicFormula& operand() const;
  const MonadicFormula& left() const;
  const MonadicFormula& right() const;

  std::size_t depth() const noexcept;

  friend bool operator==(const MonadicFormula& a, const MonadicFormula& b) noexcept;

 private:
  struct Node;
  explicit MonadicFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool is_closed(const MonadicFormula& f);

// Negations only on predicate applications, and no implications.
bool is_negation_normal(const MonadicFormula& f);

std::set<std::string> predicates(const MonadicFormula& f);

// Negation normal form of the negation of f, built from the quantifier
// negation laws, De Morgan and implication elimination.
MonadicFormula negate_quantifiers(const MonadicFormula& f);

// Negation normal form of f itself.
MonadicFormula negation_normal_form(const MonadicFormula& f);

// Throws InvalidArgument if f is open, UnknownPredicate if m lacks one of
// its predicates. Quantifiers over the empty universe: forall is true,
// exists is false.
bool eval_monadic(const MonadicFormula& f, const FiniteModel& m);

// Standard reading of a categorical form with the given variable:
// all:S:P -> forall x. S(x) -> P(x), no:S:P -> forall x. S(x) -> !P(x),
// some:S:P -> exists x. S(x) & P(x), some-not:S:P -> exists x. S(x) & !P(x).
MonadicFormula translate(const CategoricalForm& form, const std::string& var = "x");

// Surface syntax: "forall x. P(x) -> Q(x)", "exists x. P(x) & ~Q(x)", with
// the propositional operator aliases, "∀"/"∃" for the quantifiers, and
// lowercase variables other than the keywords y, o, no, forall, exists. A
// quantifier's body extends as far right as possible. Throws ParseError.
MonadicFormula parse_monadic(std::string_view text);

std::string print(const MonadicFormula& f, Style style = Style::Ascii);

}  // namespace deduce
