#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deduce/errors.hpp"

namespace deduce {

// A propositional variable. Names start with an uppercase ASCII letter and
// continue with ASCII letters or digits, so they never collide with the
// lowercase connective keywords.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name) noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

// V / F, also written 1 / 0.
enum class TruthValue : bool { F = false, V = true };

constexpr TruthValue operator!(TruthValue v) noexcept {
  return v == TruthValue::V ? TruthValue::F : TruthValue::V;
}
constexpr TruthValue to_truth(bool b) noexcept { return b ? TruthValue::V : TruthValue::F; }
constexpr bool to_bool(TruthValue v) noexcept { return v == TruthValue::V; }
constexpr char symbol(TruthValue v) noexcept { return v == TruthValue::V ? 'V' : 'F'; }

// Accepts "V", "F", "1", "0".
std::optional<TruthValue> parse_truth_value(std::string_view text) noexcept;

enum class Connective { Atomic, Not, Or, And, Implies, Iff };

// Immutable propositional formula. Copies share structure; every
// transformation returns a fresh tree.
class Formula {
 public:
  static Formula atom(Atom a);
  static Formula atom(std::string name) { return atom(Atom(std::move(name))); }
  static Formula negation(Formula inner);
  static Formula disjunction(Formula left, Formula right);
  static Formula conjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula biconditional(Formula left, Formula right);
  static Formula binary(Connective op, Formula left, Formula right);

  Connective connective() const noexcept;
  bool is_atomic() const noexcept { return connective() == Connective::Atomic; }
  bool is_binary() const noexcept;

  // Preconditions follow the connective: atom() on Atomic, operand() on Not,
  // left()/right() on the binary connectives. Violations throw InvalidArgument.
  const Atom& atom() const;
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Valuation = std::map<Atom, TruthValue>;
using Substitution = std::map<Atom, Formula>;

// Throws MissingAtom when v lacks an atom of f.
TruthValue eval(const Formula& f, const Valuation& v);

// Distinct atoms of f, sorted by name.
std::vector<Atom> atoms(const Formula& f);

// Simultaneous replacement; atoms outside the domain of s are kept.
Formula substitute(const Formula& f, const Substitution& s);

// Left-nested conjunction of a non-empty list.
Formula conjoin(const std::vector<Formula>& parts);

}  // namespace deduce
