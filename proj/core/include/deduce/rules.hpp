#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deduce/formula.hpp"
#include "deduce/truth_table.hpp"

namespace deduce {

// A named tautology with metavariables P, Q, R, S.
struct RuleSchema {
  std::string name;          // ASCII, lowercase, hyphenated: "modus-ponens"
  std::string display_name;  // "Modus ponens"
  std::vector<Atom> metavariables;
  Formula pattern;
};

// The eight named schemata, in their traditional order. Each pattern is
// checked to be a tautology when the registry is first built.
const std::vector<RuleSchema>& registry();

// Case-insensitive lookup; throws UnknownRule.
const RuleSchema& find_rule(std::string_view name);

Classification verify_rule(std::string_view name);

// Throws UnknownRule, or InvalidArgument when s maps a non-metavariable.
Formula instantiate(std::string_view name, const Substitution& s);

struct Entailment {
  std::vector<Formula> premises;
  Formula conclusion;
};

// Valid, or Invalid with the first countervaluation in canonical row order.
struct EntailmentVerdict {
  std::optional<Valuation> countervaluation;

  bool valid() const noexcept { return !countervaluation.has_value(); }
};

// Valid iff (p1 y ... y pn) => conclusion is a tautology; with no premises the
// conclusion alone must be. Throws TooManyAtoms.
EntailmentVerdict entails(const Entailment& e);

// The single formula whose tautologyhood decides e.
Formula entailment_formula(const Entailment& e);

}  // namespace deduce
