#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deduce/finite_model.hpp"

namespace deduce {

enum class FormKind {
  UniversalAffirmative,   // todo S es P
  UniversalNegative,      // ningún S es P
  ParticularAffirmative,  // algún S es P
  ParticularNegative,     // algún S no es P
};

struct CategoricalForm {
  FormKind kind;
  std::string subject;
  std::string predicate;

  friend bool operator==(const CategoricalForm&, const CategoricalForm&) = default;
};

// "all:S:P", "no:S:P", "some:S:P", "some-not:S:P". Term names follow the atom
// rule (uppercase first). Throws InvalidArgument.
CategoricalForm parse_categorical(std::string_view text);
std::string to_string(const CategoricalForm& form);
// Spanish reading, e.g. "todo M es B".
std::string describe(const CategoricalForm& form);

// Throws UnknownPredicate.
bool eval_categorical(const CategoricalForm& form, const FiniteModel& m);

struct Syllogism {
  CategoricalForm major;
  CategoricalForm minor;
  CategoricalForm conclusion;

  // Sorted distinct term names.
  std::vector<std::string> terms() const;
  // Throws InvalidSyllogism unless exactly three distinct terms occur.
  void validate() const;

  friend bool operator==(const Syllogism&, const Syllogism&) = default;
};

struct NamedSyllogism {
  std::string name;          // "barbara"
  std::string display_name;  // "Bárbara"
  Syllogism syllogism;
};

// The ten named moods, terms A, B, M.
const std::vector<NamedSyllogism>& syllogism_registry();

// Case-insensitive; throws UnknownRule.
const NamedSyllogism& find_syllogism(std::string_view name);

struct SyllogismVerdict {
  std::optional<FiniteModel> counter_model;

  bool valid() const noexcept { return !counter_model.has_value(); }
};

// Exhaustive search over the 256 canonical models of the three terms: each
// of the 8 Venn regions holds zero or one element. With existential import
// only models where all three extensions are non-empty are admissible.
// Counter-models are closed under union of regions, so the reported one is
// the largest: every region that any counter-model uses is present.
SyllogismVerdict valid_syllogism(const Syllogism& s, bool existential_import);

// The canonical model with the given region mask over three sorted terms.
// Region r holds an element iff bit r of mask is set; that element belongs
// to terms[i] iff bit i of r is set. Elements are numbered by ascending r.
FiniteModel canonical_model(const std::vector<std::string>& terms, unsigned mask);

}  // namespace deduce
