#include "deduce/rules.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "deduce/parser.hpp"

namespace deduce {

namespace {

struct RuleSource {
  std::string_view name;
  std::string_view display_name;
  std::string_view pattern;
};

// Brackets of the traditional statements become parentheses; the explicit
// grouping is kept even where precedence would make it redundant.
constexpr RuleSource kRules[] = {
    {"modus-ponens", "Modus ponens", "((P ⇒ Q) y P) ⇒ Q"},
    {"tollendo-ponens", "Tollendo ponens", "((P ó Q) y (¬P)) ⇒ Q"},
    {"tollendo-tollens", "Tollendo tollens", "((P ⇒ Q) y (¬Q)) ⇒ (¬P)"},
    {"contrapuesta", "Contrapuesta", "(P ⇒ Q) ⇒ ((¬Q) ⇒ (¬P))"},
    {"silogismo-hipotetico", "Silogismo hipotético", "((P ⇒ Q) y (Q ⇒ R)) ⇒ (P ⇒ R)"},
    {"dilema-constructivo", "Dilema constructivo",
     "((P ⇒ Q) y (R ⇒ S) y (P ó R)) ⇒ (Q ó S)"},
    {"dilema-destructivo", "Dilema destructivo",
     "((P ⇒ Q) y (R ⇒ S) y ((¬Q) ó (¬S))) ⇒ ((¬P) ó (¬R))"},
    {"exportacion", "Exportación", "(P ⇒ (Q ⇒ R)) ⇔ ((P y Q) ⇒ R)"},
};

std::vector<RuleSchema> build_registry() {
  std::vector<RuleSchema> out;
  for (const auto& src : kRules) {
    auto pattern = parse(src.pattern);
    if (classify(pattern) != Classification::Tautology) {
      throw std::logic_error("rule " + std::string(src.name) + " is not a tautology");
    }
    out.push_back({std::string(src.name), std::string(src.display_name), atoms(pattern), pattern});
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

const std::vector<RuleSchema>& registry() {
  static const std::vector<RuleSchema> rules = build_registry();
  return rules;
}

const RuleSchema& find_rule(std::string_view name) {
  const auto& rules = registry();
  auto it = std::find_if(rules.begin(), rules.end(),
                         [&](const RuleSchema& r) { return iequals(r.name, name); });
  if (it == rules.end()) throw UnknownRule(std::string(name));
  return *it;
}

Classification verify_rule(std::string_view name) { return classify(find_rule(name).pattern); }

Formula instantiate(std::string_view name, const Substitution& s) {
  const auto& rule = find_rule(name);
  for (const auto& [atom, image] : s) {
    if (!std::binary_search(rule.metavariables.begin(), rule.metavariables.end(), atom)) {
      throw InvalidArgument("'" + atom.name() + "' is not a metavariable of " + rule.name);
    }
  }
  return substitute(rule.pattern, s);
}

Formula entailment_formula(const Entailment& e) {
  if (e.premises.empty()) return e.conclusion;
  return Formula::implication(conjoin(e.premises), e.conclusion);
}

EntailmentVerdict entails(const Entailment& e) {
  return {first_falsifying(entailment_formula(e))};
}

}  // namespace deduce
