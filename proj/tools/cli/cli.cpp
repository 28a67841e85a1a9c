#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "deduce/categorical.hpp"
#include "deduce/jugs.hpp"
#include "deduce/monadic.hpp"
#include "deduce/parser.hpp"
#include "deduce/rules.hpp"
#include "deduce/truth_table.hpp"

namespace deduce::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int exit_code = kExitOk;
  std::string status = "ok";
  json result = json::object();
  json counterexample = nullptr;
  std::string text;
};

// Raised for a bad flag combination after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ParseError together with the argument it came from.
struct ArgumentParseError {
  ParseError error;
  std::string input;
};

Formula parse_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ArgumentParseError{e, text};
  }
}

MonadicFormula parse_monadic_arg(const std::string& text) {
  try {
    return parse_monadic(text);
  } catch (const ParseError& e) {
    throw ArgumentParseError{e, text};
  }
}

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string spanish(Classification c) {
  switch (c) {
    case Classification::Tautology: return "tautología";
    case Classification::Contradiction: return "contradicción";
    case Classification::Contingent: return "contingente";
  }
  return {};
}

std::string text_valuation(const Valuation& v) {
  std::string out;
  for (const auto& [atom, value] : v) {
    if (!out.empty()) out += ", ";
    out += atom.name() + "=" + symbol(value);
  }
  return out;
}

json json_valuation(const Valuation& v) {
  json out = json::object();
  for (const auto& [atom, value] : v) out[atom.name()] = to_bool(value);
  return out;
}

std::string text_set(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ", ";
    out += std::to_string(*it);
  }
  return out + "}";
}

std::string text_model(const FiniteModel& m) {
  std::set<std::size_t> universe;
  for (std::size_t i = 0; i < m.universe_size; ++i) universe.insert(i);
  std::string out = "universo " + text_set(universe);
  for (const auto& [name, ext] : m.extensions) out += "; " + name + " = " + text_set(ext);
  return out;
}

json json_model(const FiniteModel& m) {
  json ext = json::object();
  for (const auto& [name, members] : m.extensions) ext[name] = json(members);
  return {{"universe_size", m.universe_size}, {"extensions", ext}};
}

json json_syllogism(const Syllogism& s) {
  return {{"major", to_string(s.major)},
          {"minor", to_string(s.minor)},
          {"conclusion", to_string(s.conclusion)}};
}

std::string text_syllogism(const Syllogism& s) {
  return describe(s.major) + ", " + describe(s.minor) + " ⊢ " + describe(s.conclusion);
}

// ---------------------------------------------------------------------------
// Propositional commands

Outcome cmd_table(const std::string& text, Style style) {
  const auto f = parse_arg(text);
  const auto table = truth_table(f);
  const auto shown = print(f, style);

  std::vector<std::size_t> widths;
  std::vector<std::string> header;
  for (const auto& a : table.atoms()) header.push_back(a.name());
  header.push_back(shown);
  for (const auto& h : header) widths.push_back(std::max<std::size_t>(1, display_width(h)));

  std::ostringstream os;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) os << " | ";
      os << (i + 1 == cells.size() ? cells[i] : pad(cells[i], widths[i]));
    }
    os << '\n';
  };
  emit_row(header);

  Outcome out;
  json rows = json::array();
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < table.atoms().size(); ++i) {
      cells.emplace_back(1, symbol(table.atom_value(r, i)));
    }
    cells.emplace_back(1, symbol(table.value(r)));
    emit_row(cells);
    rows.push_back({{"valuation", json_valuation(table.valuation(r))},
                    {"value", to_bool(table.value(r))}});
  }
  json atom_names = json::array();
  for (const auto& a : table.atoms()) atom_names.push_back(a.name());
  out.result = {{"formula", print(f)}, {"atoms", atom_names}, {"rows", rows}};
  out.text = os.str();
  return out;
}

Outcome cmd_classify(const std::string& text) {
  const auto f = parse_arg(text);
  const auto c = classify(f);
  Outcome out;
  out.result = {{"formula", print(f)}, {"classification", to_string(c)}};
  out.text = spanish(c) + "\n";
  if (c != Classification::Tautology) {
    const auto counter = *first_falsifying(f);
    out.exit_code = kExitInvalid;
    out.status = "invalid";
    out.counterexample = {{"valuation", json_valuation(counter)}};
    out.text += "contraejemplo: " + text_valuation(counter) + "\n";
  }
  return out;
}

Outcome cmd_equiv(const std::string& lhs, const std::string& rhs) {
  const auto f = parse_arg(lhs);
  const auto g = parse_arg(rhs);
  const auto differs = first_falsifying(Formula::biconditional(f, g));
  Outcome out;
  out.result = {{"left", print(f)}, {"right", print(g)}, {"equivalent", !differs.has_value()}};
  if (!differs) {
    out.text = "equivalentes\n";
    return out;
  }
  out.exit_code = kExitInvalid;
  out.status = "invalid";
  out.counterexample = {{"valuation", json_valuation(*differs)},
                        {"left_value", to_bool(eval(f, *differs))},
                        {"right_value", to_bool(eval(g, *differs))}};
  out.text = "no equivalentes\ncontraejemplo: " + text_valuation(*differs) + "\n";
  return out;
}

json json_rule(const RuleSchema& r) {
  json metas = json::array();
  for (const auto& m : r.metavariables) metas.push_back(m.name());
  return {{"name", r.name},
          {"display_name", r.display_name},
          {"metavariables", metas},
          {"pattern", print(r.pattern)}};
}

Outcome cmd_rules_list(Style style) {
  Outcome out;
  json list = json::array();
  std::size_t width = 0;
  for (const auto& r : registry()) width = std::max(width, r.name.size());
  for (const auto& r : registry()) {
    list.push_back(json_rule(r));
    out.text += pad(r.name, width) + "  " + print(r.pattern, style) + "\n";
  }
  out.result = {{"rules", list}};
  return out;
}

Outcome cmd_rules_show(const std::string& name, Style style) {
  const auto& r = find_rule(name);
  Outcome out;
  out.result = json_rule(r);
  std::string metas;
  for (const auto& m : r.metavariables) metas += (metas.empty() ? "" : ", ") + m.name();
  out.text = "name: " + r.name + "\ndisplay: " + r.display_name + "\nmetavariables: " + metas +
             "\npattern: " + print(r.pattern, style) + "\n";
  return out;
}

Outcome cmd_rules_verify(const std::string& name) {
  const auto& r = find_rule(name);
  const auto c = verify_rule(r.name);
  Outcome out;
  out.result = {{"name", r.name}, {"pattern", print(r.pattern)}, {"classification", to_string(c)}};
  out.text = r.name + ": " + spanish(c) + "\n";
  if (c != Classification::Tautology) {
    out.exit_code = kExitInvalid;
    out.status = "invalid";
    out.counterexample = {{"valuation", json_valuation(*first_falsifying(r.pattern))}};
  }
  return out;
}

Outcome cmd_entail(const std::vector<std::string>& premises, const std::string& conclusion) {
  Entailment e{{}, parse_arg(conclusion)};
  json shown = json::array();
  for (const auto& p : premises) {
    e.premises.push_back(parse_arg(p));
    shown.push_back(print(e.premises.back()));
  }
  const auto verdict = entails(e);
  Outcome out;
  out.result = {{"premises", shown}, {"conclusion", print(e.conclusion)}, {"valid", verdict.valid()}};
  if (verdict.valid()) {
    out.text = "válido\n";
    return out;
  }
  out.exit_code = kExitInvalid;
  out.status = "invalid";
  out.counterexample = {{"valuation", json_valuation(*verdict.countervaluation)}};
  out.text = "inválido\ncontraejemplo: " + text_valuation(*verdict.countervaluation) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Syllogisms and quantifiers

Outcome cmd_syllogism_list() {
  Outcome out;
  json list = json::array();
  std::size_t width = 0;
  for (const auto& s : syllogism_registry()) width = std::max(width, s.name.size());
  for (const auto& s : syllogism_registry()) {
    json entry = {{"name", s.name}, {"display_name", s.display_name}};
    entry.update(json_syllogism(s.syllogism));
    list.push_back(entry);
    out.text += pad(s.name, width) + "  " + text_syllogism(s.syllogism) + "\n";
  }
  out.result = {{"syllogisms", list}};
  return out;
}

Outcome check_syllogism(const std::string& name, const Syllogism& s, bool existential_import) {
  const auto without = valid_syllogism(s, false);
  const auto with = valid_syllogism(s, true);
  const auto& verdict = existential_import ? with : without;

  Outcome out;
  out.result = {{"name", name},
                {"syllogism", json_syllogism(s)},
                {"existential_import", existential_import},
                {"valid", verdict.valid()},
                {"valid_without_import", without.valid()},
                {"valid_with_import", with.valid()}};
  const std::string mode =
      existential_import ? "con importación existencial" : "sin importación existencial";
  out.text = name + ": " + (verdict.valid() ? "válido" : "inválido") + " (" + mode + ")\n";
  if (!verdict.valid()) {
    out.exit_code = kExitInvalid;
    out.status = "invalid";
    out.counterexample = {{"model", json_model(*verdict.counter_model)}};
    out.text += "contramodelo: " + text_model(*verdict.counter_model) + "\n";
  }
  if (without.valid() != with.valid()) {
    out.text += "nota: válido solo con importación existencial (--existential-import)\n";
  }
  return out;
}

Outcome cmd_syllogism_check(const std::string& name, bool existential_import) {
  const auto& named = find_syllogism(name);
  return check_syllogism(named.name, named.syllogism, existential_import);
}

Outcome cmd_syllogism_custom(const std::string& major, const std::string& minor,
                             const std::string& conclusion, bool existential_import) {
  const Syllogism s{parse_categorical(major), parse_categorical(minor), parse_categorical(conclusion)};
  s.validate();
  return check_syllogism("custom", s, existential_import);
}

Outcome cmd_quant_negate(const std::string& text, Style style) {
  const auto f = parse_monadic_arg(text);
  if (!is_closed(f)) throw InvalidArgument("formula has free variables");
  const auto negated = negate_quantifiers(f);
  Outcome out;
  out.result = {{"formula", print(f)}, {"negation", print(negated)}};
  out.text = print(negated, style) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Jugs

struct JugArgs {
  jugs::Volume n = 0;
  jugs::Volume m = 0;
  std::optional<jugs::Volume> target;
  std::optional<jugs::Volume> limit;
  std::string strategy = "certificate";
};

Outcome cmd_jugs_gcd(const JugArgs& a) {
  jugs::JugProblem{a.n, a.m, 1}.validate();
  const auto g = jugs::gcd(a.n, a.m);
  Outcome out;
  out.result = {{"n", a.n}, {"m", a.m}, {"gcd", g}};
  out.text = std::to_string(g) + "\n";
  return out;
}

Outcome cmd_jugs_bezout(const JugArgs& a) {
  jugs::JugProblem{a.n, a.m, 1}.validate();
  const auto c = jugs::bezout(a.n, a.m);
  Outcome out;
  out.result = {{"n", a.n}, {"m", a.m}, {"g", c.g}, {"a", c.a}, {"b", c.b}};
  out.text = std::to_string(c.g) + " = " + std::to_string(c.a) + "×" + std::to_string(a.n) +
             " + (" + std::to_string(c.b) + ")×" + std::to_string(a.m) + "\n";
  return out;
}

Outcome cmd_jugs_amounts(const JugArgs& a) {
  if (!a.limit) throw UsageError("jugs amounts requires --limit");
  const auto amounts = jugs::achievable_amounts(a.n, a.m, *a.limit);
  Outcome out;
  out.result = {{"n", a.n}, {"m", a.m}, {"limit", *a.limit}, {"gcd", jugs::gcd(a.n, a.m)},
                {"amounts", amounts}};
  for (std::size_t i = 0; i < amounts.size(); ++i) {
    out.text += (i == 0 ? "" : ", ") + std::to_string(amounts[i]);
  }
  out.text += "\n";
  return out;
}

Outcome cmd_jugs_plan(const JugArgs& a) {
  if (!a.target) throw UsageError("jugs plan requires --target");
  const jugs::JugProblem p{a.n, a.m, *a.target};
  const auto strategy =
      a.strategy == "shortest" ? jugs::PlanStrategy::Shortest : jugs::PlanStrategy::Certificate;
  const auto found = jugs::plan(p, strategy);
  Outcome out;
  out.result = {{"n", p.n}, {"m", p.m}, {"target", p.target}, {"strategy", a.strategy}};
  if (!found) {
    const auto g = jugs::gcd(p.n, p.m);
    out.exit_code = kExitInvalid;
    out.status = "invalid";
    out.result["achievable"] = false;
    out.counterexample = {{"gcd", g}, {"target", p.target}, {"remainder", p.target % g}};
    out.text = "not achievable: gcd(" + std::to_string(p.n) + ", " + std::to_string(p.m) +
               ") = " + std::to_string(g) + " does not divide " + std::to_string(p.target) + "\n";
    return out;
  }
  json steps = json::array();
  for (const auto& s : found->steps()) {
    steps.push_back({{"action", s.action == jugs::JugAction::Add ? "add" : "remove"},
                     {"capacity", s.capacity},
                     {"count", s.count}});
  }
  const auto final_amount = std::get<jugs::Volume>(jugs::simulate(*found, p.n, p.m));
  out.result["achievable"] = true;
  out.result["plan"] = steps;
  out.result["actions"] = found->length();
  out.result["final"] = final_amount;
  out.text = found->to_string() + "\ntotal: " + std::to_string(final_amount) + " (" +
             std::to_string(found->length()) + " actions)\n";
  return out;
}

// ---------------------------------------------------------------------------

Style parse_style(const std::string& s) {
  if (s == "ascii") return Style::Ascii;
  if (s == "unicode") return Style::Unicode;
  return Style::Spanish;
}

void write(const Outcome& o, const std::string& command, bool as_json, std::ostream& out) {
  if (as_json) {
    json envelope = {{"status", o.status},
                     {"command", command},
                     {"result", o.result},
                     {"counterexample", o.counterexample}};
    out << envelope.dump(2) << '\n';
  } else {
    out << o.text;
  }
}

const char* kFormulaHelp =
    "Formula syntax: atoms start uppercase (P, Q, Llueve). Operators, any style:\n"
    "  not: ¬ ! ~ no   and: y & ∧   or: ó o | ∨   implies: ⇒ -> =>   iff: ⇔ <-> <=>\n"
    "Precedence (tightest first): not, and, or, implies, iff; implies and iff\n"
    "group to the right.";

const char* kMonadicHelp =
    "Monadic syntax: \"forall x. P(x) -> Q(x)\", \"exists x. P(x) & ~Q(x)\"; also ∀ ∃.\n"
    "Same operators as formulas except iff; a quantifier's body extends as far\n"
    "right as possible.";

const char* kSyllogismHelp =
    "Forms: all:S:P (todo S es P), no:S:P (ningún S es P), some:S:P (algún S es P),\n"
    "some-not:S:P (algún S no es P). Validity is decided over every model of the\n"
    "three terms. --existential-import restricts models to those where all three\n"
    "terms are non-empty.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deduce: propositional logic, syllogisms and the water-jug problem", "deduce"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string style_name = "spanish";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--style", style_name, "Operator style for formulas in text output")
      ->check(CLI::IsMember({"ascii", "unicode", "spanish"}))
      ->capture_default_str();

  std::string command;
  std::function<Outcome()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
    sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };
  const auto style = [&] { return parse_style(style_name); };

  std::string formula;
  auto* table = app.add_subcommand("table", "Print the truth table of a formula");
  table->footer(kFormulaHelp);
  table->add_option("formula", formula, "Formula")->required();
  bind(table, "table", [&] { return cmd_table(formula, style()); });

  auto* classify_cmd = app.add_subcommand("classify", "Tautology, contradiction or contingent");
  classify_cmd->footer(kFormulaHelp);
  classify_cmd->add_option("formula", formula, "Formula")->required();
  bind(classify_cmd, "classify", [&] { return cmd_classify(formula); });

  std::string other;
  auto* equiv = app.add_subcommand("equiv", "Decide whether two formulas are equivalent");
  equiv->footer(kFormulaHelp);
  equiv->add_option("left", formula, "First formula")->required();
  equiv->add_option("right", other, "Second formula")->required();
  bind(equiv, "equiv", [&] { return cmd_equiv(formula, other); });

  std::string rule_name;
  auto* rules = app.add_subcommand("rules", "Named tautologies");
  rules->require_subcommand(1);
  auto* rules_list = rules->add_subcommand("list", "List the named tautologies");
  bind(rules_list, "rules list", [&] { return cmd_rules_list(style()); });
  auto* rules_show = rules->add_subcommand("show", "Show one named tautology");
  rules_show->add_option("name", rule_name, "Rule name (case-insensitive)")->required();
  bind(rules_show, "rules show", [&] { return cmd_rules_show(rule_name, style()); });
  auto* rules_verify = rules->add_subcommand("verify", "Check a named tautology by truth table");
  rules_verify->add_option("name", rule_name, "Rule name (case-insensitive)")->required();
  bind(rules_verify, "rules verify", [&] { return cmd_rules_verify(rule_name); });

  std::vector<std::string> premises;
  std::string conclusion;
  auto* entail = app.add_subcommand("entail", "Decide whether premises entail a conclusion");
  entail->footer(kFormulaHelp);
  entail->add_option("--premise", premises, "Premise (repeatable)");
  entail->add_option("--conclusion", conclusion, "Conclusion")->required();
  bind(entail, "entail", [&] { return cmd_entail(premises, conclusion); });

  bool existential_import = false;
  std::string mood;
  std::string major, minor, concl;
  auto* syllogism = app.add_subcommand("syllogism", "Aristotelian syllogisms");
  syllogism->footer(kSyllogismHelp);
  syllogism->require_subcommand(1);
  auto* syl_list = syllogism->add_subcommand("list", "List the named moods");
  bind(syl_list, "syllogism list", [&] { return cmd_syllogism_list(); });
  auto* syl_check = syllogism->add_subcommand("check", "Check a named mood");
  syl_check->footer(kSyllogismHelp);
  syl_check->add_option("name", mood, "Mood name (barbara, celarent, ...)")->required();
  syl_check->add_flag("--existential-import", existential_import,
                      "Only admit models where every term is non-empty");
  bind(syl_check, "syllogism check", [&] { return cmd_syllogism_check(mood, existential_import); });
  auto* syl_custom = syllogism->add_subcommand("custom", "Check a syllogism given as three forms");
  syl_custom->footer(kSyllogismHelp);
  syl_custom->add_option("major", major, "Major premise, e.g. all:M:B")->required();
  syl_custom->add_option("minor", minor, "Minor premise, e.g. all:A:M")->required();
  syl_custom->add_option("conclusion", concl, "Conclusion, e.g. all:A:B")->required();
  syl_custom->add_flag("--existential-import", existential_import,
                       "Only admit models where every term is non-empty");
  bind(syl_custom, "syllogism custom",
       [&] { return cmd_syllogism_custom(major, minor, concl, existential_import); });

  std::string monadic;
  auto* quant = app.add_subcommand("quant", "Quantified monadic formulas");
  quant->require_subcommand(1);
  auto* negate = quant->add_subcommand("negate", "Push a negation through the quantifiers");
  negate->footer(kMonadicHelp);
  negate->add_option("formula", monadic, "Closed monadic formula")->required();
  bind(negate, "quant negate", [&] { return cmd_quant_negate(monadic, style()); });

  JugArgs jug;
  auto* jugs_cmd = app.add_subcommand("jugs", "Two vessels and a marked container");
  jugs_cmd->require_subcommand(1);
  auto add_capacities = [&](CLI::App* sub) {
    sub->add_option("--n", jug.n, "First vessel capacity")->required();
    sub->add_option("--m", jug.m, "Second vessel capacity")->required();
  };
  auto* jugs_gcd = jugs_cmd->add_subcommand("gcd", "Greatest common divisor of the capacities");
  add_capacities(jugs_gcd);
  bind(jugs_gcd, "jugs gcd", [&] { return cmd_jugs_gcd(jug); });
  auto* jugs_bezout = jugs_cmd->add_subcommand("bezout", "Coefficients a, b with a*n + b*m = gcd");
  add_capacities(jugs_bezout);
  bind(jugs_bezout, "jugs bezout", [&] { return cmd_jugs_bezout(jug); });
  auto* jugs_amounts = jugs_cmd->add_subcommand("amounts", "Every achievable amount up to a limit");
  add_capacities(jugs_amounts);
  jugs_amounts->add_option("--limit", jug.limit, "Largest amount to list")->required();
  bind(jugs_amounts, "jugs amounts", [&] { return cmd_jugs_amounts(jug); });
  auto* jugs_plan = jugs_cmd->add_subcommand("plan", "Pouring plan that leaves the target amount");
  add_capacities(jugs_plan);
  jugs_plan->add_option("--target", jug.target, "Amount to leave in the container")->required();
  jugs_plan->add_option("--strategy", jug.strategy, "certificate or shortest")
      ->check(CLI::IsMember({"certificate", "shortest"}))
      ->capture_default_str();
  bind(jugs_plan, "jugs plan", [&] { return cmd_jugs_plan(jug); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool as_json = format == "json";
  auto fail = [&](const std::string& message, json detail) {
    err << "error: " << message << '\n';
    if (as_json) {
      Outcome o;
      o.exit_code = kExitUsage;
      o.status = "error";
      o.result = std::move(detail);
      o.result["message"] = message;
      write(o, command, true, out);
    }
    return kExitUsage;
  };

  try {
    const auto outcome = action();
    write(outcome, command, as_json, out);
    return outcome.exit_code;
  } catch (const ArgumentParseError& failure) {
    const auto& e = failure.error;
    const auto& input = failure.input;
    const auto& span = e.span();
    const std::string where = std::string(to_string(e.kind())) + " at " +
                              std::to_string(span.start) + ".." + std::to_string(span.end);
    err << "error: " << where << ": " << e.what() << '\n'
        << "  " << input << '\n'
        << "  " << std::string(span.start, ' ') << std::string(std::max<std::size_t>(1, span.end - span.start), '^')
        << '\n';
    if (as_json) {
      Outcome o;
      o.exit_code = kExitUsage;
      o.status = "error";
      o.result = {{"message", e.what()},
                  {"kind", to_string(e.kind())},
                  {"input", input},
                  {"span", {{"start", span.start}, {"end", span.end}}}};
      write(o, command, true, out);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    return fail(e.what(), json::object());
  } catch (const Error& e) {
    return fail(e.what(), json::object());
  }
}

}  // namespace deduce::cli
