#include "deduce/categorical.hpp"

#include <algorithm>
#include <cctype>

#include "deduce/errors.hpp"
#include "deduce/formula.hpp"

namespace deduce {

const std::set<std::size_t>& FiniteModel::extension(const std::string& predicate) const {
  auto it = extensions.find(predicate);
  if (it == extensions.end()) throw UnknownPredicate(predicate);
  return it->second;
}

void FiniteModel::validate() const {
  for (const auto& [name, ext] : extensions) {
    if (!ext.empty() && *ext.rbegin() >= universe_size) {
      throw InvalidArgument("extension of " + name + " leaves the universe");
    }
  }
}

namespace {

struct KindSpelling {
  std::string_view tag;
  FormKind kind;
};

constexpr KindSpelling kKinds[] = {
    {"all", FormKind::UniversalAffirmative},
    {"no", FormKind::UniversalNegative},
    {"some", FormKind::ParticularAffirmative},
    {"some-not", FormKind::ParticularNegative},
};

}  // namespace

CategoricalForm parse_categorical(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw InvalidArgument("categorical form must look like all:S:P, got '" + std::string(text) +
                          "'");
  }
  const auto tag = text.substr(0, first);
  const std::string subject(text.substr(first + 1, second - first - 1));
  const std::string predicate(text.substr(second + 1));
  auto it = std::find_if(std::begin(kKinds), std::end(kKinds),
                         [&](const KindSpelling& k) { return k.tag == tag; });
  if (it == std::end(kKinds)) {
    throw InvalidArgument("unknown categorical quantity '" + std::string(tag) +
                          "' (expected all, no, some or some-not)");
  }
  for (const auto& term : {subject, predicate}) {
    if (!Atom::is_valid_name(term)) throw InvalidArgument("invalid term name '" + term + "'");
  }
  return {it->kind, subject, predicate};
}

std::string to_string(const CategoricalForm& form) {
  for (const auto& k : kKinds) {
    if (k.kind == form.kind) return std::string(k.tag) + ":" + form.subject + ":" + form.predicate;
  }
  return {};
}

std::string describe(const CategoricalForm& form) {
  const auto& s = form.subject;
  const auto& p = form.predicate;
  switch (form.kind) {
    case FormKind::UniversalAffirmative: return "todo " + s + " es " + p;
    case FormKind::UniversalNegative: return "ningún " + s + " es " + p;
    case FormKind::ParticularAffirmative: return "algún " + s + " es " + p;
    case FormKind::ParticularNegative: return "algún " + s + " no es " + p;
  }
  return {};
}

bool eval_categorical(const CategoricalForm& form, const FiniteModel& m) {
  const auto& s = m.extension(form.subject);
  const auto& p = m.extension(form.predicate);
  const bool some_in = std::any_of(s.begin(), s.end(), [&](auto x) { return p.count(x) != 0; });
  const bool some_out = std::any_of(s.begin(), s.end(), [&](auto x) { return p.count(x) == 0; });
  switch (form.kind) {
    case FormKind::UniversalAffirmative: return !some_out;
    case FormKind::UniversalNegative: return !some_in;
    case FormKind::ParticularAffirmative: return some_in;
    case FormKind::ParticularNegative: return some_out;
  }
  return false;
}

std::vector<std::string> Syllogism::terms() const {
  std::vector<std::string> out;
  for (const auto* f : {&major, &minor, &conclusion}) {
    out.push_back(f->subject);
    out.push_back(f->predicate);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Syllogism::validate() const {
  const auto n = terms().size();
  if (n != 3) {
    throw InvalidSyllogism("a syllogism needs exactly three distinct terms, found " +
                           std::to_string(n));
  }
}

namespace {

CategoricalForm all(std::string s, std::string p) {
  return {FormKind::UniversalAffirmative, std::move(s), std::move(p)};
}
CategoricalForm none(std::string s, std::string p) {
  return {FormKind::UniversalNegative, std::move(s), std::move(p)};
}
CategoricalForm some(std::string s, std::string p) {
  return {FormKind::ParticularAffirmative, std::move(s), std::move(p)};
}
CategoricalForm some_not(std::string s, std::string p) {
  return {FormKind::ParticularNegative, std::move(s), std::move(p)};
}

std::vector<NamedSyllogism> build_syllogisms() {
  return {
      {"barbara", "Bárbara", {all("M", "B"), all("A", "M"), all("A", "B")}},
      {"celarent", "Celarent", {none("M", "B"), all("A", "M"), none("A", "B")}},
      {"darii", "Darii", {all("M", "B"), some("A", "M"), some("A", "B")}},
      {"ferio", "Ferio", {none("M", "B"), some("A", "M"), some_not("A", "B")}},
      {"cesare", "Cesare", {none("B", "M"), all("A", "M"), none("A", "B")}},
      {"camestres", "Camestres", {all("B", "M"), none("A", "M"), none("A", "B")}},
      {"festino", "Festino", {none("B", "M"), some("A", "M"), some_not("A", "B")}},
      {"baroco", "Baroco", {all("B", "M"), some_not("A", "M"), some_not("A", "B")}},
      {"darapti", "Darapti", {all("M", "B"), all("M", "A"), some("A", "B")}},
      {"felapton", "Felapton", {none("M", "B"), all("M", "A"), some_not("A", "B")}},
  };
}

}  // namespace

const std::vector<NamedSyllogism>& syllogism_registry() {
  static const std::vector<NamedSyllogism> moods = build_syllogisms();
  return moods;
}

const NamedSyllogism& find_syllogism(std::string_view name) {
  const auto& moods = syllogism_registry();
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const auto key = lower(name);
  auto it = std::find_if(moods.begin(), moods.end(),
                         [&](const NamedSyllogism& s) { return s.name == key; });
  if (it == moods.end()) throw UnknownRule(std::string(name));
  return *it;
}

FiniteModel canonical_model(const std::vector<std::string>& terms, unsigned mask) {
  if (terms.size() != 3) throw InvalidArgument("canonical models need exactly three terms");
  FiniteModel m;
  for (const auto& t : terms) m.extensions[t];
  for (unsigned region = 0; region < 8; ++region) {
    if (((mask >> region) & 1U) == 0) continue;
    const auto element = m.universe_size++;
    for (unsigned i = 0; i < 3; ++i) {
      if ((region >> i) & 1U) m.extensions[terms[i]].insert(element);
    }
  }
  return m;
}

SyllogismVerdict valid_syllogism(const Syllogism& s, bool existential_import) {
  s.validate();
  const auto terms = s.terms();
  // Descending masks: the first counter-model found is the union of all.
  for (unsigned mask = 256; mask-- > 0;) {
    auto m = canonical_model(terms, mask);
    if (existential_import &&
        std::any_of(m.extensions.begin(), m.extensions.end(),
                    [](const auto& kv) { return kv.second.empty(); })) {
      continue;
    }
    if (eval_categorical(s.major, m) && eval_categorical(s.minor, m) &&
        !eval_categorical(s.conclusion, m)) {
      return {std::move(m)};
    }
  }
  return {};
}

}  // namespace deduce
