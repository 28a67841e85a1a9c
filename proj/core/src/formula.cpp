#include "deduce/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace deduce {

struct Formula::Node {
  Connective op;
  std::optional<Atom> atom;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t depth;
  std::size_t size;
};

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) throw InvalidAtom(name_);
}

bool Atom::is_valid_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto uc = [](char c) { return static_cast<unsigned char>(c); };
  if (!std::isupper(uc(name.front())) || uc(name.front()) >= 0x80) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return uc(c) < 0x80 && std::isalnum(uc(c)); });
}

std::optional<TruthValue> parse_truth_value(std::string_view text) noexcept {
  if (text == "V" || text == "1") return TruthValue::V;
  if (text == "F" || text == "0") return TruthValue::F;
  return std::nullopt;
}

Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::Atomic, std::move(a), std::nullopt, std::nullopt, 1, 1}));
}

Formula Formula::negation(Formula inner) {
  const auto depth = inner.depth() + 1;
  const auto size = inner.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::Not, std::nullopt, std::move(inner), std::nullopt, depth, size}));
}

Formula Formula::binary(Connective op, Formula left, Formula right) {
  if (op == Connective::Atomic || op == Connective::Not) {
    throw InvalidArgument("binary() requires a binary connective");
  }
  const auto depth = std::max(left.depth(), right.depth()) + 1;
  const auto size = left.size() + right.size() + 1;
  return Formula(std::make_shared<const Node>(
      Node{op, std::nullopt, std::move(left), std::move(right), depth, size}));
}

Formula Formula::disjunction(Formula l, Formula r) {
  return binary(Connective::Or, std::move(l), std::move(r));
}
Formula Formula::conjunction(Formula l, Formula r) {
  return binary(Connective::And, std::move(l), std::move(r));
}
Formula Formula::implication(Formula l, Formula r) {
  return binary(Connective::Implies, std::move(l), std::move(r));
}
Formula Formula::biconditional(Formula l, Formula r) {
  return binary(Connective::Iff, std::move(l), std::move(r));
}

Connective Formula::connective() const noexcept { return node_->op; }

bool Formula::is_binary() const noexcept {
  return node_->op != Connective::Atomic && node_->op != Connective::Not;
}

const Atom& Formula::atom() const {
  if (!node_->atom) throw InvalidArgument("atom() on a compound formula");
  return *node_->atom;
}

const Formula& Formula::operand() const {
  if (node_->op != Connective::Not) throw InvalidArgument("operand() on a non-negation");
  return *node_->left;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw InvalidArgument("left() on a non-binary formula");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (!is_binary()) throw InvalidArgument("right() on a non-binary formula");
  return *node_->right;
}

std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.size != y.size) return false;
  switch (x.op) {
    case Connective::Atomic:
      return *x.atom == *y.atom;
    case Connective::Not:
      return *x.left == *y.left;
    default:
      return *x.left == *y.left && *x.right == *y.right;
  }
}

TruthValue eval(const Formula& f, const Valuation& v) {
  switch (f.connective()) {
    case Connective::Atomic: {
      auto it = v.find(f.atom());
      if (it == v.end()) throw MissingAtom(f.atom().name());
      return it->second;
    }
    case Connective::Not:
      return !eval(f.operand(), v);
    case Connective::Or:
      return to_truth(to_bool(eval(f.left(), v)) || to_bool(eval(f.right(), v)));
    case Connective::And:
      return to_truth(to_bool(eval(f.left(), v)) && to_bool(eval(f.right(), v)));
    case Connective::Implies:
      return to_truth(!to_bool(eval(f.left(), v)) || to_bool(eval(f.right(), v)));
    case Connective::Iff:
      return to_truth(eval(f.left(), v) == eval(f.right(), v));
  }
  return TruthValue::F;
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  if (f.is_atomic()) {
    out.insert(f.atom());
  } else if (f.connective() == Connective::Not) {
    collect_atoms(f.operand(), out);
  } else {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

}  // namespace

std::vector<Atom> atoms(const Formula& f) {
  std::set<Atom> found;
  collect_atoms(f, found);
  return {found.begin(), found.end()};
}

Formula substitute(const Formula& f, const Substitution& s) {
  switch (f.connective()) {
    case Connective::Atomic: {
      auto it = s.find(f.atom());
      return it == s.end() ? f : it->second;
    }
    case Connective::Not:
      return Formula::negation(substitute(f.operand(), s));
    default:
      return Formula::binary(f.connective(), substitute(f.left(), s), substitute(f.right(), s));
  }
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) throw InvalidArgument("conjoin() of an empty list");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conjunction(acc, parts[i]);
  return acc;
}

}  // namespace deduce
