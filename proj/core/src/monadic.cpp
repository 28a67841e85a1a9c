#include "deduce/monadic.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace deduce {

struct MonadicFormula::Node {
  MonadicKind kind;
  std::string name;  // predicate symbol
  std::string var;   // applied or bound variable
  std::optional<MonadicFormula> left;
  std::optional<MonadicFormula> right;
  std::size_t depth;
};

MonadicFormula MonadicFormula::predicate(std::string pred, std::string var) {
  if (!Atom::is_valid_name(pred)) throw InvalidArgument("invalid predicate name '" + pred + "'");
  if (var.empty()) throw InvalidArgument("empty variable name");
  return MonadicFormula(std::make_shared<const Node>(
      Node{MonadicKind::Predicate, std::move(pred), std::move(var), std::nullopt, std::nullopt, 1}));
}

MonadicFormula MonadicFormula::negation(MonadicFormula inner) {
  const auto depth = inner.depth() + 1;
  return MonadicFormula(std::make_shared<const Node>(
      Node{MonadicKind::Not, {}, {}, std::move(inner), std::nullopt, depth}));
}

MonadicFormula MonadicFormula::binary(MonadicKind kind, MonadicFormula l, MonadicFormula r) {
  if (kind != MonadicKind::And && kind != MonadicKind::Or && kind != MonadicKind::Implies) {
    throw InvalidArgument("binary() requires and, or or implies");
  }
  const auto depth = std::max(l.depth(), r.depth()) + 1;
  return MonadicFormula(
      std::make_shared<const Node>(Node{kind, {}, {}, std::move(l), std::move(r), depth}));
}

MonadicFormula MonadicFormula::conjunction(MonadicFormula l, MonadicFormula r) {
  return binary(MonadicKind::And, std::move(l), std::move(r));
}
MonadicFormula MonadicFormula::disjunction(MonadicFormula l, MonadicFormula r) {
  return binary(MonadicKind::Or, std::move(l), std::move(r));
}
MonadicFormula MonadicFormula::implication(MonadicFormula l, MonadicFormula r) {
  return binary(MonadicKind::Implies, std::move(l), std::move(r));
}

MonadicFormula MonadicFormula::for_all(std::string var, MonadicFormula body) {
  if (var.empty()) throw InvalidArgument("empty variable name");
  const auto depth = body.depth() + 1;
  return MonadicFormula(std::make_shared<const Node>(
      Node{MonadicKind::ForAll, {}, std::move(var), std::move(body), std::nullopt, depth}));
}

MonadicFormula MonadicFormula::exists(std::string var, MonadicFormula body) {
  if (var.empty()) throw InvalidArgument("empty variable name");
  const auto depth = body.depth() + 1;
  return MonadicFormula(std::make_shared<const Node>(
      Node{MonadicKind::Exists, {}, std::move(var), std::move(body), std::nullopt, depth}));
}

MonadicKind MonadicFormula::kind() const noexcept { return node_->kind; }

bool MonadicFormula::is_binary() const noexcept {
  return node_->kind == MonadicKind::And || node_->kind == MonadicKind::Or ||
         node_->kind == MonadicKind::Implies;
}

bool MonadicFormula::is_quantifier() const noexcept {
  return node_->kind == MonadicKind::ForAll || node_->kind == MonadicKind::Exists;
}

const std::string& MonadicFormula::predicate() const {
  if (node_->kind != MonadicKind::Predicate) throw InvalidArgument("predicate() on a compound");
  return node_->name;
}

const std::string& MonadicFormula::variable() const {
  if (node_->kind != MonadicKind::Predicate && !is_quantifier()) {
    throw InvalidArgument("variable() on a connective");
  }
  return node_->var;
}

const MonadicFormula& MonadicFormula::operand() const {
  if (node_->kind != MonadicKind::Not && !is_quantifier()) {
    throw InvalidArgument("operand() needs a negation or quantifier");
  }
  return *node_->left;
}

const MonadicFormula& MonadicFormula::left() const {
  if (!is_binary()) throw InvalidArgument("left() on a non-binary formula");
  return *node_->left;
}

const MonadicFormula& MonadicFormula::right() const {
  if (!is_binary()) throw InvalidArgument("right() on a non-binary formula");
  return *node_->right;
}

std::size_t MonadicFormula::depth() const noexcept { return node_->depth; }

bool operator==(const MonadicFormula& a, const MonadicFormula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.depth != y.depth || x.name != y.name || x.var != y.var) return false;
  if (x.left.has_value() && !(*x.left == *y.left)) return false;
  if (x.right.has_value() && !(*x.right == *y.right)) return false;
  return true;
}

namespace {

bool closed_under(const MonadicFormula& f, std::vector<std::string>& bound) {
  switch (f.kind()) {
    case MonadicKind::Predicate:
      return std::find(bound.begin(), bound.end(), f.variable()) != bound.end();
    case MonadicKind::Not:
      return closed_under(f.operand(), bound);
    case MonadicKind::ForAll:
    case MonadicKind::Exists: {
      bound.push_back(f.variable());
      const bool ok = closed_under(f.operand(), bound);
      bound.pop_back();
      return ok;
    }
    default:
      return closed_under(f.left(), bound) && closed_under(f.right(), bound);
  }
}

void collect_predicates(const MonadicFormula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case MonadicKind::Predicate:
      out.insert(f.predicate());
      break;
    case MonadicKind::Not:
    case MonadicKind::ForAll:
    case MonadicKind::Exists:
      collect_predicates(f.operand(), out);
      break;
    default:
      collect_predicates(f.left(), out);
      collect_predicates(f.right(), out);
  }
}

// NNF of f when positive, of !f otherwise.
MonadicFormula nnf(const MonadicFormula& f, bool positive) {
  using MF = MonadicFormula;
  switch (f.kind()) {
    case MonadicKind::Predicate:
      return positive ? f : MF::negation(f);
    case MonadicKind::Not:
      return nnf(f.operand(), !positive);
    case MonadicKind::And: {
      auto l = nnf(f.left(), positive);
      auto r = nnf(f.right(), positive);
      return positive ? MF::conjunction(l, r) : MF::disjunction(l, r);
    }
    case MonadicKind::Or: {
      auto l = nnf(f.left(), positive);
      auto r = nnf(f.right(), positive);
      return positive ? MF::disjunction(l, r) : MF::conjunction(l, r);
    }
    case MonadicKind::Implies: {
      // a -> b is !a | b; its negation is a & !b.
      auto l = nnf(f.left(), !positive);
      auto r = nnf(f.right(), positive);
      return positive ? MF::disjunction(l, r) : MF::conjunction(l, r);
    }
    case MonadicKind::ForAll: {
      auto body = nnf(f.operand(), positive);
      return positive ? MF::for_all(f.variable(), body) : MF::exists(f.variable(), body);
    }
    case MonadicKind::Exists: {
      auto body = nnf(f.operand(), positive);
      return positive ? MF::exists(f.variable(), body) : MF::for_all(f.variable(), body);
    }
  }
  return f;
}

using Environment = std::map<std::string, std::size_t>;

bool evaluate(const MonadicFormula& f, const FiniteModel& m, Environment& env) {
  switch (f.kind()) {
    case MonadicKind::Predicate: {
      const auto& ext = m.extension(f.predicate());
      return ext.count(env.at(f.variable())) != 0;
    }
    case MonadicKind::Not:
      return !evaluate(f.operand(), m, env);
    case MonadicKind::And:
      return evaluate(f.left(), m, env) && evaluate(f.right(), m, env);
    case MonadicKind::Or:
      return evaluate(f.left(), m, env) || evaluate(f.right(), m, env);
    case MonadicKind::Implies:
      return !evaluate(f.left(), m, env) || evaluate(f.right(), m, env);
    case MonadicKind::ForAll:
    case MonadicKind::Exists: {
      const bool universal = f.kind() == MonadicKind::ForAll;
      const auto saved = env.find(f.variable()) == env.end()
                             ? std::nullopt
                             : std::optional<std::size_t>(env[f.variable()]);
      bool result = universal;
      for (std::size_t e = 0; e < m.universe_size && result == universal; ++e) {
        env[f.variable()] = e;
        result = evaluate(f.operand(), m, env);
      }
      if (saved) {
        env[f.variable()] = *saved;
      } else {
        env.erase(f.variable());
      }
      return result;
    }
  }
  return false;
}

}  // namespace

bool is_closed(const MonadicFormula& f) {
  std::vector<std::string> bound;
  return closed_under(f, bound);
}

bool is_negation_normal(const MonadicFormula& f) {
  switch (f.kind()) {
    case MonadicKind::Predicate:
      return true;
    case MonadicKind::Not:
      return f.operand().kind() == MonadicKind::Predicate;
    case MonadicKind::Implies:
      return false;
    case MonadicKind::ForAll:
    case MonadicKind::Exists:
      return is_negation_normal(f.operand());
    default:
      return is_negation_normal(f.left()) && is_negation_normal(f.right());
  }
}

std::set<std::string> predicates(const MonadicFormula& f) {
  std::set<std::string> out;
  collect_predicates(f, out);
  return out;
}

MonadicFormula negate_quantifiers(const MonadicFormula& f) { return nnf(f, false); }

MonadicFormula negation_normal_form(const MonadicFormula& f) { return nnf(f, true); }

bool eval_monadic(const MonadicFormula& f, const FiniteModel& m) {
  if (!is_closed(f)) throw InvalidArgument("cannot evaluate a formula with free variables");
  for (const auto& p : predicates(f)) m.extension(p);
  Environment env;
  return evaluate(f, m, env);
}

MonadicFormula translate(const CategoricalForm& form, const std::string& var) {
  using MF = MonadicFormula;
  auto s = MF::predicate(form.subject, var);
  auto p = MF::predicate(form.predicate, var);
  switch (form.kind) {
    case FormKind::UniversalAffirmative: return MF::for_all(var, MF::implication(s, p));
    case FormKind::UniversalNegative: return MF::for_all(var, MF::implication(s, MF::negation(p)));
    case FormKind::ParticularAffirmative: return MF::exists(var, MF::conjunction(s, p));
    case FormKind::ParticularNegative: return MF::exists(var, MF::conjunction(s, MF::negation(p)));
  }
  return s;
}

}  // namespace deduce
