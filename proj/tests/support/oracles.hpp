#pragma once

// Independent reference implementations used only by tests. None of these
// call into the code paths they are used to check: truth values come from
// the recursive eval(), models are enumerated element by element, and jug
// reachability is a plain BFS with its own bound.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "deduce/categorical.hpp"
#include "deduce/formula.hpp"
#include "deduce/monadic.hpp"

namespace deduce::testkit {

inline std::vector<Atom> union_atoms(const std::vector<Formula>& fs) {
  std::set<Atom> all;
  for (const auto& f : fs) {
    for (auto& a : atoms(f)) all.insert(a);
  }
  return {all.begin(), all.end()};
}

// Every valuation of `order`, first atom slowest, V before F.
inline std::vector<Valuation> all_valuations(const std::vector<Atom>& order) {
  std::vector<Valuation> out;
  const std::uint64_t rows = std::uint64_t{1} << order.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    Valuation v;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const bool falsy = (r >> (order.size() - 1 - i)) & 1U;
      v.emplace(order[i], falsy ? TruthValue::F : TruthValue::V);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Row-by-row comparison over the joint atom set.
inline bool same_table(const Formula& f, const Formula& g) {
  for (const auto& v : all_valuations(union_atoms({f, g}))) {
    if (eval(f, v) != eval(g, v)) return false;
  }
  return true;
}

inline bool brute_is_tautology(const Formula& f) {
  for (const auto& v : all_valuations(atoms(f))) {
    if (eval(f, v) == TruthValue::F) return false;
  }
  return true;
}

// First valuation (canonical order over the joint atoms) making every
// premise V and the conclusion F.
inline std::optional<Valuation> brute_countervaluation(const std::vector<Formula>& premises,
                                                       const Formula& conclusion) {
  auto all = premises;
  all.push_back(conclusion);
  for (const auto& v : all_valuations(union_atoms(all))) {
    const bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                           [&](const Formula& p) { return eval(p, v) == TruthValue::V; });
    if (premises_hold && eval(conclusion, v) == TruthValue::F) return v;
  }
  return std::nullopt;
}

// Calls fn(model) for every model over `predicates` with universe size
// 0..max_size: each element independently picks its set of predicates.
template <typename Fn>
void for_each_model(const std::vector<std::string>& predicates, std::size_t max_size, Fn&& fn) {
  const std::size_t choices = std::size_t{1} << predicates.size();
  for (std::size_t size = 0; size <= max_size; ++size) {
    std::vector<std::size_t> membership(size, 0);
    for (;;) {
      FiniteModel m;
      m.universe_size = size;
      for (const auto& p : predicates) m.extensions[p];
      for (std::size_t e = 0; e < size; ++e) {
        for (std::size_t i = 0; i < predicates.size(); ++i) {
          if ((membership[e] >> i) & 1U) m.extensions[predicates[i]].insert(e);
        }
      }
      fn(m);
      std::size_t k = 0;
      while (k < size && ++membership[k] == choices) membership[k++] = 0;
      if (k == size) break;
    }
  }
}

inline bool naive_syllogism_valid(const Syllogism& s, bool existential_import, std::size_t max_size) {
  bool valid = true;
  for_each_model(s.terms(), max_size, [&](const FiniteModel& m) {
    if (!valid) return;
    if (existential_import) {
      for (const auto& [name, ext] : m.extensions) {
        if (ext.empty()) return;
      }
    }
    if (eval_categorical(s.major, m) && eval_categorical(s.minor, m) &&
        !eval_categorical(s.conclusion, m)) {
      valid = false;
    }
  });
  return valid;
}

// BFS over container totals in [0, bound]. Returns the fewest actions to
// reach `target`, or nullopt.
inline std::optional<std::int64_t> jug_bfs_distance(std::int64_t n, std::int64_t m, std::int64_t target,
                                                    std::int64_t bound) {
  std::vector<std::int64_t> dist(static_cast<std::size_t>(bound) + 1, -1);
  std::deque<std::int64_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const auto at = queue.front();
    queue.pop_front();
    if (at == target) return dist[at];
    for (const auto delta : {n, m, -n, -m}) {
      const auto to = at + delta;
      if (to < 0 || to > bound || dist[to] >= 0) continue;
      dist[to] = dist[at] + 1;
      queue.push_back(to);
    }
  }
  return std::nullopt;
}

// min |x| + |y| over integers with x*n + y*m == t, by direct search over x.
inline std::optional<std::int64_t> min_action_count(std::int64_t n, std::int64_t m, std::int64_t t,
                                                    std::int64_t range) {
  std::optional<std::int64_t> best;
  for (std::int64_t x = -range; x <= range; ++x) {
    const auto rest = t - x * n;
    if (rest % m != 0) continue;
    const auto cost = std::llabs(x) + std::llabs(rest / m);
    if (!best || cost < *best) best = cost;
  }
  return best;
}

}  // namespace deduce::testkit
