#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>

namespace deduce {

// Universe {0, ..., universe_size-1} with one extension per monadic predicate.
struct FiniteModel {
  std::size_t universe_size = 0;
  std::map<std::string, std::set<std::size_t>> extensions;

  // Throws UnknownPredicate.
  const std::set<std::size_t>& extension(const std::string& predicate) const;

  // Throws InvalidArgument if an extension leaves the universe.
  void validate() const;

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;
};

}  // namespace deduce
