#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "deduce/formula.hpp"

namespace deduce {

// Largest number of atoms a single table, classification or entailment query
// may range over (2^24 rows).
inline constexpr std::size_t kAtomLimit = 24;

enum class Classification { Tautology, Contradiction, Contingent };

std::string_view to_string(Classification c) noexcept;

// Exhaustive table of a formula over an ordered atom list. Row r assigns the
// i-th atom V exactly when bit (n-1-i) of r is clear, so the first atom varies
// slowest and V precedes F.
class TruthTable {
 public:
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t row_count() const noexcept { return values_.size(); }

  TruthValue value(std::size_t row) const { return values_.at(row); }
  TruthValue atom_value(std::size_t row, std::size_t atom_index) const;
  Valuation valuation(std::size_t row) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  friend TruthTable truth_table(const Formula&, std::vector<Atom>);

  std::vector<Atom> atoms_;
  std::vector<TruthValue> values_;
};

// Table over atoms(f). Throws TooManyAtoms above kAtomLimit.
TruthTable truth_table(const Formula& f);

// Table over a caller-chosen atom list, which must be sorted, duplicate-free
// and contain every atom of f.
TruthTable truth_table(const Formula& f, std::vector<Atom> over);

Classification classify(const Formula& f);

// True iff f <=> g is a tautology.
bool equivalent(const Formula& f, const Formula& g);

// First valuation in canonical row order under which f is F / V.
std::optional<Valuation> first_falsifying(const Formula& f);
std::optional<Valuation> first_satisfying(const Formula& f);

}  // namespace deduce
