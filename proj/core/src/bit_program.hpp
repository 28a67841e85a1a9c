#pragma once

#include <cstdint>
#include <vector>

#include "deduce/formula.hpp"

namespace deduce::detail {

// Postfix program that evaluates a formula over 64 consecutive truth-table
// rows at once. Row numbering matches TruthTable.
class BitProgram {
 public:
  BitProgram(const Formula& f, const std::vector<Atom>& order);

  std::size_t atom_count() const noexcept { return atom_count_; }
  std::uint64_t row_count() const noexcept { return std::uint64_t{1} << atom_count_; }
  std::uint64_t word_count() const noexcept { return (row_count() + 63) / 64; }
  // Bits of word w that correspond to real rows.
  std::uint64_t valid_mask(std::uint64_t word) const noexcept;

  // Bit j is set iff row 64*word + j evaluates to V.
  std::uint64_t run(std::uint64_t word) const;

 private:
  struct Instr {
    Connective op;
    std::uint32_t atom;
  };

  std::uint64_t column(std::uint32_t atom, std::uint64_t word) const noexcept;

  std::size_t atom_count_;
  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
};

}  // namespace deduce::detail
