#include "deduce/truth_table.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "bit_program.hpp"

namespace deduce {

namespace detail {

namespace {

// Within one 64-row word, the column of the atom whose row bit is p (p < 6).
constexpr std::array<std::uint64_t, 6> kLowColumns = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

BitProgram::BitProgram(const Formula& f, const std::vector<Atom>& order)
    : atom_count_(order.size()) {
  if (atom_count_ > kAtomLimit) throw TooManyAtoms(atom_count_, kAtomLimit);
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const Formula& g) -> void {
    switch (g.connective()) {
      case Connective::Atomic: {
        auto it = std::lower_bound(order.begin(), order.end(), g.atom());
        if (it == order.end() || *it != g.atom()) throw MissingAtom(g.atom().name());
        code_.push_back({Connective::Atomic, static_cast<std::uint32_t>(it - order.begin())});
        max_stack_ = std::max(max_stack_, ++depth);
        break;
      }
      case Connective::Not:
        self(self, g.operand());
        code_.push_back({Connective::Not, 0});
        break;
      default:
        self(self, g.left());
        self(self, g.right());
        code_.push_back({g.connective(), 0});
        --depth;
        break;
    }
  };
  emit(emit, f);
}

std::uint64_t BitProgram::valid_mask(std::uint64_t word) const noexcept {
  const auto rows = row_count();
  const auto first = word * 64;
  if (first + 64 <= rows) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (rows - first)) - 1;
}

std::uint64_t BitProgram::column(std::uint32_t atom, std::uint64_t word) const noexcept {
  const auto bit = atom_count_ - 1 - atom;
  if (bit < 6) return kLowColumns[bit];
  return ((word >> (bit - 6)) & 1U) ? 0 : ~std::uint64_t{0};
}

std::uint64_t BitProgram::run(std::uint64_t word) const {
  std::vector<std::uint64_t> stack;
  stack.reserve(max_stack_);
  for (const auto& ins : code_) {
    switch (ins.op) {
      case Connective::Atomic:
        stack.push_back(column(ins.atom, word));
        break;
      case Connective::Not:
        stack.back() = ~stack.back();
        break;
      default: {
        const auto rhs = stack.back();
        stack.pop_back();
        auto& lhs = stack.back();
        switch (ins.op) {
          case Connective::Or: lhs = lhs | rhs; break;
          case Connective::And: lhs = lhs & rhs; break;
          case Connective::Implies: lhs = ~lhs | rhs; break;
          case Connective::Iff: lhs = ~(lhs ^ rhs); break;
          default: break;
        }
      }
    }
  }
  return stack.back();
}

}  // namespace detail

namespace {

std::vector<Atom> checked_atoms(const Formula& f) {
  auto found = atoms(f);
  if (found.size() > kAtomLimit) throw TooManyAtoms(found.size(), kAtomLimit);
  return found;
}

Valuation valuation_of_row(const std::vector<Atom>& order, std::uint64_t row) {
  Valuation v;
  const auto n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace(order[i], to_truth(((row >> (n - 1 - i)) & 1U) == 0));
  }
  return v;
}

// First row whose value equals `want`.
std::optional<Valuation> first_row_with(const Formula& f, bool want) {
  const auto order = checked_atoms(f);
  const detail::BitProgram program(f, order);
  for (std::uint64_t w = 0; w < program.word_count(); ++w) {
    auto bits = program.run(w);
    if (!want) bits = ~bits;
    bits &= program.valid_mask(w);
    if (bits != 0) return valuation_of_row(order, w * 64 + std::countr_zero(bits));
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Contradiction: return "contradiction";
    case Classification::Contingent: return "contingent";
  }
  return "";
}

TruthValue TruthTable::atom_value(std::size_t row, std::size_t atom_index) const {
  if (row >= values_.size() || atom_index >= atoms_.size()) {
    throw InvalidArgument("truth table index out of range");
  }
  return to_truth(((row >> (atoms_.size() - 1 - atom_index)) & 1U) == 0);
}

Valuation TruthTable::valuation(std::size_t row) const {
  if (row >= values_.size()) throw InvalidArgument("truth table row out of range");
  return valuation_of_row(atoms_, row);
}

TruthTable truth_table(const Formula& f) { return truth_table(f, checked_atoms(f)); }

TruthTable truth_table(const Formula& f, std::vector<Atom> over) {
  if (!std::is_sorted(over.begin(), over.end()) ||
      std::adjacent_find(over.begin(), over.end()) != over.end()) {
    throw InvalidArgument("truth table atoms must be sorted and distinct");
  }
  const detail::BitProgram program(f, over);
  TruthTable table;
  table.atoms_ = std::move(over);
  table.values_.reserve(program.row_count());
  for (std::uint64_t w = 0; w < program.word_count(); ++w) {
    const auto bits = program.run(w);
    const auto rows = std::min<std::uint64_t>(64, program.row_count() - w * 64);
    for (std::uint64_t j = 0; j < rows; ++j) table.values_.push_back(to_truth((bits >> j) & 1U));
  }
  return table;
}

Classification classify(const Formula& f) {
  const auto order = checked_atoms(f);
  const detail::BitProgram program(f, order);
  bool seen_true = false;
  bool seen_false = false;
  for (std::uint64_t w = 0; w < program.word_count(); ++w) {
    const auto mask = program.valid_mask(w);
    const auto bits = program.run(w);
    seen_true = seen_true || (bits & mask) != 0;
    seen_false = seen_false || (~bits & mask) != 0;
    if (seen_true && seen_false) return Classification::Contingent;
  }
  return seen_true ? Classification::Tautology : Classification::Contradiction;
}

bool equivalent(const Formula& f, const Formula& g) {
  return classify(Formula::biconditional(f, g)) == Classification::Tautology;
}

std::optional<Valuation> first_falsifying(const Formula& f) { return first_row_with(f, false); }
std::optional<Valuation> first_satisfying(const Formula& f) { return first_row_with(f, true); }

}  // namespace deduce
