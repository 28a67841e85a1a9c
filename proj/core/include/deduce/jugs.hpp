#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace deduce::jugs {

// Whole units of volume; the unit itself never matters.
using Volume = std::int64_t;

inline constexpr Volume kMaxCapacity = 1'000'000;
inline constexpr Volume kMaxTarget = 1'000'000'000;
// Largest running-total range the shortest-plan search will allocate, and
// the most amounts achievable_amounts() will list.
inline constexpr Volume kMaxSearchStates = 10'000'000;

// Two vessels of capacities n and m, one unbounded marked container, and a
// target amount to leave in the container.
struct JugProblem {
  Volume n = 1;
  Volume m = 1;
  Volume target = 1;

  // Throws InvalidArgument outside 1..kMaxCapacity / 1..kMaxTarget.
  void validate() const;
};

// a*n + b*m == g == gcd(n, m).
struct BezoutCertificate {
  Volume g = 0;
  Volume a = 0;
  Volume b = 0;

  friend bool operator==(const BezoutCertificate&, const BezoutCertificate&) = default;
};

// Requires n >= 1, m >= 0.
Volume gcd(Volume n, Volume m);

// Extended Euclid, normalized so 0 <= a < m/g.
BezoutCertificate bezout(Volume n, Volume m);

bool is_achievable(const JugProblem& p);

// Positive multiples of gcd(n, m) up to limit, ascending. Throws
// CapacityError beyond kMaxSearchStates entries.
std::vector<Volume> achievable_amounts(Volume n, Volume m, Volume limit);

enum class JugAction {
  Add,     // pour a full vessel into the container
  Remove,  // fill a vessel from the container and discard it
};

// `count` consecutive identical actions.
struct PourStep {
  JugAction action;
  Volume capacity;
  Volume count;

  friend bool operator==(const PourStep&, const PourStep&) = default;
};

// Ordered action sequence, stored run-length encoded.
class PourPlan {
 public:
  PourPlan() = default;

  // Appends `count` actions, merging with the last run when identical.
  void append(JugAction action, Volume capacity, Volume count = 1);

  const std::vector<PourStep>& steps() const noexcept { return steps_; }
  // Number of individual actions.
  Volume length() const noexcept;
  // One PourStep of count 1 per action. Throws CapacityError beyond
  // kMaxSearchStates actions.
  std::vector<PourStep> expand() const;
  // Scaled copy: every capacity multiplied by factor.
  PourPlan scaled(Volume factor) const;

  // "add 3 ×4; remove 11"
  std::string to_string() const;

  friend bool operator==(const PourPlan&, const PourPlan&) = default;

 private:
  std::vector<PourStep> steps_;
};

enum class PlanStrategy {
  Certificate,  // closed form from the Bezout certificate
  Shortest,     // breadth-first search for a minimum number of actions
};

// std::nullopt when the target is not achievable. The shortest strategy
// throws CapacityError when its search range would exceed kMaxSearchStates.
std::optional<PourPlan> plan(const JugProblem& p, PlanStrategy strategy);

enum class ViolationReason { NegativeAmount, ForeignCapacity };

struct PlanViolation {
  std::size_t index;  // position of the offending action, counting individual actions
  ViolationReason reason;

  friend bool operator==(const PlanViolation&, const PlanViolation&) = default;
};

// Final amount in the container, or the first action that breaks the plan.
std::variant<Volume, PlanViolation> simulate(const PourPlan& plan, Volume n, Volume m);

}  // namespace deduce::jugs
