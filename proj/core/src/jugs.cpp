#include "deduce/jugs.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

#include "deduce/errors.hpp"

namespace deduce::jugs {

void JugProblem::validate() const {
  if (n < 1 || n > kMaxCapacity || m < 1 || m > kMaxCapacity) {
    throw InvalidArgument("capacities must lie in 1.." + std::to_string(kMaxCapacity));
  }
  if (target < 1 || target > kMaxTarget) {
    throw InvalidArgument("target must lie in 1.." + std::to_string(kMaxTarget));
  }
}

Volume gcd(Volume n, Volume m) {
  if (n < 1 || m < 0) throw InvalidArgument("gcd requires n >= 1 and m >= 0");
  while (m != 0) {
    const auto r = n % m;
    n = m;
    m = r;
  }
  return n;
}

BezoutCertificate bezout(Volume n, Volume m) {
  if (n < 1 || m < 1) throw InvalidArgument("bezout requires positive arguments");
  // Invariant: old_r = old_s*n + old_t*m, r = s*n + t*m.
  Volume old_r = n, r = m;
  Volume old_s = 1, s = 0;
  Volume old_t = 0, t = 1;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  const Volume g = old_r;
  const Volume period = m / g;  // a is unique modulo m/g
  Volume a = old_s % period;
  if (a < 0) a += period;
  // (a - old_s) is a multiple of m/g, so b stays integral.
  const Volume b = old_t - ((a - old_s) / period) * (n / g);
  return {g, a, b};
}

bool is_achievable(const JugProblem& p) {
  p.validate();
  return p.target % gcd(p.n, p.m) == 0;
}

std::vector<Volume> achievable_amounts(Volume n, Volume m, Volume limit) {
  if (limit < 1) throw InvalidArgument("limit must be positive");
  JugProblem{n, m, 1}.validate();
  const auto g = gcd(n, m);
  if (limit / g > kMaxSearchStates) {
    throw CapacityError("more than " + std::to_string(kMaxSearchStates) +
                        " achievable amounts up to " + std::to_string(limit));
  }
  std::vector<Volume> out;
  out.reserve(static_cast<std::size_t>(limit / g));
  for (Volume v = g; v <= limit; v += g) out.push_back(v);
  return out;
}

void PourPlan::append(JugAction action, Volume capacity, Volume count) {
  if (count <= 0) return;
  if (!steps_.empty() && steps_.back().action == action && steps_.back().capacity == capacity) {
    steps_.back().count += count;
  } else {
    steps_.push_back({action, capacity, count});
  }
}

Volume PourPlan::length() const noexcept {
  Volume total = 0;
  for (const auto& s : steps_) total += s.count;
  return total;
}

std::vector<PourStep> PourPlan::expand() const {
  if (length() > kMaxSearchStates) throw CapacityError("plan too long to expand");
  std::vector<PourStep> out;
  for (const auto& s : steps_) {
    for (Volume i = 0; i < s.count; ++i) out.push_back({s.action, s.capacity, 1});
  }
  return out;
}

PourPlan PourPlan::scaled(Volume factor) const {
  PourPlan out;
  for (const auto& s : steps_) out.append(s.action, s.capacity * factor, s.count);
  return out;
}

std::string PourPlan::to_string() const {
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += "; ";
    out += s.action == JugAction::Add ? "add " : "remove ";
    out += std::to_string(s.capacity);
    if (s.count > 1) out += " ×" + std::to_string(s.count);
  }
  return out;
}

namespace {

// All additions first: the total rises to a*n (+ b*m when b > 0) and then
// falls by m per removal, ending at the target, so it never dips below 0.
PourPlan certificate_plan(const JugProblem& p) {
  const auto cert = bezout(p.n, p.m);
  const Volume k = p.target / cert.g;
  const Volume period = p.m / cert.g;
  // k*a can reach about 1e15; still far inside int64.
  const Volume a = (k % period) * cert.a % period;
  const Volume b = (p.target - a * p.n) / p.m;
  PourPlan out;
  out.append(JugAction::Add, p.n, a);
  if (b >= 0) {
    out.append(JugAction::Add, p.m, b);
  } else {
    out.append(JugAction::Remove, p.m, -b);
  }
  return out;
}

// Any multiset of actions reaching the target can be ordered so the running
// total stays in [0, max(target, n + m)]: add while the total is below the
// removal size, otherwise remove. Searching that range is therefore enough
// to find a minimum-length plan.
PourPlan shortest_plan(const JugProblem& p) {
  const Volume bound = std::max(p.target, p.n + p.m);
  if (bound + 1 > kMaxSearchStates) {
    throw CapacityError("shortest-plan search needs " + std::to_string(bound + 1) +
                        " states (limit " + std::to_string(kMaxSearchStates) +
                        "); use the certificate strategy");
  }
  const std::array<std::pair<JugAction, Volume>, 4> moves = {{
      {JugAction::Add, p.n},
      {JugAction::Add, p.m},
      {JugAction::Remove, p.n},
      {JugAction::Remove, p.m},
  }};
  constexpr std::int8_t kUnseen = -1;
  std::vector<std::int8_t> via(static_cast<std::size_t>(bound) + 1, kUnseen);
  std::vector<Volume> frontier{0};
  via[0] = 4;
  while (!frontier.empty() && via[p.target] == kUnseen) {
    std::vector<Volume> next;
    for (const auto total : frontier) {
      for (std::size_t i = 0; i < moves.size(); ++i) {
        const auto [action, cap] = moves[i];
        const Volume to = action == JugAction::Add ? total + cap : total - cap;
        if (to < 0 || to > bound || via[to] != kUnseen) continue;
        via[to] = static_cast<std::int8_t>(i);
        next.push_back(to);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<JugAction, Volume>> reversed;
  for (Volume at = p.target; at != 0;) {
    const auto [action, cap] = moves[via[at]];
    reversed.emplace_back(action, cap);
    at = action == JugAction::Add ? at - cap : at + cap;
  }
  PourPlan out;
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) out.append(it->first, it->second);
  return out;
}

}  // namespace

std::optional<PourPlan> plan(const JugProblem& p, PlanStrategy strategy) {
  if (!is_achievable(p)) return std::nullopt;
  return strategy == PlanStrategy::Certificate ? certificate_plan(p) : shortest_plan(p);
}

std::variant<Volume, PlanViolation> simulate(const PourPlan& plan, Volume n, Volume m) {
  Volume total = 0;
  std::size_t index = 0;
  for (const auto& step : plan.steps()) {
    if (step.capacity != n && step.capacity != m) {
      return PlanViolation{index, ViolationReason::ForeignCapacity};
    }
    if (step.action == JugAction::Add) {
      total += step.capacity * step.count;
    } else {
      const Volume possible = total / step.capacity;
      if (possible < step.count) {
        return PlanViolation{index + static_cast<std::size_t>(possible),
                             ViolationReason::NegativeAmount};
      }
      total -= step.capacity * step.count;
    }
    index += static_cast<std::size_t>(step.count);
  }
  return total;
}

}  // namespace deduce::jugs
