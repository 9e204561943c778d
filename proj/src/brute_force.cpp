#include <algorithm>
#include <numeric>

#include "orient/solver.hpp"

namespace orient {

std::optional<Assignment> brute_force_solve(const BooleanCSP& csp, const Limits& limits) {
  const int n = csp.variables;
  if (n > limits.brute_force_vars) {
    throw LimitExceeded("brute force refuses " + std::to_string(n) + " variables, bound is " +
                        std::to_string(limits.brute_force_vars));
  }
  for (const BoolConstraint& c : csp.constraints) {
    if (c.allowed.empty()) return std::nullopt;
  }

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const BoolConstraint& c : csp.constraints) {
    for (int v : c.scope) ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = i;

  // Constraint checked at the depth where its last scope variable gets assigned.
  std::vector<std::vector<std::size_t>> due(static_cast<std::size_t>(n) + 1);
  for (std::size_t c = 0; c < csp.constraints.size(); ++c) {
    int last = -1;
    for (int v : csp.constraints[c].scope) last = std::max(last, position[static_cast<std::size_t>(v)]);
    due[static_cast<std::size_t>(last + 1)].push_back(c);
  }
  auto consistent = [&](int depth, const Assignment& x) {
    for (std::size_t c : due[static_cast<std::size_t>(depth)]) {
      const BoolConstraint& bc = csp.constraints[c];
      if (!std::binary_search(bc.allowed.begin(), bc.allowed.end(), scope_value(bc, x))) return false;
    }
    return true;
  };

  Assignment x(static_cast<std::size_t>(n), 0);
  if (!consistent(0, x)) return std::nullopt;
  // choice[d] is the value tried at depth d: 0, 1, or 2 once both failed.
  std::vector<int> choice(static_cast<std::size_t>(n), -1);
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) return x;
    auto& ch = choice[static_cast<std::size_t>(depth)];
    ++ch;
    if (ch > 1) {
      ch = -1;
      x[static_cast<std::size_t>(order[static_cast<std::size_t>(depth)])] = 0;
      --depth;
      continue;
    }
    x[static_cast<std::size_t>(order[static_cast<std::size_t>(depth)])] = static_cast<std::uint8_t>(ch);
    if (consistent(depth + 1, x)) ++depth;
  }
  return std::nullopt;
}

}  // namespace orient
