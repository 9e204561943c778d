#include <algorithm>
#include <array>

#include "orient/solver.hpp"

namespace orient {

namespace {

bool literal_holds(std::uint32_t v, int w, int pos, bool positive) {
  bool bit = (v >> (w - 1 - pos)) & 1U;
  return bit == positive;
}

}  // namespace

std::variant<TwoCnf, NotBijunctive> twosat_compile(const BooleanCSP& csp, const Limits& limits) {
  TwoCnf cnf;
  cnf.variables = csp.variables;
  for (std::size_t ci = 0; ci < csp.constraints.size(); ++ci) {
    const BoolConstraint& c = csp.constraints[ci];
    const int w = static_cast<int>(c.scope.size());
    if (w > limits.twosat_width) {
      throw LimitExceeded("constraint scope of " + std::to_string(w) + " variables exceeds 2-clause width " +
                          std::to_string(limits.twosat_width));
    }
    if (c.allowed.empty()) {
      Literal pos{c.scope.front(), true};
      Literal neg{c.scope.front(), false};
      cnf.clauses.push_back({pos, pos});
      cnf.clauses.push_back({neg, neg});
      continue;
    }
    auto holds_everywhere = [&](int p1, bool s1, int p2, bool s2) {
      return std::all_of(c.allowed.begin(), c.allowed.end(), [&](std::uint32_t v) {
        return literal_holds(v, w, p1, s1) || literal_holds(v, w, p2, s2);
      });
    };

    // Local clauses as (position, sign) pairs; units first, then pairs not subsumed by a unit.
    struct Local {
      int p1;
      bool s1;
      int p2;
      bool s2;
    };
    std::vector<Local> local;
    std::vector<std::array<bool, 2>> unit(static_cast<std::size_t>(w), {false, false});
    for (int p = 0; p < w; ++p) {
      for (bool s : {false, true}) {
        if (holds_everywhere(p, s, p, s)) {
          unit[static_cast<std::size_t>(p)][s] = true;
          local.push_back({p, s, p, s});
        }
      }
    }
    for (int p1 = 0; p1 < w; ++p1) {
      for (int p2 = p1 + 1; p2 < w; ++p2) {
        for (bool s1 : {false, true}) {
          for (bool s2 : {false, true}) {
            if (unit[static_cast<std::size_t>(p1)][s1] || unit[static_cast<std::size_t>(p2)][s2]) continue;
            if (holds_everywhere(p1, s1, p2, s2)) local.push_back({p1, s1, p2, s2});
          }
        }
      }
    }

    // The clauses hold on every allowed vector, so equal counts mean equal solution sets.
    std::size_t models = 0;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << w); ++v) {
      bool ok = std::all_of(local.begin(), local.end(), [&](const Local& l) {
        return literal_holds(v, w, l.p1, l.s1) || literal_holds(v, w, l.p2, l.s2);
      });
      if (ok) ++models;
    }
    if (models != c.allowed.size()) return NotBijunctive{ci};

    for (const Local& l : local) {
      cnf.clauses.push_back({Literal{c.scope[static_cast<std::size_t>(l.p1)], l.s1},
                             Literal{c.scope[static_cast<std::size_t>(l.p2)], l.s2}});
    }
  }
  return cnf;
}

std::optional<Assignment> twosat_solve(const TwoCnf& cnf) {
  const int n = cnf.variables;
  // Node 2v is the negative literal of v and 2v+1 the positive one.
  auto node = [](const Literal& l) { return 2 * l.variable + (l.positive ? 1 : 0); };
  const int nodes = 2 * n;
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(nodes));
  for (const Clause& c : cnf.clauses) {
    if (c.a.variable < 0 || c.a.variable >= n || c.b.variable < 0 || c.b.variable >= n) {
      throw Error("clause names unknown variable");
    }
    const int a = node(c.a);
    const int b = node(c.b);
    succ[static_cast<std::size_t>(a ^ 1)].push_back(b);
    succ[static_cast<std::size_t>(b ^ 1)].push_back(a);
  }

  // Iterative Tarjan; components are numbered in completion order, sinks first.
  std::vector<int> index(static_cast<std::size_t>(nodes), -1);
  std::vector<int> low(static_cast<std::size_t>(nodes), 0);
  std::vector<int> comp(static_cast<std::size_t>(nodes), -1);
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(nodes), 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  int components = 0;
  for (int root = 0; root < nodes; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      const auto vi = static_cast<std::size_t>(v);
      if (edge == 0 && index[vi] < 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      if (edge < succ[vi].size()) {
        const int w = succ[vi][edge++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }

  Assignment x(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    const int neg = comp[static_cast<std::size_t>(2 * v)];
    const int pos = comp[static_cast<std::size_t>(2 * v + 1)];
    if (neg == pos) return std::nullopt;
    x[static_cast<std::size_t>(v)] = pos < neg ? 1 : 0;
  }
  return x;
}

}  // namespace orient
