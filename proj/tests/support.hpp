#pragma once

// Independent oracles and generators for the test suites. Nothing here calls the
// permutation tables or bit tricks of the library under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orient/solver.hpp"
#include "orient/tournament.hpp"

namespace oracle {

using orient::Arc;
using orient::Tournament;

inline std::set<Arc> arc_set(const Tournament& t) {
  std::set<Arc> out;
  for (int u = 1; u <= t.order(); ++u) {
    for (int v = 1; v <= t.order(); ++v) {
      if (u != v && t.beats(u, v)) out.insert({u, v});
    }
  }
  return out;
}

// Bitstring over pairs {i,j}, i<j, lexicographic, '1' meaning i->j.
inline std::string bitstring(int n, const std::set<Arc>& arcs) {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) s += arcs.count({i, j}) ? '1' : '0';
  }
  return s;
}

inline std::string min_bitstring(const Tournament& t) {
  const int n = t.order();
  const auto arcs = arc_set(t);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::string best;
  do {
    std::set<Arc> mapped;
    for (auto [u, v] : arcs) mapped.insert({perm[u - 1], perm[v - 1]});
    std::string s = bitstring(n, mapped);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Tournament& a, const Tournament& b) {
  return a.order() == b.order() && min_bitstring(a) == min_bitstring(b);
}

inline Tournament sub(const Tournament& t, const std::vector<int>& vertices) {
  std::vector<Arc> arcs;
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && t.beats(vertices[i], vertices[j])) arcs.push_back({i + 1, j + 1});
    }
  }
  return Tournament::from_arcs(k, arcs);
}

// Every vertex subset of each member's size, compared by brute-force isomorphism.
inline bool f_free(const Tournament& t, const std::vector<Tournament>& members) {
  const int n = t.order();
  for (const Tournament& m : members) {
    const int k = m.order();
    if (k > n) continue;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> vs;
      for (int v = 1; v <= n; ++v) {
        if (mask >> (v - 1) & 1U) vs.push_back(v);
      }
      if (isomorphic(sub(t, vs), m)) return false;
    }
  }
  return true;
}

// Per-pair vote as literally defined: count the inputs orienting i->j.
inline Tournament vote(bool minority, const Tournament& a, const Tournament& b, const Tournament& c) {
  std::vector<Arc> arcs;
  const int n = a.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int forward = a.beats(i, j) + b.beats(i, j) + c.beats(i, j);
      bool keep = minority ? (forward == 1 || forward == 3) : forward >= 2;
      arcs.push_back(keep ? Arc{i, j} : Arc{j, i});
    }
  }
  return Tournament::from_arcs(n, arcs);
}

inline Tournament random_tournament(int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1U << orient::pair_count(n)) - 1);
  return Tournament(n, n > 1 ? dist(rng) : 0U);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline orient::OrientationInstance random_graph(int vertices, double p, std::mt19937& rng) {
  orient::OrientationInstance inst;
  inst.vertex_count = vertices;
  std::bernoulli_distribution coin(p);
  for (int u = 1; u <= vertices; ++u) {
    for (int v = u + 1; v <= vertices; ++v) {
      if (coin(rng)) inst.edges.push_back({u, v});
    }
  }
  return inst;
}

// Distinct random vertices in random order.
inline std::vector<int> random_tuple(int vertices, int k, std::mt19937& rng) {
  std::vector<int> all(vertices);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

}  // namespace oracle
