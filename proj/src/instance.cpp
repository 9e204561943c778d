#include <algorithm>
#include <map>
#include <set>

#include "orient/solver.hpp"

namespace orient {

int NormalizedInstance::variable(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges.begin());
}

const RelationRep* find_relation(const std::vector<RelationRep>& reps, const std::string& name) {
  for (const RelationRep& rep : reps) {
    if (rep.name == name) return &rep;
  }
  if (name == kArrowRelation) {
    static const RelationRep arrow = arrow_relation();
    return &arrow;
  }
  return nullptr;
}

std::variant<NormalizedInstance, Unsat> normalize(const OrientationInstance& inst,
                                                  const std::vector<RelationRep>& reps) {
  if (inst.vertex_count < 0) throw Error("vertex count must be non-negative");
  auto check_label = [](int v) {
    if (v < 1) throw Error("vertex label " + std::to_string(v) + " is not positive");
  };

  std::vector<Constraint> constraints = inst.constraints;
  for (auto [u, v] : inst.pre_oriented) constraints.push_back({kArrowRelation, {u, v}});

  std::set<int> vertices;
  for (int v = 1; v <= inst.vertex_count; ++v) vertices.insert(v);
  std::set<Edge> edges;
  std::optional<Unsat> unsat;

  for (auto [u, v] : inst.edges) {
    check_label(u);
    check_label(v);
    vertices.insert(u);
    vertices.insert(v);
    if (u == v) {
      if (!unsat) unsat = Unsat{"loop at vertex " + std::to_string(u)};
      continue;
    }
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  for (const Constraint& c : constraints) {
    const RelationRep* rep = find_relation(reps, c.relation);
    if (rep == nullptr) throw Error("unknown relation '" + c.relation + "'");
    if (static_cast<int>(c.tuple.size()) != rep->arity) {
      throw Error("constraint on '" + c.relation + "' has " + std::to_string(c.tuple.size()) +
                  " vertices, relation arity is " + std::to_string(rep->arity));
    }
    for (int v : c.tuple) {
      check_label(v);
      vertices.insert(v);
    }
    std::vector<int> sorted = c.tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      if (!unsat) unsat = Unsat{"non-injective tuple on '" + c.relation + "'"};
      continue;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) edges.insert({sorted[i], sorted[j]});
    }
  }
  if (unsat) return *unsat;

  NormalizedInstance out;
  out.vertices.assign(vertices.begin(), vertices.end());
  out.edges.assign(edges.begin(), edges.end());
  out.constraints = std::move(constraints);
  return out;
}

namespace {

struct CliqueSearch {
  const NormalizedInstance& inst;
  std::map<int, std::vector<int>> higher;  // neighbours with a larger label, ascending
  int k = 0;
  std::size_t budget = 0;
  bool stop_at_first = false;
  std::vector<std::vector<int>> found;
  std::vector<int> current;

  explicit CliqueSearch(const NormalizedInstance& i) : inst(i) {
    for (int v : inst.vertices) higher[v];
    for (auto [u, v] : inst.edges) higher[u].push_back(v);
  }

  // Returns true to stop.
  bool extend(const std::vector<int>& candidates) {
    if (static_cast<int>(current.size()) == k) {
      if (found.size() >= budget) {
        throw LimitExceeded("clique enumeration exceeded budget of " + std::to_string(budget));
      }
      found.push_back(current);
      return stop_at_first;
    }
    const std::size_t need = static_cast<std::size_t>(k) - current.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates.size() - i < need) break;
      const int v = candidates[i];
      std::vector<int> next;
      const auto& nb = higher[v];
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(), nb.begin(),
                            nb.end(), std::back_inserter(next));
      current.push_back(v);
      bool stop = extend(next);
      current.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> cliques(const NormalizedInstance& inst, int k, std::size_t budget) {
  if (k < 1) return {};
  CliqueSearch search(inst);
  search.k = k;
  search.budget = budget;
  search.extend(inst.vertices);
  return std::move(search.found);
}

bool has_clique(const NormalizedInstance& inst, int k) {
  if (k < 1) return true;
  CliqueSearch search(inst);
  search.k = k;
  search.budget = 1;
  search.stop_at_first = true;
  search.extend(inst.vertices);
  return !search.found.empty();
}

std::uint32_t scope_value(const BoolConstraint& c, const Assignment& x) {
  std::uint32_t value = 0;
  for (int var : c.scope) value = (value << 1) | (x[static_cast<std::size_t>(var)] & 1U);
  return value;
}

bool satisfies(const BooleanCSP& csp, const Assignment& x) {
  if (static_cast<int>(x.size()) != csp.variables) return false;
  for (const BoolConstraint& c : csp.constraints) {
    if (!std::binary_search(c.allowed.begin(), c.allowed.end(), scope_value(c, x))) return false;
  }
  return true;
}

std::uint32_t encode_tuple(const Tournament& t, const std::vector<int>& tuple) {
  const int k = t.order();
  const int pairs = pair_count(k);
  std::uint32_t flip = 0;
  int p = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++p) {
      if (tuple[static_cast<std::size_t>(i)] > tuple[static_cast<std::size_t>(j)]) {
        flip |= std::uint32_t{1} << (pairs - 1 - p);
      }
    }
  }
  return t.code() ^ flip;
}

namespace {

std::vector<int> tuple_scope(const NormalizedInstance& inst, const std::vector<int>& tuple) {
  std::vector<int> scope;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) scope.push_back(inst.variable(tuple[i], tuple[j]));
  }
  return scope;
}

std::string describe(const std::vector<int>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
  return s + ")";
}

}  // namespace

BooleanCSP compile(const NormalizedInstance& inst, const ForbiddenSet& f, const std::vector<RelationRep>& reps,
                   const Limits& limits) {
  BooleanCSP csp;
  csp.variables = static_cast<int>(inst.edges.size());
  std::size_t listed = 0;
  for (int k : f.member_orders()) {
    auto found = cliques(inst, k, limits.clique_budget - std::min(listed, limits.clique_budget));
    listed += found.size();
    if (found.empty()) continue;
    // Cliques are ascending, so the F-free codes are already in the global convention.
    std::vector<std::uint32_t> allowed;
    for (const Tournament& t : enumerate_f_free(k, f, limits)) allowed.push_back(t.code());
    for (auto& clique : found) {
      csp.constraints.push_back({tuple_scope(inst, clique), allowed, "F-free clique " + describe(clique)});
    }
  }
  for (const Constraint& c : inst.constraints) {
    const RelationRep* rep = find_relation(reps, c.relation);
    if (rep == nullptr) throw Error("unknown relation '" + c.relation + "'");
    BoolConstraint bc{tuple_scope(inst, c.tuple), {}, c.relation + describe(c.tuple)};
    for (const Tournament& t : rep->tournaments) bc.allowed.push_back(encode_tuple(t, c.tuple));
    std::sort(bc.allowed.begin(), bc.allowed.end());
    csp.constraints.push_back(std::move(bc));
  }
  return csp;
}

Orientation decode(const NormalizedInstance& inst, const Assignment& x) {
  if (x.size() != inst.edges.size()) throw Error("assignment size does not match edge count");
  Orientation o;
  o.arcs.reserve(inst.edges.size());
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    auto [u, v] = inst.edges[i];
    o.arcs.push_back(x[i] ? Arc{u, v} : Arc{v, u});
  }
  std::sort(o.arcs.begin(), o.arcs.end());
  return o;
}

Assignment encode(const NormalizedInstance& inst, const Orientation& o) {
  Assignment x(inst.edges.size(), 0);
  std::vector<std::uint8_t> seen(inst.edges.size(), 0);
  for (auto [u, v] : o.arcs) {
    int var = inst.variable(u, v);
    if (var < 0) {
      throw Error("arc " + std::to_string(u) + "->" + std::to_string(v) + " is not an instance edge");
    }
    if (seen[var]++) throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} oriented twice");
    x[var] = u < v ? 1 : 0;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw Error("edge {" + std::to_string(inst.edges[i].first) + "," + std::to_string(inst.edges[i].second) +
                  "} not oriented");
    }
  }
  return x;
}

VerifyReport verify(const OrientationInstance& inst, const ForbiddenSet& f, const std::vector<RelationRep>& reps,
                    const Orientation& o, const Limits& limits) {
  VerifyReport report;
  auto normalized = normalize(inst, reps);
  if (auto* unsat = std::get_if<Unsat>(&normalized)) {
    report.ok = false;
    report.violations.push_back("instance has no orientation: " + unsat->reason);
    return report;
  }
  const NormalizedInstance& ni = std::get<NormalizedInstance>(normalized);
  encode(ni, o);  // coverage check

  std::set<Arc> arcs(o.arcs.begin(), o.arcs.end());
  auto induced_by = [&](const std::vector<int>& tuple) {
    std::vector<Arc> local;
    const int k = static_cast<int>(tuple.size());
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        bool forward = arcs.count({tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)]}) > 0;
        local.push_back(forward ? Arc{i + 1, j + 1} : Arc{j + 1, i + 1});
      }
    }
    return Tournament::from_arcs(k, local);
  };

  for (int k : f.member_orders()) {
    for (const auto& clique : cliques(ni, k, limits.clique_budget)) {
      Tournament t = induced_by(clique);
      if (auto member = f.match(t)) {
        report.ok = false;
        report.violations.push_back("clique " + describe(clique) + " induces forbidden tournament #" +
                                    std::to_string(*member + 1) + " " + f.members()[*member].to_string());
      }
    }
  }
  for (const Constraint& c : ni.constraints) {
    const RelationRep* rep = find_relation(reps, c.relation);
    Tournament t = induced_by(c.tuple);
    if (!rep->contains(t)) {
      report.ok = false;
      report.violations.push_back("tuple " + describe(c.tuple) + " induces " + t.to_string() + ", not in '" +
                                  c.relation + "'");
    }
  }
  return report;
}

}  // namespace orient
