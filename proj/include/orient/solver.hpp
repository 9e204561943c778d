#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orient/classifier.hpp"
#include "orient/relation.hpp"
#include "orient/tournament.hpp"

namespace orient {

using Edge = std::pair<int, int>;  // unordered, stored with first < second

struct Constraint {
  std::string relation;
  std::vector<int> tuple;
};

// Undirected graph on positive vertex labels with labeled tuple constraints. Vertices
// 1..vertex_count always exist; larger labels mentioned anywhere are added.
struct OrientationInstance {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Constraint> constraints;
  std::vector<Arc> pre_oriented;  // each becomes a constraint on the arrow relation
};

struct Orientation {
  std::vector<Arc> arcs;  // one per edge, sorted
};

struct Unsat {
  std::string reason;
};

// Loop-free instance whose constrained tuples are injective and span cliques.
struct NormalizedInstance {
  std::vector<int> vertices;          // ascending labels
  std::vector<Edge> edges;            // ascending; edge i is boolean variable i
  std::vector<Constraint> constraints;

  // Variable of edge {u,v}, or -1 when absent.
  int variable(int u, int v) const;
  bool adjacent(int u, int v) const { return variable(u, v) >= 0; }
};

// Looks a relation up by name; the arrow relation is always available.
const RelationRep* find_relation(const std::vector<RelationRep>& reps, const std::string& name);

// Loops and repeated tuple vertices make the instance unsatisfiable. Throws Error on an
// unknown relation, an arity mismatch or a non-positive label.
std::variant<NormalizedInstance, Unsat> normalize(const OrientationInstance& inst,
                                                  const std::vector<RelationRep>& reps);

// All k-cliques as ascending vertex lists, lexicographic order. Throws LimitExceeded once
// more than `budget` cliques have been listed.
std::vector<std::vector<int>> cliques(const NormalizedInstance& inst, int k, std::size_t budget);
bool has_clique(const NormalizedInstance& inst, int k);

// One bit per edge variable; bit 1 on edge {u,v}, u<v, means u->v.
using Assignment = std::vector<std::uint8_t>;

// Scope position 0 is the most significant bit of each allowed vector.
struct BoolConstraint {
  std::vector<int> scope;
  std::vector<std::uint32_t> allowed;  // ascending
  std::string origin;                  // diagnostic label
};

struct BooleanCSP {
  int variables = 0;
  std::vector<BoolConstraint> constraints;
};

bool satisfies(const BooleanCSP& csp, const Assignment& x);
std::uint32_t scope_value(const BoolConstraint& c, const Assignment& x);

// Allowed vector of a tuple (v_1..v_k) inducing t, under the global edge convention.
std::uint32_t encode_tuple(const Tournament& t, const std::vector<int>& tuple);

BooleanCSP compile(const NormalizedInstance& inst, const ForbiddenSet& f, const std::vector<RelationRep>& reps,
                   const Limits& limits = {});

Orientation decode(const NormalizedInstance& inst, const Assignment& x);
// Throws Error unless o orients exactly the instance's edges.
Assignment encode(const NormalizedInstance& inst, const Orientation& o);

// Backtracking in descending constraint-degree order (ties by index), trying 0 before 1.
// Returns the first solution in that order. Throws LimitExceeded above brute_force_vars.
std::optional<Assignment> brute_force_solve(const BooleanCSP& csp, const Limits& limits = {});

struct ParityEquation {
  std::vector<int> variables;  // ascending; XOR of these equals rhs
  bool rhs = false;
};

struct ParitySystem {
  int variables = 0;
  std::vector<ParityEquation> equations;
};

struct NotAffine {
  std::size_t constraint = 0;
};

std::variant<ParitySystem, NotAffine> affine_compile(const BooleanCSP& csp);
// Free variables are set to 0.
std::optional<Assignment> gf2_solve(const ParitySystem& sys);

struct Literal {
  int variable = 0;
  bool positive = true;
  auto operator<=>(const Literal&) const = default;
};

// A unit clause repeats its literal.
struct Clause {
  Literal a;
  Literal b;
  auto operator<=>(const Clause&) const = default;
};

struct TwoCnf {
  int variables = 0;
  std::vector<Clause> clauses;
};

struct NotBijunctive {
  std::size_t constraint = 0;
};

// Throws LimitExceeded when a scope is wider than twosat_width.
std::variant<TwoCnf, NotBijunctive> twosat_compile(const BooleanCSP& csp, const Limits& limits = {});
std::optional<Assignment> twosat_solve(const TwoCnf& cnf);

using OrientResult = std::variant<Orientation, Unsat>;

// Case 1: satisfiable iff normalization succeeds, witness along increasing labels.
// Case 2: additionally unsatisfiable iff an (n+1)-clique exists. Throws Error unless
// the classification has case 1 or case 2.
OrientResult trivial_solve(const OrientationInstance& inst, const ForbiddenSet& f,
                           const std::vector<RelationRep>& reps, const Classification& c);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks every clique of a member order and every constrained tuple directly on the
// oriented graph. Throws Error when o does not cover the normalized edges exactly.
VerifyReport verify(const OrientationInstance& inst, const ForbiddenSet& f, const std::vector<RelationRep>& reps,
                    const Orientation& o, const Limits& limits = {});

enum class Method { Auto, Brute, Affine, TwoSat, Trivial };

std::string to_string(Method m);

enum class SolveStatus { Sat, Unsat, Refused };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsat;
  Method route = Method::Auto;  // pipeline that produced the answer
  std::optional<Orientation> orientation;
  std::string reason;
  std::optional<Classification> classification;
};

// Relations the instance actually needs: reps plus the arrow relation when pre-oriented
// edges use it and reps do not define it.
std::vector<RelationRep> effective_relations(const std::vector<RelationRep>& reps, const OrientationInstance& inst);

// Every satisfiable answer has passed verify.
SolveOutcome solve(const ForbiddenSet& f, const std::vector<RelationRep>& reps, const OrientationInstance& inst,
                   Method method = Method::Auto, const Limits& limits = {});

}  // namespace orient
