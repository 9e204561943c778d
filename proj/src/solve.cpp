#include <algorithm>
#include <stdexcept>

#include "orient/solver.hpp"

namespace orient {

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Brute: return "brute";
    case Method::Affine: return "affine";
    case Method::TwoSat: return "2sat";
    case Method::Trivial: return "trivial";
  }
  return "?";
}

OrientResult trivial_solve(const OrientationInstance& inst, const ForbiddenSet& f,
                           const std::vector<RelationRep>& reps, const Classification& c) {
  if (!c.case1 && !c.case2) throw Error("trivial solver needs a case 1 or case 2 classification");
  (void)f;
  auto normalized = normalize(inst, reps);
  if (auto* unsat = std::get_if<Unsat>(&normalized)) return *unsat;
  const NormalizedInstance& ni = std::get<NormalizedInstance>(normalized);
  if (!c.case1) {
    const int n = *c.case2_bound;
    if (has_clique(ni, n + 1)) return Unsat{"graph contains a " + std::to_string(n + 1) + "-clique"};
  }
  // Orienting along increasing labels makes every clique transitive.
  Orientation o;
  o.arcs.assign(ni.edges.begin(), ni.edges.end());
  return o;
}

std::vector<RelationRep> effective_relations(const std::vector<RelationRep>& reps, const OrientationInstance& inst) {
  std::vector<RelationRep> out = reps;
  bool uses_arrow = !inst.pre_oriented.empty() ||
                    std::any_of(inst.constraints.begin(), inst.constraints.end(),
                                [](const Constraint& c) { return c.relation == kArrowRelation; });
  bool defined = std::any_of(reps.begin(), reps.end(), [](const RelationRep& r) { return r.name == kArrowRelation; });
  if (uses_arrow && !defined) out.push_back(arrow_relation());
  return out;
}

namespace {

SolveOutcome refused(Method route, std::string reason) {
  SolveOutcome out;
  out.status = SolveStatus::Refused;
  out.route = route;
  out.reason = std::move(reason);
  return out;
}

SolveOutcome unsat(Method route, std::string reason) {
  SolveOutcome out;
  out.status = SolveStatus::Unsat;
  out.route = route;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

SolveOutcome solve(const ForbiddenSet& f, const std::vector<RelationRep>& reps, const OrientationInstance& inst,
                   Method method, const Limits& limits) {
  const std::vector<RelationRep> relations = effective_relations(reps, inst);
  require_valid(f, relations);

  std::optional<Classification> classification;
  Method route = method;
  if (method == Method::Auto || method == Method::Trivial) {
    classification = classify(f, relations, limits);
  }
  if (method == Method::Auto) {
    if (classification->case1 || classification->case2) {
      route = Method::Trivial;
    } else if (classification->case3) {
      route = Method::Affine;
    } else if (classification->case4) {
      route = Method::TwoSat;
    } else {
      route = Method::Brute;
    }
  }

  auto finish = [&](SolveOutcome out) {
    out.classification = classification;
    if (out.status == SolveStatus::Sat) {
      VerifyReport report = verify(inst, f, relations, *out.orientation, limits);
      if (!report.ok) {
        throw std::logic_error("solver produced an orientation that fails verification: " + report.violations.front());
      }
    }
    return out;
  };

  if (route == Method::Trivial) {
    if (!classification->case1 && !classification->case2) {
      return finish(refused(route, "trivial solver applies only to case 1 or case 2, classification is " +
                                       to_string(classification->verdict)));
    }
    OrientResult r = trivial_solve(inst, f, relations, *classification);
    if (auto* u = std::get_if<Unsat>(&r)) return finish(unsat(route, u->reason));
    SolveOutcome out;
    out.status = SolveStatus::Sat;
    out.route = route;
    out.orientation = std::get<Orientation>(r);
    return finish(std::move(out));
  }

  auto normalized = normalize(inst, relations);
  if (auto* u = std::get_if<Unsat>(&normalized)) return finish(unsat(route, u->reason));
  const NormalizedInstance& ni = std::get<NormalizedInstance>(normalized);
  const BooleanCSP csp = compile(ni, f, relations, limits);

  std::optional<Assignment> x;
  switch (route) {
    case Method::Brute:
      if (csp.variables > limits.brute_force_vars) {
        return finish(refused(route, "instance has " + std::to_string(csp.variables) +
                                         " edge variables, brute-force bound is " +
                                         std::to_string(limits.brute_force_vars)));
      }
      x = brute_force_solve(csp, limits);
      break;
    case Method::Affine: {
      auto sys = affine_compile(csp);
      if (auto* bad = std::get_if<NotAffine>(&sys)) {
        const std::string msg = "constraint " + csp.constraints[bad->constraint].origin + " is not affine";
        if (method == Method::Auto) throw std::logic_error("minority-closed instance compiled badly: " + msg);
        return finish(refused(route, msg));
      }
      x = gf2_solve(std::get<ParitySystem>(sys));
      break;
    }
    case Method::TwoSat: {
      auto cnf = twosat_compile(csp, limits);
      if (auto* bad = std::get_if<NotBijunctive>(&cnf)) {
        const std::string msg = "constraint " + csp.constraints[bad->constraint].origin + " is not bijunctive";
        if (method == Method::Auto) throw std::logic_error("majority-closed instance compiled badly: " + msg);
        return finish(refused(route, msg));
      }
      x = twosat_solve(std::get<TwoCnf>(cnf));
      break;
    }
    default:
      throw std::logic_error("unhandled solve route");
  }
  if (!x) return finish(unsat(route, "no orientation satisfies the constraints"));
  SolveOutcome out;
  out.status = SolveStatus::Sat;
  out.route = route;
  out.orientation = decode(ni, *x);
  return finish(std::move(out));
}

}  // namespace orient
