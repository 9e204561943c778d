#include "orient/classifier.hpp"

#include <algorithm>
#include <set>

namespace orient {

std::vector<std::string> validate(const ForbiddenSet& f, const std::vector<RelationRep>& reps) {
  std::vector<std::string> errors;
  std::set<std::string> names;
  for (const RelationRep& rep : reps) {
    const std::string where = "relation '" + rep.name + "': ";
    if (!names.insert(rep.name).second) errors.push_back(where + "duplicate relation name");
    if (rep.arity < 2 || rep.arity > kMaxOrder) {
      errors.push_back(where + "arity " + std::to_string(rep.arity) + " outside 2.." +
                       std::to_string(kMaxOrder));
      continue;
    }
    if (rep.tournaments.empty()) errors.push_back(where + "empty relation");
    for (const Tournament& t : rep.tournaments) {
      if (t.order() != rep.arity) {
        errors.push_back(where + "member " + t.to_string() + " has order " + std::to_string(t.order()) +
                         ", expected " + std::to_string(rep.arity));
      } else if (auto hit = find_forbidden(t, f)) {
        errors.push_back(where + "member " + t.to_string() + " not F-free (contains forbidden tournament #" +
                         std::to_string(hit->member + 1) + ")");
      }
    }
  }
  return errors;
}

void require_valid(const ForbiddenSet& f, const std::vector<RelationRep>& reps) {
  auto errors = validate(f, reps);
  if (errors.empty()) return;
  std::string message = "invalid input:";
  for (const auto& e : errors) message += "\n  " + e;
  throw Error(message);
}

std::vector<bool> all_transitive_in_reps(const std::vector<RelationRep>& reps) {
  std::vector<bool> out;
  out.reserve(reps.size());
  for (const RelationRep& rep : reps) {
    bool all = true;
    for (const Tournament& t : transitive_tournaments(rep.arity)) {
      if (!rep.contains(t)) {
        all = false;
        break;
      }
    }
    out.push_back(all);
  }
  return out;
}

std::optional<int> largest_f_free_transitive(const ForbiddenSet& f) {
  const int bound = f.bound();
  if (is_f_free(Tournament::transitive(bound), f)) return std::nullopt;
  for (int n = bound - 1; n >= 1; --n) {
    if (is_f_free(Tournament::transitive(n), f)) return n;
  }
  return 1;
}

bool no_f_free_tournament_of_order(const ForbiddenSet& f, int k, const Limits& limits) {
  bool none = true;
  check_enumeration_cap(k, limits);
  const std::uint64_t total = std::uint64_t{1} << pair_count(k);
  for (std::uint64_t code = 0; code < total && none; ++code) {
    if (is_f_free(Tournament(k, static_cast<std::uint32_t>(code)), f)) none = false;
  }
  return none;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PCase1: return "P, case 1";
    case Verdict::PCase2: return "P, case 2";
    case Verdict::PCase3: return "P, case 3";
    case Verdict::PCase4: return "P, case 4";
    case Verdict::NPComplete: return "NP-complete";
  }
  return "?";
}

namespace {

PreservationEvidence preservation(const ForbiddenSet& f, const std::vector<RelationRep>& reps, TernaryOp op,
                                  const Limits& limits) {
  PreservationEvidence out;
  out.f_free = f_free_preserved(f, op, limits);
  out.holds = out.f_free.preserved;
  for (const RelationRep& rep : reps) {
    out.reps.push_back(relation_preserved(rep, op, limits.evidence_limit));
    out.holds = out.holds && out.reps.back().preserved;
  }
  return out;
}

bool all_of(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

Classification classify(const ForbiddenSet& f, const std::vector<RelationRep>& reps, const Limits& limits) {
  Classification c;
  c.reps_all_transitive = all_transitive_in_reps(reps);
  const bool reps_ok = all_of(c.reps_all_transitive);

  c.transitive.largest_transitive = largest_f_free_transitive(f);
  if (c.transitive.largest_transitive) {
    // Any tournament on more than n+1 vertices contains one on n+1, and n+1 <= bound().
    c.transitive.none_free_above = no_f_free_tournament_of_order(f, *c.transitive.largest_transitive + 1, limits);
  }
  c.case1 = !c.transitive.largest_transitive && reps_ok;
  c.case2 = c.transitive.largest_transitive && *c.transitive.none_free_above && reps_ok;
  if (c.case2) c.case2_bound = c.transitive.largest_transitive;

  c.minority = preservation(f, reps, TernaryOp::Minority, limits);
  c.majority = preservation(f, reps, TernaryOp::Majority, limits);
  c.case3 = c.minority.holds;
  c.case4 = c.majority.holds;

  if (c.case1) c.holding.push_back(Verdict::PCase1);
  if (c.case2) c.holding.push_back(Verdict::PCase2);
  if (c.case3) c.holding.push_back(Verdict::PCase3);
  if (c.case4) c.holding.push_back(Verdict::PCase4);
  c.verdict = c.holding.empty() ? Verdict::NPComplete : c.holding.front();
  return c;
}

namespace {

bool replay_counterexample(const PreservationVerdict& v, TernaryOp op, auto&& in_set) {
  if (v.preserved) return !v.counterexample.has_value();
  if (!v.counterexample) return false;
  auto check = [&](const Counterexample& ce) {
    const auto& [a, b, c] = ce.triple;
    if (!(a < b && b < c)) return false;
    if (!in_set(a) || !in_set(b) || !in_set(c)) return false;
    return apply(op, a, b, c) == ce.result && !in_set(ce.result);
  };
  if (!check(*v.counterexample)) return false;
  return std::all_of(v.candidates.begin(), v.candidates.end(), check);
}

bool replay_preservation(const PreservationEvidence& e, const ForbiddenSet& f,
                         const std::vector<RelationRep>& reps, TernaryOp op) {
  if (e.reps.size() != reps.size()) return false;
  bool holds = e.f_free.preserved;
  bool f_free_all = true;
  for (const ArityVerdict& a : e.f_free.arities) {
    f_free_all = f_free_all && a.verdict.preserved;
    auto in_set = [&](const Tournament& t) { return t.order() == a.order && is_f_free(t, f); };
    if (!replay_counterexample(a.verdict, op, in_set)) return false;
  }
  if (f_free_all != e.f_free.preserved) return false;
  if (static_cast<int>(e.f_free.arities.size()) != std::max(0, f.bound() - 1)) return false;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    holds = holds && e.reps[i].preserved;
    auto in_set = [&](const Tournament& t) { return reps[i].contains(t); };
    if (!replay_counterexample(e.reps[i], op, in_set)) return false;
  }
  return holds == e.holds;
}

}  // namespace

bool replay_consistent(const Classification& c, const ForbiddenSet& f, const std::vector<RelationRep>& reps) {
  if (c.reps_all_transitive.size() != reps.size()) return false;
  const bool reps_ok = all_of(c.reps_all_transitive);
  const bool case1 = !c.transitive.largest_transitive && reps_ok;
  const bool case2 = c.transitive.largest_transitive && c.transitive.none_free_above.value_or(false) && reps_ok;
  if (case1 != c.case1 || case2 != c.case2) return false;
  if (c.case2 && c.case2_bound != c.transitive.largest_transitive) return false;
  if (!replay_preservation(c.minority, f, reps, TernaryOp::Minority)) return false;
  if (!replay_preservation(c.majority, f, reps, TernaryOp::Majority)) return false;
  if (c.minority.holds != c.case3 || c.majority.holds != c.case4) return false;
  std::vector<Verdict> holding;
  if (case1) holding.push_back(Verdict::PCase1);
  if (case2) holding.push_back(Verdict::PCase2);
  if (c.case3) holding.push_back(Verdict::PCase3);
  if (c.case4) holding.push_back(Verdict::PCase4);
  if (holding != c.holding) return false;
  return c.verdict == (holding.empty() ? Verdict::NPComplete : holding.front());
}

std::string to_string(Novelty n) {
  switch (n) {
    case Novelty::CoreOneElement: return "one-element core";
    case Novelty::CoreCliqueReduct: return "clique reduct";
    case Novelty::CoreHenson: return "Henson graph reduct";
    case Novelty::CoreTournamentReduct: return "tournament reduct";
    case Novelty::Novel: return "novel";
  }
  return "?";
}

NoveltyReport novelty_report(const ForbiddenSet& f, const std::vector<RelationRep>& reps, const Limits& limits) {
  NoveltyReport report;
  const bool reps_ok = all_of(all_transitive_in_reps(reps));
  const std::optional<int> largest = largest_f_free_transitive(f);

  if (largest) {
    for (int k = 2; k <= *largest + 1; ++k) {
      if (no_f_free_tournament_of_order(f, k, limits)) {
        report.least_empty_order = k;
        break;
      }
    }
  }

  if (f.has_order(2)) {
    report.status = Novelty::CoreOneElement;
  } else if (f.empty()) {
    report.status = Novelty::CoreTournamentReduct;
  } else if (!largest && reps_ok) {
    report.status = Novelty::CoreCliqueReduct;
  } else if (largest && *largest >= 2 && reps_ok) {
    // Transitive tournaments below n = largest+1 are F-free and T_n is not, so n is the
    // only candidate; no F-free tournament of order >= n is decided at order n.
    const int n = *largest + 1;
    const bool bound_reading = no_f_free_tournament_of_order(f, n, limits);
    const bool least_reading = report.least_empty_order == n;
    report.readings_agree = bound_reading == least_reading;
    if (bound_reading) {
      report.status = Novelty::CoreHenson;
      report.henson_order = n;
    }
  }
  return report;
}

}  // namespace orient
