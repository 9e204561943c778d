#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orient/minmaj.hpp"
#include "orient/relation.hpp"
#include "orient/tournament.hpp"

namespace orient {

// Validation problems; empty means the inputs are usable.
std::vector<std::string> validate(const ForbiddenSet& f, const std::vector<RelationRep>& reps);
// Throws Error listing every problem.
void require_valid(const ForbiddenSet& f, const std::vector<RelationRep>& reps);

// For each rep, whether all arity! labeled transitive tournaments are members.
std::vector<bool> all_transitive_in_reps(const std::vector<RelationRep>& reps);

// std::nullopt means unbounded: every transitive tournament is F-free, which is decided
// at order bound() alone.
std::optional<int> largest_f_free_transitive(const ForbiddenSet& f);

bool no_f_free_tournament_of_order(const ForbiddenSet& f, int k, const Limits& limits = {});

enum class Verdict { PCase1, PCase2, PCase3, PCase4, NPComplete };

std::string to_string(Verdict v);

struct Case2Evidence {
  std::optional<int> largest_transitive;  // nullopt = unbounded
  std::optional<bool> none_free_above;    // only computed when largest_transitive is finite
};

struct PreservationEvidence {
  FFreePreservation f_free;
  std::vector<PreservationVerdict> reps;  // parallel to the input reps
  bool holds = false;
};

struct Classification {
  Verdict verdict = Verdict::NPComplete;
  std::optional<int> case2_bound;  // n of case 2 when it holds
  bool case1 = false;
  bool case2 = false;
  bool case3 = false;
  bool case4 = false;
  std::vector<Verdict> holding;  // every case that holds, in order 1..4

  std::vector<bool> reps_all_transitive;
  Case2Evidence transitive;
  PreservationEvidence minority;
  PreservationEvidence majority;
};

// Decides cases 1-4 of the finite criterion; all four are always evaluated. NP-complete
// exactly when none holds. Inputs must pass validate.
Classification classify(const ForbiddenSet& f, const std::vector<RelationRep>& reps,
                        const Limits& limits = {});

// Recomputes each case boolean from the recorded evidence alone.
bool replay_consistent(const Classification& c, const ForbiddenSet& f,
                       const std::vector<RelationRep>& reps);

enum class Novelty { CoreOneElement, CoreCliqueReduct, CoreHenson, CoreTournamentReduct, Novel };

std::string to_string(Novelty n);

struct NoveltyReport {
  Novelty status = Novelty::Novel;
  std::optional<int> henson_order;
  // Least order without F-free tournaments, searched up to largest transitive + 1.
  std::optional<int> least_empty_order;
  // False when the two readings of the Henson bound disagree on this input.
  bool readings_agree = true;
};

NoveltyReport novelty_report(const ForbiddenSet& f, const std::vector<RelationRep>& reps,
                             const Limits& limits = {});

}  // namespace orient
