#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orient/classifier.hpp"
#include "orient/io.hpp"
#include "support.hpp"

using namespace orient;
namespace fig = orient::io::fig;

namespace {

const Tournament kT2 = Tournament::transitive(2);

RelationRep full_rep(int arity) { return RelationRep("full", arity, enumerate_labeled(arity)); }

bool has_error(const std::vector<std::string>& errors, const std::string& needle) {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(fig::t4_tc4(), {fig::transitive_triples()}).empty());
  CHECK(has_error(validate(fig::t4_tc4(), {RelationRep("bad", 4, {fig::t4()})}), "not F-free"));
  CHECK_FALSE(validate(ForbiddenSet({kT2}), {arrow_relation()}).empty());
  CHECK(has_error(validate(ForbiddenSet(), {RelationRep("e", 3, {})}), "empty"));
  CHECK_FALSE(validate(ForbiddenSet(), {RelationRep("mixed", 3, {fig::cyclic3(), fig::t4()})}).empty());
  CHECK_FALSE(validate(ForbiddenSet(), {RelationRep("a1", 1, {Tournament(1, 0)})}).empty());
  CHECK_FALSE(validate(ForbiddenSet(), {fig::fig2_relation(), fig::fig2_relation()}).empty());
  CHECK_THROWS_AS(require_valid(fig::t4_tc4(), {RelationRep("bad", 4, {fig::t4()})}), Error);
}

TEST_CASE("all_transitive_in_reps") {
  auto r = all_transitive_in_reps({full_rep(3), fig::fig2_relation(), arrow_relation(), fig::transitive_triples()});
  CHECK(r == std::vector<bool>{true, false, false, true});
}

TEST_CASE("largest_f_free_transitive") {
  CHECK_FALSE(largest_f_free_transitive(ForbiddenSet()).has_value());
  CHECK(largest_f_free_transitive(fig::t4_tc4()) == 3);
  CHECK(largest_f_free_transitive(fig::cyclic3_t4()) == 3);
  CHECK(largest_f_free_transitive(ForbiddenSet({kT2})) == 1);
  CHECK_FALSE(largest_f_free_transitive(ForbiddenSet({fig::cyclic3()})).has_value());
  // Brute-force cross-check: transitive k-tournament free of members, scanning k upward.
  for (const ForbiddenSet& f : {fig::t4_tc4(), fig::cyclic3_t4(), ForbiddenSet({Tournament::transitive(3)})}) {
    int largest = 0;
    for (int k = 1; k <= f.bound(); ++k) {
      if (oracle::f_free(Tournament::transitive(k), f.members())) largest = k;
    }
    CHECK(largest_f_free_transitive(f) == largest);
  }
}

TEST_CASE("no_f_free_tournament_of_order") {
  CHECK_FALSE(no_f_free_tournament_of_order(fig::t4_tc4(), 4));
  CHECK(no_f_free_tournament_of_order(fig::cyclic3_t4(), 4));
  CHECK(no_f_free_tournament_of_order(ForbiddenSet({kT2}), 2));
  CHECK(no_f_free_tournament_of_order(fig::t4_tc4(), 5));
}

TEST_CASE("classify worked examples") {
  auto plain = classify(fig::t4_tc4(), {});
  CHECK(plain.verdict == Verdict::PCase3);
  CHECK(plain.case3);
  CHECK_FALSE(plain.case4);
  CHECK_FALSE(plain.case1);
  CHECK_FALSE(plain.case2);
  CHECK(to_string(plain.verdict) == "P, case 3");

  CHECK(classify(fig::t4_tc4(), {arrow_relation()}).verdict == Verdict::PCase3);

  auto np = classify(fig::t4_tc4(), {fig::transitive_triples()});
  CHECK(np.verdict == Verdict::NPComplete);
  CHECK(np.holding.empty());
  CHECK(to_string(np.verdict) == "NP-complete");
  REQUIRE(np.minority.reps.size() == 1);
  CHECK(np.minority.reps[0].counterexample.has_value());
  CHECK(np.majority.f_free.arities.back().verdict.counterexample.has_value());

  auto f2 = classify(ForbiddenSet(), {fig::fig2_relation()});
  CHECK(f2.verdict == Verdict::PCase4);
  CHECK_FALSE(f2.case3);
  CHECK(f2.holding == std::vector<Verdict>{Verdict::PCase4});

  auto c2 = classify(fig::cyclic3_t4(), {});
  CHECK(c2.verdict == Verdict::PCase2);
  CHECK(c2.case2_bound == 3);

  auto empty = classify(ForbiddenSet(), {});
  CHECK(empty.verdict == Verdict::PCase1);
  CHECK(empty.case3);
  CHECK(empty.case4);
  CHECK(empty.holding.size() == 3);
}

TEST_CASE("classification replays from evidence") {
  std::vector<std::pair<ForbiddenSet, std::vector<RelationRep>>> configs = {
      {fig::t4_tc4(), {}},
      {fig::t4_tc4(), {fig::transitive_triples()}},
      {ForbiddenSet(), {fig::fig2_relation()}},
      {fig::cyclic3_t4(), {}},
      {ForbiddenSet(), {}},
  };
  for (const auto& [f, reps] : configs) {
    auto c = classify(f, reps);
    CHECK(replay_consistent(c, f, reps));
    auto tampered = c;
    tampered.case3 = !tampered.case3;
    CHECK_FALSE(replay_consistent(tampered, f, reps));
  }
}

TEST_CASE("novelty_report") {
  CHECK(novelty_report(ForbiddenSet({kT2}), {}).status == Novelty::CoreOneElement);
  CHECK(novelty_report(ForbiddenSet(), {}).status == Novelty::CoreTournamentReduct);
  CHECK(novelty_report(fig::t4_tc4(), {}).status == Novelty::Novel);
  CHECK(novelty_report(ForbiddenSet({fig::cyclic3()}), {}).status == Novelty::CoreCliqueReduct);
  CHECK(novelty_report(ForbiddenSet({fig::cyclic3()}), {arrow_relation()}).status == Novelty::Novel);
  auto h = novelty_report(fig::cyclic3_t4(), {});
  CHECK(h.status == Novelty::CoreHenson);
  CHECK(h.henson_order == 4);
  CHECK(h.least_empty_order == 4);
  CHECK(h.readings_agree);
}

TEST_CASE("core patterns imply a polynomial verdict on random small inputs") {
  std::mt19937 rng(99);
  for (int round = 0; round < 120; ++round) {
    std::vector<Tournament> members;
    int count = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < count; ++i) {
      int n = std::uniform_int_distribution<int>(3, 4)(rng);
      members.push_back(oracle::random_tournament(n, rng));
    }
    ForbiddenSet f(members);
    std::vector<RelationRep> reps;
    if (round % 2) {
      int arity = std::uniform_int_distribution<int>(2, 3)(rng);
      auto free = enumerate_f_free(arity, f);
      std::vector<Tournament> pick;
      for (const auto& t : free) {
        if (rng() % 3 != 0) pick.push_back(t);
      }
      if (!pick.empty()) reps.emplace_back("r", arity, pick);
    }
    REQUIRE(validate(f, reps).empty());
    auto c = classify(f, reps);
    auto nov = novelty_report(f, reps);
    CHECK(replay_consistent(c, f, reps));
    CHECK(nov.readings_agree);
    if (nov.status == Novelty::CoreOneElement || nov.status == Novelty::CoreCliqueReduct ||
        nov.status == Novelty::CoreHenson) {
      CHECK(c.verdict != Verdict::NPComplete);
    }
  }
}

TEST_CASE("limits propagate") {
  Limits tight;
  tight.cap_bits = 3;
  CHECK_THROWS_AS(classify(fig::t4_tc4(), {}, tight), LimitExceeded);
}
