#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orient/io.hpp"
#include "orient/minmaj.hpp"
#include "support.hpp"

using namespace orient;
namespace fig = orient::io::fig;

namespace {

Tournament make(int n, std::vector<Arc> arcs) { return Tournament::from_arcs(n, arcs); }

const TernaryOp kOps[] = {TernaryOp::Minority, TernaryOp::Majority};

// Reference scan over ordered triples of the set, counting everything that escapes.
std::size_t escaping_triples(const std::vector<Tournament>& s, TernaryOp op) {
  std::set<Tournament> members(s.begin(), s.end());
  std::size_t bad = 0;
  for (const auto& a : s) {
    for (const auto& b : s) {
      for (const auto& c : s) {
        bad += !members.count(oracle::vote(op == TernaryOp::Minority, a, b, c));
      }
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("apply on the majority-closed relation {a,b,c}") {
  CHECK(apply(TernaryOp::Minority, fig::fig2_a(), fig::fig2_b(), fig::fig2_c()) ==
        make(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(apply(TernaryOp::Majority, fig::fig2_a(), fig::fig2_b(), fig::fig2_c()) == fig::fig2_c());
  CHECK_THROWS_AS(apply(TernaryOp::Minority, fig::t4(), fig::cyclic3(), fig::cyclic3()), Error);
}

TEST_CASE("apply matches the per-pair vote, exhaustive at order 3") {
  auto all = enumerate_labeled(3);
  for (TernaryOp op : kOps) {
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& c : all) {
          CHECK(apply(op, a, b, c) == oracle::vote(op == TernaryOp::Minority, a, b, c));
        }
      }
    }
  }
}

TEST_CASE("bit-level equivalence on every bit triple") {
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      for (unsigned c = 0; c < 2; ++c) {
        unsigned ones = a + b + c;
        CHECK(apply_bits(TernaryOp::Minority, a, b, c) == (ones % 2));
        CHECK(apply_bits(TernaryOp::Majority, a, b, c) == (ones >= 2 ? 1U : 0U));
      }
    }
  }
}

TEST_CASE("repeated-argument identities up to order 4") {
  for (int n = 1; n <= 4; ++n) {
    auto all = enumerate_labeled(n);
    for (const auto& d : all) {
      CHECK(apply(TernaryOp::Minority, d, d, d) == d);
      CHECK(apply(TernaryOp::Majority, d, d, d) == d);
      for (const auto& e : all) {
        CHECK(apply(TernaryOp::Minority, d, d, e) == e);
        CHECK(apply(TernaryOp::Majority, d, d, e) == d);
      }
    }
  }
}

TEST_CASE("set_preserved") {
  SUBCASE("full sets are closed") {
    for (TernaryOp op : kOps) CHECK(set_preserved(enumerate_labeled(3), op).preserved);
  }
  SUBCASE("F-free 4-tournaments under T4 and TC4") {
    auto d = enumerate_f_free(4, fig::t4_tc4());
    CHECK(set_preserved(d, TernaryOp::Minority).preserved);
    auto maj = set_preserved(d, TernaryOp::Majority);
    REQUIRE_FALSE(maj.preserved);
    REQUIRE(maj.counterexample);
    const auto& ce = *maj.counterexample;
    CHECK(apply(TernaryOp::Majority, ce.triple[0], ce.triple[1], ce.triple[2]) == ce.result);
    CHECK(std::find(d.begin(), d.end(), ce.result) == d.end());
  }
  SUBCASE("small and degenerate sets") {
    CHECK(set_preserved(std::vector<Tournament>{}, TernaryOp::Minority).preserved);
    CHECK(set_preserved(std::vector{fig::cyclic3(), fig::cyclic3()}, TernaryOp::Minority).preserved);
    CHECK_THROWS_AS(set_preserved(std::vector{fig::cyclic3(), fig::t4()}, TernaryOp::Minority), Error);
  }
}

TEST_CASE("set_preserved agrees with the ordered-triple oracle and its serial reference") {
  std::mt19937 rng(2024);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 3 + rep % 2;
    auto all = enumerate_labeled(n);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(all.size(), 20))(rng));
    for (TernaryOp op : kOps) {
      auto par = set_preserved(all, op);
      auto ser = set_preserved_serial(all, op);
      CHECK(par.preserved == (escaping_triples(all, op) == 0));
      CHECK(par.preserved == ser.preserved);
      CHECK(par.preserved != par.counterexample.has_value());
      if (par.counterexample) {
        REQUIRE(ser.counterexample);
        CHECK(par.counterexample->triple == ser.counterexample->triple);
        const auto& t = par.counterexample->triple;
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
        CHECK(apply(op, t[0], t[1], t[2]) == par.counterexample->result);
        // Smallest failing triple.
        auto all_failing = failing_triples(all, op, 1);
        REQUIRE(all_failing.size() == 1);
        CHECK(all_failing.front().triple == t);
      }
    }
  }
}

TEST_CASE("relation_preserved") {
  const RelationRep f2 = fig::fig2_relation();
  CHECK(relation_preserved(f2, TernaryOp::Majority).preserved);
  auto mino = relation_preserved(f2, TernaryOp::Minority);
  REQUIRE(mino.counterexample);
  std::array<Tournament, 3> abc = {fig::fig2_a(), fig::fig2_b(), fig::fig2_c()};
  std::sort(abc.begin(), abc.end());
  CHECK(mino.counterexample->triple == abc);
  CHECK(mino.counterexample->result == make(3, {{1, 2}, {1, 3}, {2, 3}}));

  const RelationRep tt = fig::transitive_triples();
  auto tm = relation_preserved(tt, TernaryOp::Minority);
  REQUIRE(tm.counterexample);
  CHECK(tm.counterexample->result == make(3, {{2, 1}, {1, 3}, {3, 2}}));
  auto tj = relation_preserved(tt, TernaryOp::Majority);
  REQUIRE(tj.counterexample);
  CHECK_FALSE(is_transitive(tj.counterexample->result));
  // Every failing triple of the transitive triples is listed; 20 triples exist.
  CHECK(tj.candidates.size() == failing_triples(tt.tournaments, TernaryOp::Majority, 1000).size());
  CHECK(tj.candidates.size() <= 20);
}

TEST_CASE("f_free_preserved") {
  auto mino = f_free_preserved(fig::t4_tc4(), TernaryOp::Minority);
  CHECK(mino.preserved);
  REQUIRE(mino.arities.size() == 3);
  CHECK(mino.arities[0].order == 2);
  CHECK(mino.arities[2].set_size == 16);
  auto maj = f_free_preserved(fig::t4_tc4(), TernaryOp::Majority);
  CHECK_FALSE(maj.preserved);
  CHECK(maj.arities[0].verdict.preserved);
  CHECK(maj.arities[1].verdict.preserved);
  CHECK_FALSE(maj.arities[2].verdict.preserved);
  for (TernaryOp op : kOps) CHECK(f_free_preserved(ForbiddenSet(), op).preserved);
}

TEST_CASE("minority acts on the isomorphism types of C3- and C3+") {
  auto d = enumerate_f_free(4, fig::t4_tc4());
  auto type = [](const Tournament& t) { return oracle::isomorphic(t, fig::c3_plus()) ? 1 : 0; };
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      for (std::size_t k = j + 1; k < d.size(); ++k) {
        Tournament m = apply(TernaryOp::Minority, d[i], d[j], d[k]);
        CHECK(type(m) == (type(d[i]) ^ type(d[j]) ^ type(d[k])));
      }
    }
  }
}

TEST_CASE("majority probe") {
  CHECK(majority_empty_or_all_check(fig::t4_tc4()));
  CHECK(majority_empty_or_all_check(ForbiddenSet()));
  CHECK(majority_empty_or_all_check(ForbiddenSet({Tournament::transitive(2)})));
  CHECK(majority_empty_or_all_check(fig::cyclic3_t4()));
  auto probe = majority_probe(fig::t4_tc4());
  REQUIRE(probe.orders.size() == 3);
  const auto& four = probe.orders[2];
  CHECK(four.f_free == 16);
  CHECK_FALSE(four.f_free_set_closed);
  CHECK(four.seeds == 2);
  CHECK(four.seeds_escaping == 2);
  // Only the two 3-cycles survive; together they form a closed proper set.
  CHECK_FALSE(majority_empty_or_all_check(ForbiddenSet({Tournament::transitive(3)})));
}
