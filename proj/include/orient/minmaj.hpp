#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orient/relation.hpp"
#include "orient/tournament.hpp"

namespace orient {

enum class TernaryOp { Minority, Majority };

std::string_view to_string(TernaryOp op);

// Arcwise vote on codes of a common order: minority is XOR, majority is 2-of-3.
constexpr std::uint32_t apply_bits(TernaryOp op, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return op == TernaryOp::Minority ? (a ^ b ^ c) : ((a & b) | (a & c) | (b & c));
}

// Per pair, minority keeps the orientation occurring an odd number of times and
// majority the one occurring at least twice. Throws Error on order mismatch.
Tournament apply(TernaryOp op, const Tournament& t1, const Tournament& t2, const Tournament& t3);

struct Counterexample {
  std::array<Tournament, 3> triple;  // ascending code order
  Tournament result;                 // apply(op, triple...), outside the checked set
};

struct PreservationVerdict {
  bool preserved = true;
  std::optional<Counterexample> counterexample;  // smallest failing triple
  std::vector<Counterexample> candidates;        // further failing triples, when collected
};

// Scans unordered triples of distinct elements. The set is treated as a set: duplicates
// are dropped. Throws Error when elements have different orders. The reported
// counterexample is the lexicographically smallest failing triple of ascending codes,
// independently of thread count.
PreservationVerdict set_preserved(std::span<const Tournament> set, TernaryOp op);
PreservationVerdict set_preserved_serial(std::span<const Tournament> set, TernaryOp op);

// Up to `limit` failing triples in ascending order.
std::vector<Counterexample> failing_triples(std::span<const Tournament> set, TernaryOp op,
                                            std::size_t limit);

// set_preserved on the relation's tournaments; `candidates` holds up to `evidence_limit`
// failing triples.
PreservationVerdict relation_preserved(const RelationRep& rep, TernaryOp op,
                                       std::size_t evidence_limit = 256);

struct ArityVerdict {
  int order = 0;
  std::size_t set_size = 0;
  PreservationVerdict verdict;
};

struct FFreePreservation {
  bool preserved = true;
  std::vector<ArityVerdict> arities;  // orders 2..bound()
};

FFreePreservation f_free_preserved(const ForbiddenSet& f, TernaryOp op, const Limits& limits = {});

struct MajorityProbeOrder {
  int order = 0;
  std::size_t f_free = 0;
  bool f_free_set_closed = false;
  std::size_t seeds = 0;          // isomorphism orbits probed
  std::size_t seeds_escaping = 0; // orbits whose majority closure leaves the F-free set
  bool consistent = true;
};

struct MajorityProbe {
  bool consistent = true;
  std::vector<MajorityProbeOrder> orders;
};

// Probe of the claim that a majority-invariant set of F-free n-tournaments (n <= bound)
// is empty or contains every tournament. Per order: if the F-free set is majority-closed
// it must be empty or full; otherwise, for a proper F-free set, the majority closure of
// each isomorphism orbit must leave it or become the full labeled set.
MajorityProbe majority_probe(const ForbiddenSet& f, const Limits& limits = {});
bool majority_empty_or_all_check(const ForbiddenSet& f, const Limits& limits = {});

}  // namespace orient
