#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orient/common.hpp"

namespace orient {

using Arc = std::pair<int, int>;

// Index of the unordered pair {i,j}, 1 <= i < j <= n, in lexicographic pair order.
int pair_index(int n, int i, int j);

// Tournament on vertices 1..n stored as an arc bitstring over the pairs {i,j}, i<j, in
// lexicographic order. The first pair is the most significant bit, so integer order on
// codes is lexicographic order on bitstrings. A set bit means i->j.
class Tournament {
 public:
  Tournament() = default;
  Tournament(int order, std::uint32_t code);

  // Throws Error unless arcs orient every pair of {1..order} exactly once.
  static Tournament from_arcs(int order, std::span<const Arc> arcs);
  // The tournament with i->j for all i<j.
  static Tournament transitive(int order);

  int order() const { return order_; }
  std::uint32_t code() const { return code_; }
  bool beats(int u, int v) const;
  std::vector<Arc> arcs() const;

  // perm[v-1] is the image of vertex v; arc u->v becomes perm(u)->perm(v).
  Tournament relabel(std::span<const int> perm) const;

  std::string to_string() const;

  auto operator<=>(const Tournament&) const = default;

 private:
  int order_ = 1;
  std::uint32_t code_ = 0;
};

struct IsoWitness {
  std::vector<int> permutation;  // relabel(source, permutation) == target
};

struct CanonicalForm {
  Tournament form;
  IsoWitness witness;
};

CanonicalForm canonical_form(const Tournament& t);
bool is_isomorphic(const Tournament& a, const Tournament& b);
std::optional<IsoWitness> find_isomorphism(const Tournament& a, const Tournament& b);

// Tournament on 1..|subset| with i->j iff subset[i-1] -> subset[j-1] in t.
Tournament induced(const Tournament& t, std::span<const int> subset);

bool is_transitive(const Tournament& t);
std::vector<Tournament> transitive_tournaments(int n);

// Forbidden tournaments, deduplicated up to isomorphism. Members of order 1 or above
// kMaxOrder are rejected.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  explicit ForbiddenSet(std::vector<Tournament> members);

  const std::vector<Tournament>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  // Maximum member order, 2 when there are no members.
  int bound() const { return bound_; }
  // Distinct member orders, ascending.
  const std::vector<int>& member_orders() const { return orders_; }
  bool has_order(int k) const;

  // Index of the member isomorphic to t, if any.
  std::optional<std::size_t> match(const Tournament& t) const;

 private:
  std::vector<Tournament> members_;
  std::vector<int> orders_;
  int bound_ = 2;
  // (labeled code, member index) for every labeling of every member, per order.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> labelings_;
};

struct Containment {
  std::size_t member = 0;
  std::vector<int> subset;  // ascending vertices inducing the member
};

// First forbidden member found as an induced subtournament, scanning member orders
// ascending and vertex subsets in lexicographic order.
std::optional<Containment> find_forbidden(const Tournament& t, const ForbiddenSet& f);
bool is_f_free(const Tournament& t, const ForbiddenSet& f);

// All 2^(n(n-1)/2) labeled tournaments in code order. Throws LimitExceeded above the cap.
void for_each_labeled(int n, const std::function<void(const Tournament&)>& visit,
                      const Limits& limits = {});
std::vector<Tournament> enumerate_labeled(int n, const Limits& limits = {});
std::vector<Tournament> enumerate_f_free(int n, const ForbiddenSet& f, const Limits& limits = {});

// Canonical representatives of the isomorphism classes at order n, ascending.
// The OpenMP kernel and the serial reference must agree.
std::vector<Tournament> iso_classes(int n, const Limits& limits = {});
std::vector<Tournament> iso_classes_serial(int n, const Limits& limits = {});

void check_enumeration_cap(int n, const Limits& limits);

}  // namespace orient
