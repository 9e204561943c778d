#pragma once

#include <string>
#include <vector>

#include "orient/tournament.hpp"

namespace orient {

// Standard representation of a constraint relation: the labeled tournaments on
// {1..arity} that a constrained tuple may induce.
struct RelationRep {
  std::string name;
  int arity = 2;
  std::vector<Tournament> tournaments;  // sorted, distinct

  RelationRep() = default;
  RelationRep(std::string name, int arity, std::vector<Tournament> tournaments);

  bool contains(const Tournament& t) const;
};

// Name of the built-in arity-2 relation {1->2} used for pre-oriented edges.
inline constexpr const char* kArrowRelation = "->";
RelationRep arrow_relation();

}  // namespace orient
