#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orient {

// Largest tournament order any routine accepts; n(n-1)/2 = 28 bits fits a uint32_t code.
inline constexpr int kMaxOrder = 8;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive enumeration or search would exceed a configured bound.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Tunable bounds shared by enumeration, clique search and the solvers.
struct Limits {
  int cap_bits = 15;                       // max n(n-1)/2 for labeled enumeration
  int brute_force_vars = 24;               // max edge variables for backtracking
  std::size_t clique_budget = 1'000'000;   // max cliques listed per instance
  int twosat_width = 15;                   // max scope width for 2-clause extraction
  std::size_t evidence_limit = 256;        // max counterexamples kept per relation

  // Defaults overridden by ORIENT_CAP_BITS and ORIENT_BF_VARS when set.
  static Limits from_env();
};

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace orient
