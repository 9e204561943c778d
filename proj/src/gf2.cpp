#include <algorithm>
#include <bit>

#include "orient/solver.hpp"

namespace orient {

namespace {

// Reduced echelon basis of w-bit vectors; each basis vector owns its highest set bit.
struct XorBasis {
  std::vector<std::uint32_t> rows;

  std::uint32_t reduce(std::uint32_t v) const {
    for (auto r : rows) {
      if (v & (std::uint32_t{1} << (31 - std::countl_zero(r)))) v ^= r;
    }
    return v;
  }
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (v == 0) return false;
    const std::uint32_t pivot = std::uint32_t{1} << (31 - std::countl_zero(v));
    for (auto& r : rows) {
      if (r & pivot) r ^= v;
    }
    rows.push_back(v);
    return true;
  }
  std::uint32_t pivots() const {
    std::uint32_t mask = 0;
    for (auto r : rows) mask |= std::uint32_t{1} << (31 - std::countl_zero(r));
    return mask;
  }
};

}  // namespace

std::variant<ParitySystem, NotAffine> affine_compile(const BooleanCSP& csp) {
  ParitySystem sys;
  sys.variables = csp.variables;
  for (std::size_t ci = 0; ci < csp.constraints.size(); ++ci) {
    const BoolConstraint& c = csp.constraints[ci];
    const int w = static_cast<int>(c.scope.size());
    if (c.allowed.empty()) {
      sys.equations.push_back({{}, true});
      continue;
    }
    const std::uint32_t base = c.allowed.front();
    XorBasis basis;
    for (auto a : c.allowed) basis.insert(a ^ base);
    const std::size_t rank = basis.rows.size();
    if (rank >= 32 || c.allowed.size() != (std::size_t{1} << rank)) return NotAffine{ci};
    // Every span element shifted by the base vector must be allowed.
    for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
      std::uint32_t v = base;
      for (std::size_t r = 0; r < rank; ++r) {
        if (mask >> r & 1U) v ^= basis.rows[r];
      }
      if (!std::binary_search(c.allowed.begin(), c.allowed.end(), v)) return NotAffine{ci};
    }
    // One parity check per non-pivot bit q: bit q plus the pivots of rows containing q.
    const std::uint32_t pivots = basis.pivots();
    for (int q = 0; q < w; ++q) {
      const std::uint32_t qbit = std::uint32_t{1} << q;
      if (pivots & qbit) continue;
      std::uint32_t check = qbit;
      for (auto r : basis.rows) {
        if (r & qbit) check |= std::uint32_t{1} << (31 - std::countl_zero(r));
      }
      ParityEquation eq;
      for (int b = 0; b < w; ++b) {
        if (check >> b & 1U) eq.variables.push_back(c.scope[static_cast<std::size_t>(w - 1 - b)]);
      }
      std::sort(eq.variables.begin(), eq.variables.end());
      eq.rhs = (std::popcount(check & base) & 1) != 0;
      sys.equations.push_back(std::move(eq));
    }
  }
  return sys;
}

std::optional<Assignment> gf2_solve(const ParitySystem& sys) {
  const std::size_t n = static_cast<std::size_t>(sys.variables);
  const std::size_t words = n / 64 + 1;  // last bit of the row holds the right-hand side
  const std::size_t rhs_word = n / 64;
  const std::uint64_t rhs_bit = std::uint64_t{1} << (n % 64);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(sys.equations.size());
  for (const ParityEquation& eq : sys.equations) {
    std::vector<std::uint64_t> row(words, 0);
    for (int v : eq.variables) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error("parity equation names unknown variable");
      row[static_cast<std::size_t>(v) / 64] ^= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    }
    if (eq.rhs) row[rhs_word] ^= rhs_bit;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Remaining rows have no coefficients left; a set right-hand side is 0 = 1.
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][rhs_word] & rhs_bit) return std::nullopt;
  }
  Assignment x(n, 0);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = (rows[r][rhs_word] & rhs_bit) ? 1 : 0;
  return x;
}

}  // namespace orient
