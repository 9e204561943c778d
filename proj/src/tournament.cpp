#include "orient/tournament.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace orient {

Limits Limits::from_env() {
  Limits limits;
  auto read = [](const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value <= 0 || value > 62) {
      throw Error(std::string(name) + ": expected a positive integer, got '" + raw + "'");
    }
    return static_cast<int>(value);
  };
  limits.cap_bits = read("ORIENT_CAP_BITS", limits.cap_bits);
  limits.brute_force_vars = read("ORIENT_BF_VARS", limits.brute_force_vars);
  return limits;
}

namespace {

std::uint32_t bit_of(int n, int pair) { return std::uint32_t{1} << (pair_count(n) - 1 - pair); }

// Source pair -> (target pair, flipped) under one permutation, for every permutation of 1..n.
struct PermutationTable {
  int order = 0;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<std::uint32_t>> target_bit;  // per perm, per source pair
  std::vector<std::vector<std::uint8_t>> flipped;
};

const PermutationTable& permutation_table(int n) {
  static std::array<PermutationTable, kMaxOrder + 1> tables;
  static std::array<std::once_flag, kMaxOrder + 1> flags;
  std::call_once(flags[n], [n] {
    PermutationTable& table = tables[n];
    table.order = n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<std::uint32_t> bits;
      std::vector<std::uint8_t> flips;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          int a = perm[i - 1];
          int b = perm[j - 1];
          bool flip = a > b;
          if (flip) std::swap(a, b);
          bits.push_back(bit_of(n, pair_index(n, a, b)));
          flips.push_back(flip ? 1 : 0);
        }
      }
      table.perms.push_back(perm);
      table.target_bit.push_back(std::move(bits));
      table.flipped.push_back(std::move(flips));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return tables[n];
}

std::uint32_t relabel_code(int n, std::uint32_t code, const PermutationTable& table, std::size_t p) {
  const int pairs = pair_count(n);
  std::uint32_t out = 0;
  for (int q = 0; q < pairs; ++q) {
    bool bit = (code >> (pairs - 1 - q)) & 1U;
    if (bit != static_cast<bool>(table.flipped[p][q])) out |= table.target_bit[p][q];
  }
  return out;
}

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error("tournament order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }
}

}  // namespace

int pair_index(int n, int i, int j) {
  // pairs starting with 1..i-1 come first: sum_{a<i} (n-a)
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

Tournament::Tournament(int order, std::uint32_t code) : order_(order), code_(code) {
  check_order(order);
  const int pairs = pair_count(order);
  if (pairs < 32 && (code >> pairs) != 0) {
    throw Error("tournament code has bits beyond " + std::to_string(pairs) + " pairs");
  }
}

Tournament Tournament::from_arcs(int order, std::span<const Arc> arcs) {
  check_order(order);
  const int pairs = pair_count(order);
  std::vector<int> seen(pairs, 0);
  std::uint32_t code = 0;
  for (auto [u, v] : arcs) {
    if (u < 1 || u > order || v < 1 || v > order) {
      throw Error("arc " + std::to_string(u) + "->" + std::to_string(v) + " outside 1.." +
                  std::to_string(order));
    }
    if (u == v) throw Error("loop arc at vertex " + std::to_string(u));
    int p = pair_index(order, std::min(u, v), std::max(u, v));
    if (seen[p]++) {
      throw Error("pair {" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) +
                  "} oriented more than once");
    }
    if (u < v) code |= bit_of(order, p);
  }
  for (int i = 1; i <= order; ++i) {
    for (int j = i + 1; j <= order; ++j) {
      if (!seen[pair_index(order, i, j)]) {
        throw Error("pair {" + std::to_string(i) + "," + std::to_string(j) + "} not oriented");
      }
    }
  }
  return Tournament(order, code);
}

Tournament Tournament::transitive(int order) {
  check_order(order);
  const int pairs = pair_count(order);
  return Tournament(order, pairs == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << pairs) - 1));
}

bool Tournament::beats(int u, int v) const {
  if (u == v) return false;
  bool forward = (code_ & bit_of(order_, pair_index(order_, std::min(u, v), std::max(u, v)))) != 0;
  return u < v ? forward : !forward;
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(pair_count(order_));
  for (int i = 1; i <= order_; ++i) {
    for (int j = i + 1; j <= order_; ++j) {
      out.push_back(beats(i, j) ? Arc{i, j} : Arc{j, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tournament Tournament::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw Error("permutation size does not match order");
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int v = 1; v <= order_; ++v) {
    if (check[v - 1] != v) throw Error("relabeling is not a permutation of 1..n");
  }
  std::uint32_t out = 0;
  for (int i = 1; i <= order_; ++i) {
    for (int j = i + 1; j <= order_; ++j) {
      int a = perm[i - 1];
      int b = perm[j - 1];
      bool forward = beats(i, j);
      if (a > b) {
        std::swap(a, b);
        forward = !forward;
      }
      if (forward) out |= bit_of(order_, pair_index(order_, a, b));
    }
  }
  return Tournament(order_, out);
}

std::string Tournament::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [u, v] : arcs()) {
    if (!first) os << ", ";
    first = false;
    os << u << "->" << v;
  }
  os << '}';
  return os.str();
}

CanonicalForm canonical_form(const Tournament& t) {
  const int n = t.order();
  const PermutationTable& table = permutation_table(n);
  std::uint32_t best = 0;
  std::size_t best_perm = 0;
  for (std::size_t p = 0; p < table.perms.size(); ++p) {
    std::uint32_t code = relabel_code(n, t.code(), table, p);
    if (p == 0 || code < best) {
      best = code;
      best_perm = p;
    }
  }
  return {Tournament(n, best), IsoWitness{table.perms[best_perm]}};
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  return a.order() == b.order() && canonical_form(a).form == canonical_form(b).form;
}

std::optional<IsoWitness> find_isomorphism(const Tournament& a, const Tournament& b) {
  if (a.order() != b.order()) return std::nullopt;
  const PermutationTable& table = permutation_table(a.order());
  for (std::size_t p = 0; p < table.perms.size(); ++p) {
    if (relabel_code(a.order(), a.code(), table, p) == b.code()) return IsoWitness{table.perms[p]};
  }
  return std::nullopt;
}

Tournament induced(const Tournament& t, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  check_order(k);
  std::vector<bool> used(t.order() + 1, false);
  for (int v : subset) {
    if (v < 1 || v > t.order()) throw Error("vertex " + std::to_string(v) + " not in tournament");
    if (used[v]) throw Error("vertex " + std::to_string(v) + " repeated in subset");
    used[v] = true;
  }
  std::uint32_t code = 0;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (t.beats(subset[i - 1], subset[j - 1])) code |= bit_of(k, pair_index(k, i, j));
    }
  }
  return Tournament(k, code);
}

bool is_transitive(const Tournament& t) {
  const int n = t.order();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        bool ab = t.beats(a, b);
        bool bc = t.beats(b, c);
        bool ca = t.beats(c, a);
        if (ab == bc && bc == ca) return false;
      }
    }
  }
  return true;
}

std::vector<Tournament> transitive_tournaments(int n) {
  check_order(n);
  const PermutationTable& table = permutation_table(n);
  Tournament base = Tournament::transitive(n);
  std::vector<Tournament> out;
  out.reserve(table.perms.size());
  for (std::size_t p = 0; p < table.perms.size(); ++p) {
    out.emplace_back(n, relabel_code(n, base.code(), table, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ForbiddenSet::ForbiddenSet(std::vector<Tournament> members) : labelings_(kMaxOrder + 1) {
  for (const Tournament& t : members) {
    if (t.order() < 2) throw Error("forbidden tournaments must have at least 2 vertices");
    if (match(t)) continue;
    const std::size_t index = members_.size();
    members_.push_back(t);
    const PermutationTable& table = permutation_table(t.order());
    auto& bucket = labelings_[t.order()];
    for (std::size_t p = 0; p < table.perms.size(); ++p) {
      bucket.emplace_back(relabel_code(t.order(), t.code(), table, p), index);
    }
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end(),
                             [](const auto& x, const auto& y) { return x.first == y.first; }),
                 bucket.end());
    if (!has_order(t.order())) {
      orders_.insert(std::upper_bound(orders_.begin(), orders_.end(), t.order()), t.order());
    }
  }
  bound_ = orders_.empty() ? 2 : orders_.back();
}

bool ForbiddenSet::has_order(int k) const {
  return std::binary_search(orders_.begin(), orders_.end(), k);
}

std::optional<std::size_t> ForbiddenSet::match(const Tournament& t) const {
  if (labelings_.empty() || t.order() > kMaxOrder) return std::nullopt;
  const auto& bucket = labelings_[t.order()];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), std::pair{t.code(), std::size_t{0}});
  if (it != bucket.end() && it->first == t.code()) return it->second;
  return std::nullopt;
}

namespace {

// Visits k-subsets of 1..n in lexicographic order until visit returns true.
bool any_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n) return false;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    if (visit(subset)) return true;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

std::optional<Containment> find_forbidden(const Tournament& t, const ForbiddenSet& f) {
  std::optional<Containment> hit;
  for (int k : f.member_orders()) {
    if (k > t.order()) break;
    any_subset(t.order(), k, [&](const std::vector<int>& subset) {
      if (auto member = f.match(induced(t, subset))) {
        hit = Containment{*member, subset};
        return true;
      }
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

bool is_f_free(const Tournament& t, const ForbiddenSet& f) { return !find_forbidden(t, f).has_value(); }

void check_enumeration_cap(int n, const Limits& limits) {
  check_order(n);
  if (pair_count(n) > limits.cap_bits) {
    throw LimitExceeded("enumerating order " + std::to_string(n) + " needs " +
                        std::to_string(pair_count(n)) + " bits, cap is " +
                        std::to_string(limits.cap_bits));
  }
}

void for_each_labeled(int n, const std::function<void(const Tournament&)>& visit, const Limits& limits) {
  check_enumeration_cap(n, limits);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) visit(Tournament(n, static_cast<std::uint32_t>(code)));
}

std::vector<Tournament> enumerate_labeled(int n, const Limits& limits) {
  std::vector<Tournament> out;
  for_each_labeled(n, [&](const Tournament& t) { out.push_back(t); }, limits);
  return out;
}

std::vector<Tournament> enumerate_f_free(int n, const ForbiddenSet& f, const Limits& limits) {
  std::vector<Tournament> out;
  for_each_labeled(n, [&](const Tournament& t) {
    if (is_f_free(t, f)) out.push_back(t);
  }, limits);
  return out;
}

std::vector<Tournament> iso_classes_serial(int n, const Limits& limits) {
  std::vector<std::uint32_t> forms;
  for_each_labeled(n, [&](const Tournament& t) { forms.push_back(canonical_form(t).form.code()); }, limits);
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Tournament> out;
  for (auto code : forms) out.emplace_back(n, code);
  return out;
}

std::vector<Tournament> iso_classes(int n, const Limits& limits) {
  check_enumeration_cap(n, limits);
  const std::int64_t total = std::int64_t{1} << pair_count(n);
  const PermutationTable& table = permutation_table(n);
  std::vector<std::uint32_t> forms(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t code = 0; code < total; ++code) {
    std::uint32_t best = static_cast<std::uint32_t>(code);
    for (std::size_t p = 1; p < table.perms.size(); ++p) {
      best = std::min(best, relabel_code(n, static_cast<std::uint32_t>(code), table, p));
    }
    forms[static_cast<std::size_t>(code)] = best;
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Tournament> out;
  out.reserve(forms.size());
  for (auto code : forms) out.emplace_back(n, code);
  return out;
}

}  // namespace orient
