#include "orient/minmaj.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace orient {

RelationRep::RelationRep(std::string name_, int arity_, std::vector<Tournament> tournaments_)
    : name(std::move(name_)), arity(arity_), tournaments(std::move(tournaments_)) {
  std::sort(tournaments.begin(), tournaments.end());
  tournaments.erase(std::unique(tournaments.begin(), tournaments.end()), tournaments.end());
}

bool RelationRep::contains(const Tournament& t) const {
  return std::binary_search(tournaments.begin(), tournaments.end(), t);
}

RelationRep arrow_relation() {
  return RelationRep(kArrowRelation, 2, {Tournament::transitive(2)});
}

std::string_view to_string(TernaryOp op) {
  return op == TernaryOp::Minority ? "minority" : "majority";
}

Tournament apply(TernaryOp op, const Tournament& t1, const Tournament& t2, const Tournament& t3) {
  if (t1.order() != t2.order() || t1.order() != t3.order()) {
    throw Error("minority/majority needs tournaments of equal order");
  }
  return Tournament(t1.order(), apply_bits(op, t1.code(), t2.code(), t3.code()));
}

namespace {

// Membership over codes of one order: a bitmap for small orders, sorted codes otherwise.
class CodeSet {
 public:
  CodeSet(int order, const std::vector<std::uint32_t>& sorted_codes) : sorted_(sorted_codes) {
    if (pair_count(order) <= 20) {
      bitmap_.assign(std::size_t{1} << pair_count(order), 0);
      for (auto code : sorted_codes) bitmap_[code] = 1;
    }
  }
  bool contains(std::uint32_t code) const {
    if (!bitmap_.empty()) return bitmap_[code] != 0;
    return std::binary_search(sorted_.begin(), sorted_.end(), code);
  }

 private:
  const std::vector<std::uint32_t>& sorted_;
  std::vector<std::uint8_t> bitmap_;
};

struct Prepared {
  int order = 0;
  std::vector<std::uint32_t> codes;  // ascending, distinct
};

Prepared prepare(std::span<const Tournament> set) {
  Prepared out;
  if (set.empty()) return out;
  out.order = set.front().order();
  out.codes.reserve(set.size());
  for (const Tournament& t : set) {
    if (t.order() != out.order) throw Error("preservation check over tournaments of mixed orders");
    out.codes.push_back(t.code());
  }
  std::sort(out.codes.begin(), out.codes.end());
  out.codes.erase(std::unique(out.codes.begin(), out.codes.end()), out.codes.end());
  return out;
}

bool is_full(const Prepared& p) {
  return p.order > 0 && p.codes.size() == (std::size_t{1} << pair_count(p.order));
}

Counterexample make_counterexample(const Prepared& p, TernaryOp op, std::size_t i, std::size_t j,
                                   std::size_t k) {
  const auto& c = p.codes;
  return Counterexample{{Tournament(p.order, c[i]), Tournament(p.order, c[j]), Tournament(p.order, c[k])},
                        Tournament(p.order, apply_bits(op, c[i], c[j], c[k]))};
}

}  // namespace

PreservationVerdict set_preserved_serial(std::span<const Tournament> set, TernaryOp op) {
  const Prepared p = prepare(set);
  PreservationVerdict verdict;
  if (is_full(p)) return verdict;
  const CodeSet members(p.order, p.codes);
  const std::size_t m = p.codes.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!members.contains(apply_bits(op, p.codes[i], p.codes[j], p.codes[k]))) {
          verdict.preserved = false;
          verdict.counterexample = make_counterexample(p, op, i, j, k);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

PreservationVerdict set_preserved(std::span<const Tournament> set, TernaryOp op) {
  const Prepared p = prepare(set);
  PreservationVerdict verdict;
  if (is_full(p)) return verdict;
  const CodeSet members(p.order, p.codes);
  const auto m = static_cast<std::int64_t>(p.codes.size());
  const std::uint32_t* codes = p.codes.data();

  // Smallest first index with a failure; per first index the (j,k) found first is minimal.
  std::atomic<std::int64_t> best_first{m};
  std::vector<std::pair<std::int64_t, std::int64_t>> tail(static_cast<std::size_t>(std::max<std::int64_t>(m, 0)),
                                                          {-1, -1});

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < m; ++i) {
    if (i >= best_first.load(std::memory_order_relaxed)) continue;
    bool found = false;
    for (std::int64_t j = i + 1; j < m && !found; ++j) {
      if (i >= best_first.load(std::memory_order_relaxed)) break;
      const std::uint32_t ab = codes[i];
      for (std::int64_t k = j + 1; k < m; ++k) {
        if (!members.contains(apply_bits(op, ab, codes[j], codes[k]))) {
          tail[static_cast<std::size_t>(i)] = {j, k};
          found = true;
          break;
        }
      }
    }
    if (found) {
      std::int64_t current = best_first.load();
      while (i < current && !best_first.compare_exchange_weak(current, i)) {
      }
    }
  }

  const std::int64_t first = best_first.load();
  if (first < m) {
    auto [j, k] = tail[static_cast<std::size_t>(first)];
    verdict.preserved = false;
    verdict.counterexample = make_counterexample(p, op, static_cast<std::size_t>(first),
                                                 static_cast<std::size_t>(j), static_cast<std::size_t>(k));
  }
  return verdict;
}

std::vector<Counterexample> failing_triples(std::span<const Tournament> set, TernaryOp op,
                                            std::size_t limit) {
  const Prepared p = prepare(set);
  std::vector<Counterexample> out;
  if (is_full(p)) return out;
  const CodeSet members(p.order, p.codes);
  const std::size_t m = p.codes.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (out.size() >= limit) return out;
        if (!members.contains(apply_bits(op, p.codes[i], p.codes[j], p.codes[k]))) {
          out.push_back(make_counterexample(p, op, i, j, k));
        }
      }
    }
  }
  return out;
}

PreservationVerdict relation_preserved(const RelationRep& rep, TernaryOp op, std::size_t evidence_limit) {
  PreservationVerdict verdict = set_preserved(rep.tournaments, op);
  if (!verdict.preserved && evidence_limit > 0) {
    verdict.candidates = failing_triples(rep.tournaments, op, evidence_limit);
  }
  return verdict;
}

FFreePreservation f_free_preserved(const ForbiddenSet& f, TernaryOp op, const Limits& limits) {
  FFreePreservation out;
  for (int n = 2; n <= f.bound(); ++n) {
    std::vector<Tournament> free = enumerate_f_free(n, f, limits);
    ArityVerdict arity{n, free.size(), set_preserved(free, op)};
    out.preserved = out.preserved && arity.verdict.preserved;
    out.arities.push_back(std::move(arity));
  }
  return out;
}

namespace {

// Majority closure of `seed`; stops early once an element outside `allowed` appears.
// Returns true when the closure stayed inside `allowed`, leaving it in `closure`.
bool close_within(int order, std::vector<std::uint32_t> seed, const CodeSet& allowed,
                  std::vector<std::uint32_t>& closure) {
  std::vector<std::uint8_t> present(std::size_t{1} << pair_count(order), 0);
  closure.clear();
  for (auto code : seed) {
    if (!present[code]) {
      present[code] = 1;
      closure.push_back(code);
    }
  }
  // Every triple containing at least one element past `done` is still unchecked.
  std::size_t done = 0;
  while (done < closure.size()) {
    const std::size_t end = closure.size();
    for (std::size_t k = done; k < end; ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          std::uint32_t r = apply_bits(TernaryOp::Majority, closure[i], closure[j], closure[k]);
          if (present[r]) continue;
          if (!allowed.contains(r)) return false;
          present[r] = 1;
          closure.push_back(r);
        }
      }
    }
    done = end;
  }
  return true;
}

}  // namespace

MajorityProbe majority_probe(const ForbiddenSet& f, const Limits& limits) {
  MajorityProbe probe;
  for (int n = 2; n <= f.bound(); ++n) {
    check_enumeration_cap(n, limits);
    std::vector<Tournament> free = enumerate_f_free(n, f, limits);
    std::vector<std::uint32_t> codes;
    for (const Tournament& t : free) codes.push_back(t.code());
    const std::size_t full = std::size_t{1} << pair_count(n);
    const CodeSet allowed(n, codes);

    MajorityProbeOrder row;
    row.order = n;
    row.f_free = codes.size();
    row.f_free_set_closed = set_preserved(free, TernaryOp::Majority).preserved;
    if (row.f_free_set_closed && !codes.empty() && codes.size() != full) row.consistent = false;

    if (!codes.empty() && codes.size() != full) {
      std::vector<std::uint8_t> covered(full, 0);
      std::vector<int> identity(n);
      std::iota(identity.begin(), identity.end(), 1);
      for (const Tournament& t : free) {
        if (covered[t.code()]) continue;
        std::vector<std::uint32_t> orbit;
        std::vector<int> perm = identity;
        do {
          std::uint32_t code = t.relabel(perm).code();
          if (!covered[code]) {
            covered[code] = 1;
            orbit.push_back(code);
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        ++row.seeds;
        std::vector<std::uint32_t> closure;
        if (!close_within(n, orbit, allowed, closure)) {
          ++row.seeds_escaping;
        } else if (closure.size() != full) {
          row.consistent = false;
        }
      }
    }
    probe.consistent = probe.consistent && row.consistent;
    probe.orders.push_back(row);
  }
  return probe;
}

bool majority_empty_or_all_check(const ForbiddenSet& f, const Limits& limits) {
  return majority_probe(f, limits).consistent;
}

}  // namespace orient
