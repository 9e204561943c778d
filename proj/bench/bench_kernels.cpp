// Serial reference versus OpenMP kernels: isomorphism-class counting and
// minority/majority triple scans over sets that force a full scan.

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "orient/minmaj.hpp"
#include "orient/tournament.hpp"

namespace {

using namespace orient;
using Clock = std::chrono::steady_clock;

template <class F>
double seconds(F&& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto start = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
  }
  return best;
}

// Even-parity codes are closed under XOR; codes with the first pair forward are closed
// under any coordinatewise vote.
std::vector<Tournament> even_parity(int n) {
  std::vector<Tournament> out;
  for (std::uint32_t c = 0; c < (1U << pair_count(n)); ++c) {
    if (std::popcount(c) % 2 == 0) out.emplace_back(n, c);
  }
  return out;
}

std::vector<Tournament> first_pair_forward(int n) {
  std::vector<Tournament> out;
  const std::uint32_t top = 1U << (pair_count(n) - 1);
  for (std::uint32_t c = 0; c < (1U << pair_count(n)); ++c) {
    if (c & top) out.emplace_back(n, c);
  }
  return out;
}

void report(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-34s serial %8.4f s  parallel %8.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#if defined(_OPENMP)
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled\n");
#endif
  bool ok = true;

  {
    std::vector<Tournament> a, b;
    double s = seconds([&] { a = iso_classes_serial(6); }, repeats);
    double p = seconds([&] { b = iso_classes(6); }, repeats);
    report("iso classes, n=6", s, p, a == b);
    ok = ok && a == b;
  }
  {
    auto set = even_parity(5);
    PreservationVerdict a, b;
    double s = seconds([&] { a = set_preserved_serial(set, TernaryOp::Minority); }, repeats);
    double p = seconds([&] { b = set_preserved(set, TernaryOp::Minority); }, repeats);
    bool agree = a.preserved == b.preserved && a.preserved;
    report("minority scan, 512 even codes", s, p, agree);
    ok = ok && agree;
  }
  {
    auto set = first_pair_forward(5);
    PreservationVerdict a, b;
    double s = seconds([&] { a = set_preserved_serial(set, TernaryOp::Majority); }, repeats);
    double p = seconds([&] { b = set_preserved(set, TernaryOp::Majority); }, repeats);
    bool agree = a.preserved == b.preserved && a.preserved;
    report("majority scan, 512 fixed-pair codes", s, p, agree);
    ok = ok && agree;
  }
  return ok ? 0 : 1;
}
