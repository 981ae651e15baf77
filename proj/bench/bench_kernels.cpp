// Timing comparison of the serial reference kernels against the fast and
// OpenMP paths. Prints a small table; no pass/fail, numbers only.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "grassmax/counting.hpp"
#include "grassmax/families.hpp"

using namespace grassmax;

namespace {

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void row(const char* name, double serial, double fast) {
  std::printf("%-44s %12.6fs %12.6fs %8.1fx\n", name, serial, fast,
              fast > 0 ? serial / fast : 0.0);
}

OddFamily completed_random_family(int n, unsigned seed) {
  std::mt19937 rng(seed);
  const auto om = odd_masks(n);
  std::uniform_int_distribution<std::size_t> pick(0, om.size() - 1);
  for (;;) {
    std::vector<Mask> members{om[pick(rng)], om[pick(rng)], om[pick(rng)]};
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const OddFamily f(n, members);
    if (!is_intersecting(f).intersecting) continue;
    return complete_family(f);
  }
}

}  // namespace

int main() {
  std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());
  std::printf("%-44s %13s %13s %9s\n", "kernel", "serial", "fast", "speedup");

  for (int n : {10, 12}) {
    const OddFamily star = star_family(n, 1);
    const double t_naive = time_best_of(5, [&] { (void)is_maximal_family_naive(star); });
    const double t_fast = time_best_of(5, [&] { (void)is_maximal_family_fast(star); });
    char label[64];
    std::snprintf(label, sizeof label, "maximality scan, star family, n = %d", n);
    row(label, t_naive, t_fast);

    const OddFamily done = completed_random_family(n, 7u * static_cast<unsigned>(n));
    const double c_naive = time_best_of(5, [&] { (void)is_maximal_family_naive(done); });
    const double c_fast = time_best_of(5, [&] { (void)is_maximal_family_fast(done); });
    std::snprintf(label, sizeof label, "maximality scan, completed family, n = %d", n);
    row(label, c_naive, c_fast);
  }

  {
    const int n = 24;
    const OddFamily star = star_family(n, 1);
    std::vector<Mask> members(star.members());
    const double t_serial = time_best_of(3, [&] {
      SubsetReach reach(n, members, ExecMode::serial);
      (void)reach.hit(0);
    });
    const double t_par = time_best_of(3, [&] {
      SubsetReach reach(n, members, ExecMode::openmp);
      (void)reach.hit(0);
    });
    row("superset closure build, n = 24", t_serial, t_par);
  }

  {
    const OddFamily star16 = star_family(16, 1);
    const double t_serial =
        time_best_of(3, [&] { (void)is_maximal_family_fast(star16, ExecMode::serial); });
    const double t_par =
        time_best_of(3, [&] { (void)is_maximal_family_fast(star16, ExecMode::openmp); });
    row("fast maximality scan, star family, n = 16", t_serial, t_par);
  }

  {
    const double t1 = time_best_of(2, [&] { (void)counting::sweep(2, 300, 1); });
    const double t4 = time_best_of(2, [&] { (void)counting::sweep(2, 300, 4); });
    row("counting sweep k = 2..300, 1 vs 4 threads", t1, t4);
  }

  return 0;
}
