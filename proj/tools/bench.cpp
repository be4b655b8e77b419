// Compares the OpenMP automorphism search against the serial reference.
#include <chrono>
#include <cstdio>

#include "mapsym/generators.hpp"
#include "mapsym/symmetry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled\n");
#endif
  std::printf("%-24s %8s %12s %12s %8s\n", "map", "flags", "serial[s]", "parallel[s]", "speedup");
  for (int size : {10, 16, 24, 32}) {
    mapsym::FlagSystem fs = mapsym::torus_grid(size, size + 1);
    int order_serial = 0, order_parallel = 0;
    double t_serial = seconds([&] { order_serial = mapsym::automorphisms_serial(fs).order(); });
    double t_parallel = seconds([&] { order_parallel = mapsym::automorphisms(fs).order(); });
    if (order_serial != order_parallel) {
      std::printf("MISMATCH on torus %dx%d: %d vs %d\n", size, size + 1, order_serial,
                  order_parallel);
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "torus %dx%d (|Aut|=%d)", size, size + 1, order_serial);
    std::printf("%-24s %8d %12.3f %12.3f %7.2fx\n", name, fs.n_flags(), t_serial, t_parallel,
                t_serial / t_parallel);
  }
  return 0;
}
