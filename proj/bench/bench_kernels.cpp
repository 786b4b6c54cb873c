// Serial reference kernels vs their OpenMP counterparts.
//
//   bench_kernels [order ...]      (default: 500 2000 8000)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "pod2/kernels.hpp"
#include "pod2/series.hpp"

using namespace pod2;
using namespace pod2::kernels;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  f();  // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / reps;
}

std::vector<Integer> random_dense(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  std::vector<Integer> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> orders;
  for (int i = 1; i < argc; ++i) orders.push_back(std::strtoul(argv[i], nullptr, 10));
  if (orders.empty()) orders = {500, 2000, 8000};

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-8s %-7s %12s %12s %8s %s\n", "order", "kernel", "serial_ms", "parallel_ms", "speedup", "agree");
  std::mt19937_64 rng(42);
  for (std::size_t n : orders) {
    const int reps = n <= 2000 ? 5 : 1;
    const auto a = random_dense(rng, n);
    const auto b = random_dense(rng, n);
    std::vector<Integer> s(n), p(n);
    const double ds = time_ms([&] { convolve_serial(a, b, s); }, reps);
    const double dp = time_ms([&] { convolve_parallel(a, b, p); }, reps);
    std::printf("%-8zu %-7s %12.2f %12.2f %8.2f %s\n", n, "dense", ds, dp, ds / dp, s == p ? "yes" : "NO");

    const auto f1 = eta_product(1, n);
    const auto nz = nonzeros(f1.coefficients());
    const double ss = time_ms([&] { convolve_sparse_serial(nz, b, s); }, reps * 10);
    const double sp = time_ms([&] { convolve_sparse_parallel(nz, b, p); }, reps * 10);
    std::printf("%-8zu %-7s %12.2f %12.2f %8.2f %s\n", n, "sparse", ss, sp, ss / sp, s == p ? "yes" : "NO");
  }
  return 0;
}
