// Serial reference vs Zech/OpenMP point count on the example sextic over
// F_{3^n}. Usage: bench_pointcount [max_n] [threads]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "cliff/fixture.hpp"
#include "cliff/pointcount.hpp"

using namespace cliff;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned max_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 8;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  const auto& d = fixture::example().d;

  // algo = serial / fast1, par = fast1 / fastN
  std::printf("%3s %12s %12s %10s %10s %10s %8s %6s\n", "n", "q", "count", "serial_s", "fast1_s", "fastN_s", "algo",
              "par");
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto field = fq::make_field(3, n);
    const auto zech = fq::build_zech(field);
    std::uint64_t ref = 0, one = 0, many = 0;
    // the reference is O(q^2) polynomial-basis products; stop it early
    const bool run_ref = field.q() <= 729;
    const double t_ref = run_ref ? seconds([&] { ref = pointcount::count_points_reference(d, field); }) : 0.0;
    const double t_one = seconds([&] { one = pointcount::count_points_double_cover(d, field, zech, 1); });
    const double t_many = seconds([&] { many = pointcount::count_points_double_cover(d, field, zech, threads); });
    if (one != many || (run_ref && ref != one)) {
      std::fprintf(stderr, "mismatch at n = %u: reference %llu, 1 thread %llu, %d threads %llu\n", n,
                   static_cast<unsigned long long>(ref), static_cast<unsigned long long>(one), threads,
                   static_cast<unsigned long long>(many));
      return 1;
    }
    char serial[16] = "-", algo[16] = "-";
    if (run_ref) {
      std::snprintf(serial, sizeof serial, "%.4f", t_ref);
      if (t_one > 0) std::snprintf(algo, sizeof algo, "%.1f", t_ref / t_one);
    }
    std::printf("%3u %12llu %12llu %10s %10.4f %10.4f %8s %6.2f\n", n, static_cast<unsigned long long>(field.q()),
                static_cast<unsigned long long>(one), serial, t_one, t_many, algo, t_many > 0 ? t_one / t_many : 1.0);
  }
  std::printf("threads = %d\n", threads);
  return 0;
}
