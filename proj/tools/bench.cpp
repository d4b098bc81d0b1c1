// Benchmark: OpenMP kernels against their serial reference paths.
//   1. Gamma_p table construction (blocked-scan parallel vs serial prefix)
//   2. theorem sweep (--jobs N vs --jobs 1)
// Results must agree bit for bit; the benchmark re-checks that while timing.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "padic/gamma.hpp"
#include "padic/registry.hpp"

using namespace padic;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    uint64_t gamma_p_prime = 3163; // p^2 ≈ 10^7 table entries, a second-scale build
    if (argc > 1) gamma_p_prime = std::stoull(argv[1]);
    int jobs = 4;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif

    std::printf("== gamma table build, p=%llu, k=2 ==\n",
                static_cast<unsigned long long>(gamma_p_prime));
    PrimeContext ctx(gamma_p_prime);
    auto t0 = Clock::now();
    auto serial = GammaTable::build_serial(ctx, 2);
    double t_serial = ms_since(t0);
    t0 = Clock::now();
    auto parallel = GammaTable::build_parallel(ctx, 2, /*force=*/true);
    double t_parallel = ms_since(t0);
    bool same = serial->size() == parallel->size();
    for (uint64_t i = 0; same && i < serial->size(); ++i)
        if (serial->at(i) != parallel->at(i)) same = false;
    std::printf("serial   %8.1f ms\nparallel %8.1f ms (%d threads)  speedup %.2fx  identical: %s\n",
                t_serial, t_parallel, jobs, t_serial / t_parallel, same ? "yes" : "NO");

    std::printf("\n== sweep thm-1.2-gauss, primes 3..199 ==\n");
    SweepOptions opt;
    opt.prime_lo = 3;
    opt.prime_hi = 199;
    opt.jobs = 1;
    t0 = Clock::now();
    SweepReport r1 = sweep("thm-1.2-gauss", opt);
    double s_ms = ms_since(t0);
    opt.jobs = jobs;
    t0 = Clock::now();
    SweepReport rn = sweep("thm-1.2-gauss", opt);
    double p_ms = ms_since(t0);
    bool agree = r1.cases == rn.cases && r1.holds == rn.holds &&
                 r1.condition_not_met == rn.condition_not_met && r1.fails == rn.fails &&
                 r1.errors == rn.errors;
    std::printf("serial   %8.1f ms (%llu cases, %llu holds)\n", s_ms,
                static_cast<unsigned long long>(r1.cases), static_cast<unsigned long long>(r1.holds));
    std::printf("parallel %8.1f ms (%d threads)  speedup %.2fx  identical: %s\n", p_ms, jobs,
                s_ms / p_ms, agree ? "yes" : "NO");
    return (same && agree) ? 0 : 1;
}
