// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [--quick]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

#include "hyperarr/kernels.hpp"

using namespace hyperarr;

namespace {

double time_it(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-40s %12.4f %12.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

std::vector<kernels::WitnessedChamber> enumerate_with(const Arrangement& a, bool parallel) {
    std::vector<kernels::WitnessedChamber> level{{0, std::vector<Rational>(a.dim(), Rational(0))}};
    for (std::size_t k = 0; k < a.size(); ++k)
        level = parallel ? kernels::extend_chambers_parallel(a, k, level) : kernels::extend_chambers_serial(a, k, level);
    return level;
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const int reps = quick ? 1 : 3;
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
    std::printf("%-40s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

    const auto ranks_input = builtin_braid(quick ? 5 : 6);
    row("subset ranks (braid)",
        time_it([&] { kernels::subset_ranks_serial(ranks_input); }, reps),
        time_it([&] { kernels::subset_ranks_parallel(ranks_input); }, reps));
    row("Whitney coefficients (braid)",
        time_it([&] { kernels::whitney_coefficients_serial(ranks_input); }, reps),
        time_it([&] { kernels::whitney_coefficients_parallel(ranks_input); }, reps));

    const auto chamber_input = builtin_braid(quick ? 4 : 5);
    row("chamber enumeration (braid)",
        time_it([&] { enumerate_with(chamber_input, false); }, reps),
        time_it([&] { enumerate_with(chamber_input, true); }, reps));

    const auto braid3 = enumerate_chambers(builtin_braid(3));
    const unsigned m = quick ? 2 : 3;
    row("admissible family search (braid 3)",
        time_it([&] { kernels::search_families_serial(*braid3, m, false); }, 1),
        time_it([&] { kernels::search_families_parallel(*braid3, m, false); }, 1));
    return 0;
}
