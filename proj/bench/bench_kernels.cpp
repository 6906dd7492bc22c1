// Compares the OpenMP search kernels against the plain serial reference
// implementations on matched workloads and prints a timing table. Both
// sides must agree on every result; a mismatch aborts.

#include "ramsey/reference.hpp"
#include "ramsey/runner.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace ramsey;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

[[noreturn]] void mismatch(const char* name) {
    std::fprintf(stderr, "MISMATCH in %s: serial reference and parallel kernel disagree\n", name);
    std::exit(1);
}

void bench_ipr_star() {
    // sparse congruence set keeps the counterexample search honest
    const int n = 160;
    WindowSet A(n);
    for (int i = 1; i <= n; ++i)
        if (i % 7 == 3) A.insert(i);
    const int r = 3;

    double t0 = now_ms();
    auto serial = ref::check_ip_r_star(A, r);
    double t1 = now_ms();
    auto parallel = check_ip_r_star(A, r, true, omp_get_max_threads());
    double t2 = now_ms();

    if (serial.status != parallel.status || serial.counterexample != parallel.counterexample)
        mismatch("check_ip_r_star");
    row("check_ip_r_star (n=160, r=3)", t1 - t0, t2 - t1);
}

void bench_avoiding_coloring() {
    // 3-term AP system just below the threshold window
    PolyFamily F = parse_family("d;2d");
    const int n = 8, r = 2;
    PatternSystem sys{n, poly_configs(n, F, true)};

    double t0 = now_ms();
    auto serial = ref::find_avoiding_coloring(sys, r);
    double t1 = now_ms();
    auto parallel = find_avoiding_coloring(sys, r, {}, omp_get_max_threads());
    double t2 = now_ms();

    if (serial.status != parallel.status || serial.coloring != parallel.coloring)
        mismatch("find_avoiding_coloring");
    row("find_avoiding_coloring (vdw n=8)", t1 - t0, t2 - t1);

    // Schur triples on a wider window, 3 colors
    PatternSystem schur{13, schur_triples(13, false, true)};
    t0 = now_ms();
    serial = ref::find_avoiding_coloring(schur, 3);
    t1 = now_ms();
    parallel = find_avoiding_coloring(schur, 3, {}, omp_get_max_threads());
    t2 = now_ms();
    if (serial.status != parallel.status || serial.coloring != parallel.coloring)
        mismatch("find_avoiding_coloring(schur)");
    row("find_avoiding_coloring (schur n=13)", t1 - t0, t2 - t1);
}

void bench_hj_search() {
    const int t = 3, N = 8;
    std::uint64_t points = 1;
    for (int i = 0; i < N; ++i) points *= std::uint64_t(t);
    // color by digit sum; no monochromatic line until late in the scan
    HjInstance inst{t, N, CubePointColoring::natural_rule(points, 3,
                                                          parse_rule_coloring("mod:3:0,1,2"))};

    double t0 = now_ms();
    auto serial = ref::hj_search(inst);
    double t1 = now_ms();
    auto parallel = hj_search(inst, omp_get_max_threads());
    double t2 = now_ms();

    if (serial.has_value() != parallel.has_value()) mismatch("hj_search");
    if (serial && serial->letters != parallel->letters) mismatch("hj_search");
    row("hj_search (t=3, N=8)", t1 - t0, t2 - t1);
}

}  // namespace

int main() {
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");
    std::printf("threads: %d\n", omp_get_max_threads());
    bench_ipr_star();
    bench_avoiding_coloring();
    bench_hj_search();
    std::printf("all kernels agree with the serial reference\n");
    return 0;
}
