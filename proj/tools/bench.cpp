// Benchmark comparing the serial reference kernels against the OpenMP ones
// on the main workloads.  Results are also cross-checked for equality.
//
// Run: ./hurwitz6_bench [workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "hurwitz/classify.hpp"
#include "hurwitz/parallel.hpp"

using namespace hurwitz;

namespace {

template <typename F>
double time_ms(F f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int workers = argc > 1 ? std::atoi(argv[1]) : default_workers();
    if (workers < 2) workers = 2;
    std::printf("workers: %d\n", workers);
    std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

    Universe::get().lattice();  // build tables outside the timings

    GroupFilter a6 = GroupFilter::exact(Universe::get().lattice().full_id());

    {
        uint64_t c1 = 0, c2 = 0;
        double s = time_ms([&] { c1 = enumerate_tuples(6, a6, nullptr); });
        double p = time_ms([&] { c2 = count_tuples(6, a6, workers); });
        row("count tuples k=6", s, p, c1 == c2);
    }
    {
        std::vector<uint64_t> s1, s2;
        double s = time_ms([&] { s1 = collect_states(6, a6, Canon::inner, 1); });
        double p = time_ms([&] { s2 = collect_states(6, a6, Canon::inner, workers); });
        row("collect inner states k=6", s, p, s1 == s2);
    }
    {
        Tuple seed = parse_tuple("(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)");
        std::vector<uint64_t> o1, o2;
        double s = time_ms([&] { o1 = braid_orbit(seed, Canon::inner, 1); });
        double p = time_ms([&] { o2 = braid_orbit(seed, Canon::inner, workers); });
        row("braid orbit k=5 (inner)", s, p, o1 == o2);
    }
    {
        OrbitReport r1, r2;
        double s = time_ms([&] { r1 = classify(6, Canon::inner, GroupSel::a6(), {1}); });
        double p = time_ms([&] { r2 = classify(6, Canon::inner, GroupSel::a6(), {workers}); });
        row("classify k=6 inner", s, p, payload_string(r1) == payload_string(r2));
    }
    {
        ReproduceOptions o1, o2;
        o1.workers = 1;
        o2.workers = workers;
        std::vector<CheckResult> r1, r2;
        double s = time_ms([&] { r1 = reproduce({"b6"}, o1); });
        double p = time_ms([&] { r2 = reproduce({"b6"}, o2); });
        row("reproduce b6", s, p,
            r1.size() == r2.size() && r1[0].pass == r2[0].pass && r1[0].detail == r2[0].detail);
    }
    return 0;
}
