// Timing comparison between the serial reference kernels and the
// OpenMP-parallel ones: conjugate, biconjugate, sampling oracle.

#include "capra/conjugacy.hpp"
#include "capra/oracle.hpp"

#include <chrono>
#include <cstdio>

using namespace capra;

namespace {

template <class F>
double time_ms(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
    SourceNorm n = SourceNorm::l2();
    auto inner = sphere_grid(n, 720, 2, 1);
    auto duals = box_grid(3.0, 201, 2);
    auto primal = box_grid(2.0, 41, 2);
    SampledFunction f0 = make_l0(2, inner);

    report("capra_conjugate",
           time_ms([&] { capra_conjugate(f0, duals, n, false); }),
           time_ms([&] { capra_conjugate(f0, duals, n, true); }));

    report("capra_biconjugate",
           time_ms([&] { capra_biconjugate(f0, primal, duals, n, false); }),
           time_ms([&] { capra_biconjugate(f0, primal, duals, n, true); }));

    PointSet gens = PointSet::of({Vector::exact({1, 0}), Vector::exact({-1, 1}), Vector::exact({-1, -1})});
    ConeSpec k1 = ConeSpec::ray_fan(gens, false);
    report("sampling_oracle",
           time_ms([&] { sampling_oracle(k1, n, 20000, 1e-5, 7, false); }),
           time_ms([&] { sampling_oracle(k1, n, 20000, 1e-5, 7, true); }));

    return 0;
}
