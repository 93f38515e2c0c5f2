// Compares the serial reference sweep against the OpenMP kernel on large
// grids and verifies that both produce identical samples.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trimode/dynamics.hpp"
#include "trimode/scenario.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_case(const char* label, const trimode::Model& model,
                const trimode::StateSpec& state, int samples) {
    const auto grid = trimode::uniform_grid(25.0, samples - 1);

    const auto t0 = clock_type::now();
    const auto serial = trimode::sweep_serial(model, state, grid);
    const double serial_s = seconds_since(t0);

    const auto t1 = clock_type::now();
    const auto parallel = trimode::sweep(model, state, grid);
    const double parallel_s = seconds_since(t1);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        max_diff = std::fmax(max_diff, std::fabs(serial[i].vx - parallel[i].vx));
        max_diff = std::fmax(max_diff, std::fabs(serial[i].vy - parallel[i].vy));
        max_diff = std::fmax(max_diff, std::fabs(serial[i].kz - parallel[i].kz));
    }

    std::printf("%-18s %9d samples  serial %8.3f s  openmp %8.3f s  speedup %5.2fx  max|diff| %g\n",
                label, samples, serial_s, parallel_s,
                parallel_s > 0.0 ? serial_s / parallel_s : 0.0, max_diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; both paths run serially\n");
#endif

    const trimode::Model su11{{0.1, 0.25, 1.0}, trimode::AlgebraKind::SU11};
    const trimode::Model su2{{0.1, 0.25, 1.0}, trimode::AlgebraKind::SU2};

    bench_case("pcs sweep", su11,
               trimode::StateSpec::perelomov({0.25, trimode::cdouble{0.0, -0.5}}), 2'000'000);
    bench_case("bgcs sweep", su11,
               trimode::StateSpec::barut_girardello({2.0, trimode::cdouble{-10.0, 0.0}}),
               400'000);
    bench_case("bloch sweep", su2,
               trimode::StateSpec::bloch_state({5.0, trimode::cdouble{0.0, -0.5}}), 2'000'000);
    return 0;
}
