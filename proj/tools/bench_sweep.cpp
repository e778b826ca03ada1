// Times the OpenMP sample-parallel sweep against the serial reference and
// checks that both produce byte-identical CSV.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "unwinding/sweep.hpp"

using namespace unwinding;

namespace {

template <class F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel sweep benchmark"};
    SweepConfig cfg;
    cfg.degree = 12;
    cfg.root_disk = 5.0;
    cfg.radii = {1.0, 2.0, 3.0};
    cfg.samples = 48;
    cfg.master_seed = 20240817ULL;
    cfg.l_max = 11;
    app.add_option("--n", cfg.degree, "polynomial degree");
    app.add_option("--m", cfg.root_disk, "root disk radius");
    app.add_option("--samples", cfg.samples, "sample count");
    app.add_option("--seed", cfg.master_seed, "master seed");
    CLI11_PARSE(app, argc, argv);
    cfg.l_max = cfg.degree > 1 ? cfg.degree - 1 : 1;

    std::string serial_csv, parallel_csv;
    const double serial_s = time_seconds([&] { serial_csv = to_csv(error_sweep_serial(cfg)); });
    const double parallel_s = time_seconds([&] { parallel_csv = to_csv(error_sweep(cfg)); });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("config: n=%d m=%g radii=%zu samples=%d L_max=%d\n", cfg.degree,
                cfg.root_disk, cfg.radii.size(), cfg.samples, cfg.l_max);
    std::printf("serial:   %8.3f s\n", serial_s);
    std::printf("parallel: %8.3f s (%d threads)\n", parallel_s, threads);
    std::printf("speedup:  %8.2fx\n", parallel_s > 0.0 ? serial_s / parallel_s : 0.0);
    const bool identical = serial_csv == parallel_csv;
    std::printf("outputs byte-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
