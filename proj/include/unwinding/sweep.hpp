#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unwinding/polynomial.hpp"

namespace unwinding {

/// Errors below this are floored before logs so that exhausted double
/// precision flattens out deterministically.
inline constexpr double kLogErrorFloor = 1e-14;

struct SweepConfig {
    int degree = 1;          ///< n, the polynomial degree
    double root_disk = 1.0;  ///< m, roots drawn uniformly by area from |z| < m
    std::vector<double> radii;
    int samples = 1;
    std::uint64_t master_seed = 0;
    int l_max = 1;
    double quad_tol = 1e-10;
};

struct SweepRow {
    double radius = 0.0;
    int l = 0;
    double mean_log_error = 0.0;
    double std_log_error = 0.0;
    int samples_ok = 0;
    int samples_failed = 0;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

/// Per-sample seed; depends only on (master_seed, index).
std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t index);

/// Monic root form with n roots i.i.d. uniform by area in the disk of radius
/// m (modulus m*sqrt(u), angle uniform); bit-exact for a given seed.
RootForm gen_random_poly(int n, double m, std::uint64_t seed);

/// For every sample and radius: unwind at the fixed radius, integrate the
/// squared boundary error of each partial sum on the unit circle, and average
/// the (floored) logs across samples. Rows cover L = 1..min(l_max, n-1)
/// (L = 1 alone when n = 1; the L = n row is numerically zero and omitted).
/// Samples run in parallel; aggregation order is fixed by sample index, so
/// the output is byte-identical to the serial reference.
SweepResult error_sweep(const SweepConfig& config);

/// Single-threaded reference implementation of the same sweep.
SweepResult error_sweep_serial(const SweepConfig& config);

/// Same grid and schema with the power-series partial sum as the
/// approximant. The approximant ignores the radius, so rows repeat across
/// radii; the table stays directly comparable to error_sweep output.
SweepResult compare_taylor(const SweepConfig& config);

SweepResult compare_taylor_serial(const SweepConfig& config);

/// For each n, bisect m in (0, 2] on the sign of
/// (1/2)||F||_D^2 - ||G||_D^2 for F = (z-m)^n factored at radius 1, to
/// absolute tolerance tol. Throws BracketInvalid when the bracket endpoints
/// do not straddle a sign change.
std::vector<std::pair<int, double>> m0_scan(const std::vector<int>& n_list,
                                            double tol);

/// CSV with header radius,L,mean_log_error,std_log_error,samples_ok,samples_failed.
std::string to_csv(const SweepResult& result);

}  // namespace unwinding
