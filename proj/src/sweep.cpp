#include "unwinding/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "unwinding/errors.hpp"
#include "unwinding/metrics.hpp"
#include "unwinding/quadrature.hpp"
#include "unwinding/roots.hpp"
#include "unwinding/unwind.hpp"

namespace unwinding {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void validate(const SweepConfig& cfg) {
    if (cfg.degree < 1) throw std::invalid_argument("sweep: degree must be >= 1");
    if (!(cfg.root_disk > 0.0)) throw std::invalid_argument("sweep: root disk must be positive");
    if (cfg.samples < 1) throw std::invalid_argument("sweep: samples must be >= 1");
    if (cfg.radii.empty()) throw std::invalid_argument("sweep: at least one radius required");
    for (double r : cfg.radii) {
        if (!(r > 0.0)) throw std::invalid_argument("sweep: radii must be positive");
    }
    if (cfg.l_max < 1) throw std::invalid_argument("sweep: L_max must be >= 1");
    if (!(cfg.quad_tol > 0.0)) throw std::invalid_argument("sweep: quad_tol must be positive");
}

int effective_l_max(const SweepConfig& cfg) {
    // The L = n partial sum is exact; its row is omitted (degree 1 keeps its
    // single row so the grid is never empty).
    if (cfg.degree == 1) return 1;
    return std::min(cfg.l_max, cfg.degree - 1);
}

/// Squared boundary errors of the partial sums for every L in 1..l_eff on one
/// shared doubling grid, each converged to quad_tol relative (with an
/// absolute escape well below the log floor).
std::vector<double> partial_errors_all_l(const Polynomial& F,
                                         const UnwindingSeries& s, int l_eff,
                                         double quad_tol) {
    double coeff_power = 0.0;
    for (const Complex& c : F.coeffs()) coeff_power += std::norm(c);
    const double abs_floor = 1e-20 * (1.0 + kTwoPi * coeff_power);

    const int terms = static_cast<int>(s.terms.size());
    std::vector<double> sums(static_cast<std::size_t>(l_eff), 0.0);
    std::vector<double> prev(static_cast<std::size_t>(l_eff), 0.0);

    auto accumulate = [&](double t) {
        const Complex z = std::polar(1.0, t);
        const Complex fz = F(z);
        Complex acc = s.f0;
        Complex prod{1.0, 0.0};
        const int steps = std::min(l_eff, terms);
        for (int i = 0; i < steps; ++i) {
            prod *= s.terms[static_cast<std::size_t>(i)].b(z);
            acc += s.terms[static_cast<std::size_t>(i)].a * prod;
            sums[static_cast<std::size_t>(i)] += std::norm(fz - acc);
        }
        // A series that terminated early is already complete for larger L.
        const double tail = std::norm(fz - acc);
        for (int l = steps; l < l_eff; ++l) sums[static_cast<std::size_t>(l)] += tail;
    };

    int n = kQuadratureStart;
    for (int j = 0; j < n; ++j) accumulate(kTwoPi * j / n);
    for (int l = 0; l < l_eff; ++l) {
        prev[static_cast<std::size_t>(l)] = sums[static_cast<std::size_t>(l)] * (kTwoPi / n);
    }
    while (n < kQuadratureCap) {
        const int doubled = 2 * n;
        const double step = kTwoPi / doubled;
        for (int j = 0; j < n; ++j) accumulate(step * (2 * j + 1));
        n = doubled;
        bool all_converged = true;
        for (int l = 0; l < l_eff; ++l) {
            const double cur = sums[static_cast<std::size_t>(l)] * step;
            if (std::abs(cur - prev[static_cast<std::size_t>(l)]) >
                quad_tol * std::abs(cur) + abs_floor) {
                all_converged = false;
            }
            prev[static_cast<std::size_t>(l)] = cur;
        }
        if (all_converged) return prev;
    }
    throw QuadratureNonConvergence("partial-sum error quadrature hit the point cap");
}

/// Same integrals with the truncated power series as approximant.
std::vector<double> taylor_errors_all_l(const Polynomial& F, int l_eff,
                                        double quad_tol) {
    double coeff_power = 0.0;
    for (const Complex& c : F.coeffs()) coeff_power += std::norm(c);
    const double abs_floor = 1e-20 * (1.0 + kTwoPi * coeff_power);

    const int deg = F.degree();
    std::vector<double> sums(static_cast<std::size_t>(l_eff), 0.0);
    std::vector<double> prev(static_cast<std::size_t>(l_eff), 0.0);

    auto accumulate = [&](double t) {
        const Complex z = std::polar(1.0, t);
        const Complex fz = F(z);
        Complex acc = F.coeff(0);
        Complex zpow{1.0, 0.0};
        const int steps = std::min(l_eff, deg);
        for (int k = 1; k <= steps; ++k) {
            zpow *= z;
            acc += F.coeff(static_cast<std::size_t>(k)) * zpow;
            sums[static_cast<std::size_t>(k - 1)] += std::norm(fz - acc);
        }
        const double tail = std::norm(fz - acc);
        for (int l = steps; l < l_eff; ++l) sums[static_cast<std::size_t>(l)] += tail;
    };

    int n = kQuadratureStart;
    for (int j = 0; j < n; ++j) accumulate(kTwoPi * j / n);
    for (int l = 0; l < l_eff; ++l) {
        prev[static_cast<std::size_t>(l)] = sums[static_cast<std::size_t>(l)] * (kTwoPi / n);
    }
    while (n < kQuadratureCap) {
        const int doubled = 2 * n;
        const double step = kTwoPi / doubled;
        for (int j = 0; j < n; ++j) accumulate(step * (2 * j + 1));
        n = doubled;
        bool all_converged = true;
        for (int l = 0; l < l_eff; ++l) {
            const double cur = sums[static_cast<std::size_t>(l)] * step;
            if (std::abs(cur - prev[static_cast<std::size_t>(l)]) >
                quad_tol * std::abs(cur) + abs_floor) {
                all_converged = false;
            }
            prev[static_cast<std::size_t>(l)] = cur;
        }
        if (all_converged) return prev;
    }
    throw QuadratureNonConvergence("power-series error quadrature hit the point cap");
}

double floored_log(double err) { return std::log(std::max(err, kLogErrorFloor)); }

struct SampleCell {
    bool failed = false;
    std::vector<double> log_errors;
};

SweepResult aggregate(const SweepConfig& cfg, int l_eff,
                      const std::vector<std::vector<SampleCell>>& cells) {
    long failed_cells = 0;
    for (const auto& per_sample : cells) {
        for (const SampleCell& cell : per_sample) {
            if (cell.failed) ++failed_cells;
        }
    }
    const long total_cells =
        static_cast<long>(cfg.samples) * static_cast<long>(cfg.radii.size());
    if (failed_cells * 20 > total_cells) {
        throw Error("sweep aborted: more than 5% of samples failed");
    }

    SweepResult out;
    out.config = cfg;
    for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
        for (int l = 1; l <= l_eff; ++l) {
            SweepRow row;
            row.radius = cfg.radii[ri];
            row.l = l;
            double sum = 0.0;
            for (int s = 0; s < cfg.samples; ++s) {
                const SampleCell& cell = cells[static_cast<std::size_t>(s)][ri];
                if (cell.failed) {
                    ++row.samples_failed;
                } else {
                    sum += cell.log_errors[static_cast<std::size_t>(l - 1)];
                    ++row.samples_ok;
                }
            }
            row.mean_log_error = row.samples_ok > 0 ? sum / row.samples_ok : 0.0;
            double sq = 0.0;
            for (int s = 0; s < cfg.samples; ++s) {
                const SampleCell& cell = cells[static_cast<std::size_t>(s)][ri];
                if (!cell.failed) {
                    const double d =
                        cell.log_errors[static_cast<std::size_t>(l - 1)] - row.mean_log_error;
                    sq += d * d;
                }
            }
            row.std_log_error = row.samples_ok > 0 ? std::sqrt(sq / row.samples_ok) : 0.0;
            out.rows.push_back(row);
        }
    }
    return out;
}

void run_unwind_sample(const SweepConfig& cfg, int l_eff, int sample,
                       std::vector<SampleCell>& per_radius) {
    try {
        const std::uint64_t seed =
            sample_seed(cfg.master_seed, static_cast<std::uint64_t>(sample));
        const RootForm rf = gen_random_poly(cfg.degree, cfg.root_disk, seed);
        const Polynomial F = from_roots(rf);
        for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
            SampleCell& cell = per_radius[ri];
            try {
                const UnwindingSeries series =
                    unwind(F, RadiusSchedule::fixed(cfg.radii[ri]), cfg.degree);
                const std::vector<double> errs =
                    partial_errors_all_l(F, series, l_eff, cfg.quad_tol);
                cell.log_errors.resize(errs.size());
                for (std::size_t i = 0; i < errs.size(); ++i) {
                    cell.log_errors[i] = floored_log(errs[i]);
                }
            } catch (const std::exception&) {
                cell.failed = true;
            }
        }
    } catch (const std::exception&) {
        for (SampleCell& cell : per_radius) cell.failed = true;
    }
}

void run_taylor_sample(const SweepConfig& cfg, int l_eff, int sample,
                       std::vector<SampleCell>& per_radius) {
    SampleCell computed;
    try {
        const std::uint64_t seed =
            sample_seed(cfg.master_seed, static_cast<std::uint64_t>(sample));
        const RootForm rf = gen_random_poly(cfg.degree, cfg.root_disk, seed);
        const Polynomial F = from_roots(rf);
        const std::vector<double> errs = taylor_errors_all_l(F, l_eff, cfg.quad_tol);
        computed.log_errors.resize(errs.size());
        for (std::size_t i = 0; i < errs.size(); ++i) {
            computed.log_errors[i] = floored_log(errs[i]);
        }
    } catch (const std::exception&) {
        computed.failed = true;
    }
    for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) per_radius[ri] = computed;
}

template <class SampleRunner>
SweepResult run_sweep(const SweepConfig& cfg, bool parallel, SampleRunner runner) {
    validate(cfg);
    const int l_eff = effective_l_max(cfg);
    std::vector<std::vector<SampleCell>> cells(
        static_cast<std::size_t>(cfg.samples),
        std::vector<SampleCell>(cfg.radii.size()));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < cfg.samples; ++s) {
            runner(cfg, l_eff, s, cells[static_cast<std::size_t>(s)]);
        }
    } else {
        for (int s = 0; s < cfg.samples; ++s) {
            runner(cfg, l_eff, s, cells[static_cast<std::size_t>(s)]);
        }
    }
    return aggregate(cfg, l_eff, cells);
}

/// Sign proxy for (1/2)||F||_D^2 - ||G||_D^2 with F = (z-m)^n factored at
/// radius 1, evaluated in log space so large n never overflows. For m >= 1
/// nothing is captured, G = F, and the sign is negative outright.
double m0_objective(int n, double m, const std::vector<double>& log_binom) {
    if (m >= 1.0) return -1.0;
    const double logm = std::log(m);
    double max_f = -1e308, max_g = -1e308;
    for (int k = 1; k <= n; ++k) {
        const double base = std::log(static_cast<double>(k)) + 2.0 * log_binom[static_cast<std::size_t>(k)];
        max_f = std::max(max_f, base + 2.0 * (n - k) * logm);
        max_g = std::max(max_g, base + 2.0 * k * logm);
    }
    double sum_f = 0.0, sum_g = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double base = std::log(static_cast<double>(k)) + 2.0 * log_binom[static_cast<std::size_t>(k)];
        sum_f += std::exp(base + 2.0 * (n - k) * logm - max_f);
        sum_g += std::exp(base + 2.0 * k * logm - max_g);
    }
    const double log_half_f = std::log(0.5) + max_f + std::log(sum_f);
    const double log_g = max_g + std::log(sum_g);
    return log_half_f - log_g;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(master_seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

RootForm gen_random_poly(int n, double m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_poly requires n >= 1");
    if (!(m > 0.0)) throw std::invalid_argument("gen_random_poly requires m > 0");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    RootForm rf;
    rf.lead = Complex{1.0, 0.0};
    rf.roots.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double modulus = m * std::sqrt(unit());
        const double angle = kTwoPi * unit();
        rf.roots.push_back(std::polar(modulus, angle));
    }
    return rf;
}

SweepResult error_sweep(const SweepConfig& config) {
    return run_sweep(config, true, run_unwind_sample);
}

SweepResult error_sweep_serial(const SweepConfig& config) {
    return run_sweep(config, false, run_unwind_sample);
}

SweepResult compare_taylor(const SweepConfig& config) {
    return run_sweep(config, true, run_taylor_sample);
}

SweepResult compare_taylor_serial(const SweepConfig& config) {
    return run_sweep(config, false, run_taylor_sample);
}

std::vector<std::pair<int, double>> m0_scan(const std::vector<int>& n_list,
                                            double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("m0_scan requires tol > 0");
    for (int n : n_list) {
        if (n < 2) throw std::invalid_argument("m0_scan requires every n >= 2");
    }
    std::vector<std::pair<int, double>> out(n_list.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(n_list.size()); ++i) {
        try {
            const int n = n_list[static_cast<std::size_t>(i)];
            std::vector<double> log_binom(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) {
                log_binom[static_cast<std::size_t>(k)] =
                    std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
            }
            double lo = 1e-8, hi = 2.0;
            if (!(m0_objective(n, lo, log_binom) > 0.0) ||
                !(m0_objective(n, hi, log_binom) < 0.0)) {
                throw BracketInvalid("m0_scan: no sign change over (0, 2]");
            }
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if (m0_objective(n, mid, log_binom) > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out[static_cast<std::size_t>(i)] = {n, 0.5 * (lo + hi)};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::string to_csv(const SweepResult& result) {
    std::string out = "radius,L,mean_log_error,std_log_error,samples_ok,samples_failed\n";
    char buf[160];
    for (const SweepRow& row : result.rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%d,%.17g,%.17g,%d,%d\n", row.radius,
                      row.l, row.mean_log_error, row.std_log_error, row.samples_ok,
                      row.samples_failed);
        out += buf;
    }
    return out;
}

}  // namespace unwinding
