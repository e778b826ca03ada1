#include "unwinding/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "unwinding/blaschke.hpp"
#include "unwinding/errors.hpp"
#include "unwinding/quadrature.hpp"
#include "unwinding/roots.hpp"
#include "unwinding/sweep.hpp"
#include "unwinding/unwind.hpp"

namespace unwinding {

namespace {

constexpr std::uint64_t kVerifySeed = 0x5eedf00dULL;

RootForm corpus_rootform(std::uint64_t salt, int index, int max_degree, double disk) {
    const std::uint64_t seed = sample_seed(kVerifySeed ^ salt, static_cast<std::uint64_t>(index));
    const int degree = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_degree));
    return gen_random_poly(degree, disk, sample_seed(seed, 1));
}

/// Greedy nearest-neighbor multiset match; returns the largest pair distance.
double match_multisets(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const Complex& x : a) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double d = std::abs(x - b[j]);
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        worst = std::max(worst, best_dist);
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

struct Recorder {
    CheckResult result;

    explicit Recorder(std::string name) {
        result.name = std::move(name);
        result.worst_slack = std::numeric_limits<double>::max();
    }

    /// slack >= 0 counts as a pass.
    void record(double slack) {
        ++result.cases;
        if (!(slack >= 0.0)) ++result.failures;
        result.worst_slack = std::min(result.worst_slack, slack);
    }

    void record_error() {
        ++result.cases;
        ++result.failures;
        result.worst_slack = std::numeric_limits<double>::lowest();
    }
};

// ---------------------------------------------------------------- poly-core

CheckResult check_roots_roundtrip() {
    Recorder rec("poly.roots_roundtrip");
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x11, i, 20, 25.0);
        try {
            const RootForm found = find_roots(from_roots(rf));
            const double dist = match_multisets(rf.roots, found.roots);
            rec.record(1e-8 - dist);
        } catch (const Error&) {
            rec.record_error();
        }
    }
    return rec.result;
}

CheckResult check_eval_at_roots() {
    Recorder rec("poly.eval_at_roots");
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x12, i, 20, 25.0);
        const Polynomial p = from_roots(rf);
        const double tol = 1e-10 * (1.0 + p.max_abs_coeff());
        const int n = p.degree();
        for (const Complex& a : rf.roots) {
            // Expansion plus Horner carry a combined forward error of order
            // n*u per coefficient weight; for wide-disk roots that exceeds
            // the flat tolerance, so the roundoff bound is the limit there.
            double scale = 0.0;
            const double az = std::abs(a);
            for (std::size_t k = p.coeffs().size(); k-- > 0;) {
                scale = scale * az + std::abs(p.coeff(k));
            }
            const double noise = 4.0 * n * 1.1e-16 * scale;
            rec.record(std::max(tol, noise) - std::abs(p(a)));
        }
    }
    return rec.result;
}

CheckResult check_scale_roots_inverse() {
    Recorder rec("poly.scale_roots_inverse");
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x13, i, 20, 25.0);
        const double lambda = 0.25 + 0.5 * (i + 1);
        const RootForm back = scale_roots(scale_roots(rf, lambda), 1.0 / lambda);
        for (std::size_t k = 0; k < rf.roots.size(); ++k) {
            const double tol = 1e-12 * (1.0 + std::abs(rf.roots[k]));
            rec.record(tol - std::abs(back.roots[k] - rf.roots[k]));
        }
    }
    return rec.result;
}

CheckResult check_recenter_zero() {
    Recorder rec("poly.recenter_zero");
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x14, i, 20, 25.0);
        const Polynomial p = from_roots(rf);
        rec.record(std::abs(recenter(p)(Complex{})) == 0.0 ? 0.0 : -1.0);
    }
    return rec.result;
}

// ------------------------------------------------------------ blaschke-factor

CheckResult check_reconstruction() {
    Recorder rec("blaschke.reconstruction");
    const double radii[] = {1.0, 2.0, 3.0, 5.0};
    for (int i = 0; i < 40; ++i) {
        const RootForm rf = corpus_rootform(0x21, i, 30, 25.0);
        for (double r : radii) {
            try {
                rec.record(1e-9 - factorize(rf, r).residual);
            } catch (const RootOnBoundary&) {
                // ill-defined by construction; not a reconstruction failure
            }
        }
    }
    return rec.result;
}

CheckResult check_boundary_unimodular() {
    Recorder rec("blaschke.boundary_unimodular");
    const double radii[] = {1.0, 1.5, 3.0, 10.0};
    for (int i = 0; i < 25; ++i) {
        const double r = radii[i % 4];
        RootForm rf = corpus_rootform(0x22, i, 12, 0.9);
        RBlaschkeProduct b;
        b.radius = r;
        for (const Complex& a : rf.roots) b.captured.push_back(a * (0.999 * r));
        double worst = 0.0;
        for (int j = 0; j < 512; ++j) {
            const Complex z = std::polar(r, kTwoPi * j / 512.0);
            worst = std::max(worst, std::abs(std::abs(b(z)) - 1.0));
        }
        rec.record(1e-10 - worst);
    }
    return rec.result;
}

CheckResult check_outer_roots_outside() {
    Recorder rec("blaschke.outer_roots_outside");
    const double radii[] = {1.0, 2.0, 5.0};
    for (int i = 0; i < 30; ++i) {
        const RootForm rf = corpus_rootform(0x23, i, 15, 10.0);
        const double r = radii[i % 3];
        try {
            const Factorization fact = factorize(rf, r);
            if (fact.g.degree() == 0) {
                rec.record(0.0);
                continue;
            }
            const RootForm g_roots = find_roots(fact.g);
            double min_mod = std::numeric_limits<double>::infinity();
            for (const Complex& a : g_roots.roots) min_mod = std::min(min_mod, std::abs(a));
            rec.record(min_mod / r - (1.0 - 1e-8));
        } catch (const Error&) {
            rec.record_error();
        }
    }
    return rec.result;
}

CheckResult check_log_derivative_fd() {
    Recorder rec("blaschke.log_derivative_fd");
    const double radii[] = {1.0, 1.5, 3.0};
    for (int i = 0; i < 50; ++i) {
        const double r = radii[i % 3];
        RootForm rf = corpus_rootform(0x24, i, 8, 0.9);
        RBlaschkeProduct b;
        b.radius = r;
        for (const Complex& a : rf.roots) b.captured.push_back(a * (0.95 * r));
        const double h = 1e-5;
        for (int j = 0; j < 64; ++j) {
            const double t = kTwoPi * j / 64.0;
            const Complex zp = std::polar(r, t + h);
            const Complex zm = std::polar(r, t - h);
            const double fd = std::abs((b(zp) - b(zm)) / (zp - zm));
            const double analytic = log_derivative_modulus(b, t);
            rec.record(1e-6 - std::abs(analytic - fd) / std::abs(fd));
        }
    }
    return rec.result;
}

CheckResult check_one_step_inequality() {
    Recorder rec("blaschke.one_step_inequality");
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t seed = sample_seed(kVerifySeed ^ 0x25, static_cast<std::uint64_t>(i));
        const double r = 1.0 + static_cast<double>(seed % 3);
        const int deg = static_cast<int>((seed >> 8) % 6);
        // random coefficients and a captured root, from the same generator
        const RootForm coeff_src = gen_random_poly(deg + 2, 2.0, sample_seed(seed, 2));
        std::vector<Complex> coeffs(coeff_src.roots.begin(),
                                    coeff_src.roots.begin() + deg + 1);
        const Polynomial F{std::vector<Complex>(coeffs)};
        const Complex alpha = coeff_src.roots.back() / 2.0 * (r / 2.0);
        if (F.is_zero() || std::abs(alpha) >= r) {
            rec.record(0.0);
            continue;
        }
        const int n_samples = 8 * (F.degree() + 2);
        const OneStepEnergies e = one_step_energies(F, alpha, r, n_samples);
        const double bound =
            e.f_prime_energy - (1.0 - std::norm(alpha) / (r * r)) * e.f_energy;
        rec.record(bound - e.g_prime_energy + 1e-9 * e.f_prime_energy);
    }
    return rec.result;
}

CheckResult check_coefficient_reflection() {
    Recorder rec("blaschke.coefficient_reflection");
    for (int i = 0; i < 50; ++i) {
        RootForm rf = corpus_rootform(0x26, i, 20, 1.0);
        bool any_zero = false;
        for (const Complex& a : rf.roots) any_zero = any_zero || a == Complex{};
        if (any_zero) continue;
        const Polynomial f = from_roots(rf);
        const Polynomial g = factorize(rf, 1.0).g;
        const std::size_t n = rf.roots.size();
        double worst = 0.0;
        for (std::size_t k = 0; k <= n; ++k) {
            worst = std::max(worst,
                             std::abs(f.coeff(k) - std::conj(g.coeff(n - k))));
        }
        rec.record(1e-10 - worst);
    }
    return rec.result;
}

// -------------------------------------------------------------- unwind-engine

// Every schedule at degrees its radii can represent in doubles with D25
// roots: the 6.15-margin schedules escalate the radius geometrically per
// step, so they get the degree budget of the exactness gate; the
// non-escalating two run out to degree 30.
std::vector<std::pair<RadiusSchedule, int>> schedule_corpus() {
    return {{RadiusSchedule::fixed(2.5), 30},
            {RadiusSchedule::minimal_capture(1.1), 30},
            {RadiusSchedule::contraction_615(), 20},
            {RadiusSchedule::ostrowski(), 20}};
}

CheckResult check_termination_degrees() {
    Recorder rec("unwind.termination_degrees");
    for (int i = 0; i < 25; ++i) {
        for (const auto& [sched, max_degree] : schedule_corpus()) {
            const RootForm rf = corpus_rootform(0x31, i, max_degree, 25.0);
            const Polynomial F = from_roots(rf);
            try {
                const UnwindingSeries s = unwind(F, sched, F.degree());
                bool ok = static_cast<int>(s.terms.size()) <= F.degree();
                int prev = F.degree();
                for (int d : s.degrees) {
                    ok = ok && d <= prev - 1;
                    prev = d;
                }
                rec.record(ok ? 0.0 : -1.0);
            } catch (const Error&) {
                rec.record_error();
            }
        }
    }
    return rec.result;
}

CheckResult check_unwind_exactness() {
    Recorder rec("unwind.exactness");
    for (int i = 0; i < 25; ++i) {
        for (const auto& [sched, max_degree] : schedule_corpus()) {
            const RootForm rf = corpus_rootform(0x32, i, max_degree, 25.0);
            const Polynomial F = from_roots(rf);
            try {
                const UnwindingSeries s = unwind(F, sched, F.degree());
                double worst = 0.0;
                double max_f = 0.0;
                for (int j = 0; j < 256; ++j) {
                    const Complex z = std::polar(1.0, kTwoPi * j / 256.0);
                    const Complex fz = F(z);
                    max_f = std::max(max_f, std::abs(fz));
                    worst = std::max(
                        worst,
                        std::abs(fz - eval_partial(s, static_cast<int>(s.terms.size()), z)));
                }
                rec.record(1e-8 * (1.0 + max_f) - worst);
            } catch (const Error&) {
                rec.record_error();
            }
        }
    }
    return rec.result;
}

CheckResult check_monotone_error() {
    Recorder rec("unwind.monotone_error");
    const double disks[] = {1.0, 5.0};
    const double radii[] = {1.0, 2.0};
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t seed = sample_seed(kVerifySeed ^ 0x33, static_cast<std::uint64_t>(i));
        const int degree = 4 + static_cast<int>(seed % 9);
        const RootForm rf = gen_random_poly(degree, disks[i % 2], sample_seed(seed, 3));
        const Polynomial F = from_roots(rf);
        try {
            const UnwindingSeries s =
                unwind(F, RadiusSchedule::fixed(radii[(i / 2) % 2]), degree);
            double prev = l2_error_sq(F, s, 0, 1e-10);
            for (int l = 1; l <= static_cast<int>(s.terms.size()); ++l) {
                const double cur = l2_error_sq(F, s, l, 1e-10);
                rec.record(prev * (1.0 + 1e-9) + 1e-9 - cur);
                prev = cur;
            }
        } catch (const Error&) {
            rec.record_error();
        }
    }
    return rec.result;
}

CheckResult check_full_capture() {
    Recorder rec("unwind.full_capture");
    const RadiusSchedule schedules[] = {RadiusSchedule::minimal_capture(1.1),
                                        RadiusSchedule::contraction_615()};
    for (int i = 0; i < 25; ++i) {
        const RootForm rf = corpus_rootform(0x34, i, 20, 25.0);
        const Polynomial F = from_roots(rf);
        for (const RadiusSchedule& sched : schedules) {
            try {
                const UnwindingSeries s = unwind(F, sched, F.degree());
                int h_degree = F.degree();
                bool ok = true;
                for (std::size_t step = 0; step < s.terms.size(); ++step) {
                    ok = ok && static_cast<int>(s.terms[step].b.captured.size()) == h_degree;
                    h_degree = s.degrees[step];
                }
                rec.record(ok ? 0.0 : -1.0);
            } catch (const Error&) {
                rec.record_error();
            }
        }
    }
    return rec.result;
}

// ------------------------------------------------------------------- metrics

CheckResult check_dirichlet_lower_bound() {
    Recorder rec("metrics.dirichlet_lower_bound");
    for (int i = 0; i < 100; ++i) {
        const RootForm rf = corpus_rootform(0x41, i, 30, 25.0);
        const int n = static_cast<int>(rf.roots.size());
        rec.record(dirichlet_norm_sq(from_roots(rf)) - n + 1e-12 * n);
    }
    return rec.result;
}

CheckResult check_dirichlet_reflection_sum() {
    Recorder rec("metrics.dirichlet_reflection_sum");
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x42, i, 20, 1.0);
        const Polynomial f = from_roots(rf);
        const Polynomial g = factorize(rf, 1.0).g;
        const std::size_t n = rf.roots.size();
        double reflected = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            reflected += static_cast<double>(k) * std::norm(f.coeff(n - k));
        }
        const double direct = dirichlet_norm_sq(g);
        rec.record(1e-10 * (1.0 + direct) - std::abs(direct - reflected));
    }
    return rec.result;
}

CheckResult contraction_suite(const char* name, std::uint64_t salt, int cases,
                              const std::function<ContractionReport(const RootForm&)>& run) {
    Recorder rec(name);
    for (int i = 0; i < cases; ++i) {
        const RootForm rf = corpus_rootform(salt, i, 30, 25.0);
        try {
            const ContractionReport rep = run(rf);
            rec.record(rep.holds ? rep.slack + 1e-12 * (1.0 + rep.rhs) : -1.0);
        } catch (const Error&) {
            rec.record_error();
        }
    }
    return rec.result;
}

CheckResult check_energy_identity(double kappa) {
    Recorder rec("metrics.energy_identity");
    rec.record(1e-15 - energy_identity_residual(RootForm{{1.0, 0.0}, {Complex{}}}, kappa));
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x44, i, 12, 1.0);
        try {
            rec.record(1e-8 - energy_identity_residual(rf, kappa));
        } catch (const Error&) {
            rec.record_error();
        }
    }
    return rec.result;
}

CheckResult check_scaling_equivalence() {
    Recorder rec("metrics.scaling_equivalence");
    for (int i = 0; i < 50; ++i) {
        const RootForm rf = corpus_rootform(0x45, i, 10, 2.0);
        double eps = 0.0;
        for (const Complex& a : rf.roots) eps = std::max(eps, std::abs(a));
        const double gamma = std::max(2.0 * eps, 1.1);
        const double lambda = std::max(5.0 * eps, 2.2);
        try {
            const auto [res1, res2] = scaling_equivalence(rf, gamma, lambda);
            rec.record(1e-10 - res1);
            rec.record(1e-10 - res2);
        } catch (const Error&) {
            rec.record_error();
        }
    }
    // gamma = 1 reduces to the canonical-vs-variable equivalence.
    for (int i = 0; i < 10; ++i) {
        const RootForm rf = corpus_rootform(0x46, i, 8, 0.9);
        try {
            const auto [res1, res2] = scaling_equivalence(rf, 1.0, 4.0);
            rec.record(1e-10 - res1);
            rec.record(1e-10 - res2);
        } catch (const Error&) {
            rec.record_error();
        }
    }
    return rec.result;
}

CheckResult check_coeff_bounds() {
    Recorder rec("metrics.coeff_bounds");
    for (int i = 0; i < 100; ++i) {
        const RootForm rf = corpus_rootform(0x47, i, 20, 5.0);
        double eps = 0.0;
        for (const Complex& a : rf.roots) eps = std::max(eps, std::abs(a));
        const double lambda = 0.5 + 1.5 * (i % 4) + eps;
        rec.record(coeff_bound_check(rf, lambda) ? 0.0 : -1.0);
    }
    return rec.result;
}

CheckResult check_max_coeff_index() {
    Recorder rec("metrics.max_coeff_index");
    const double ms[] = {0.1, 0.5, 1.0, 6.75, 100.0};
    for (int n = 3; n <= 200; ++n) {
        for (double M : ms) {
            const int m = max_coeff_index(n, M);
            const double logM = std::log(M);
            auto log_a = [&](int k) {
                return k * logM + std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                       std::lgamma(n - k + 1.0);
            };
            int argmax = 1;
            for (int k = 2; k <= n - 1; ++k) {
                if (log_a(k) > log_a(argmax)) argmax = k;
            }
            // With exact ties either index attains the maximum.
            rec.record(m == argmax ? 0.0 : 1e-9 - std::abs(log_a(m) - log_a(argmax)));
        }
    }
    return rec.result;
}

CheckResult check_m0_threshold() {
    Recorder rec("metrics.m0_threshold");
    // (z - 0.9)^50 at lambda 1 sits beyond the equality point, so the
    // contraction must report a violation.
    RootForm peaked;
    peaked.roots.assign(50, Complex{0.9, 0.0});
    rec.record(contraction_615(peaked, 1.0).holds ? -1.0 : 0.0);

    const auto scan = m0_scan({2, 50}, 1e-7);
    const double closed_form = std::sqrt((std::sqrt(3.0) - 1.0) / 2.0);
    rec.record(1e-6 - std::abs(scan[0].second - closed_form));

    // Either side of the n = 50 threshold flips the predicate.
    const double m0 = scan[1].second;
    RootForm below;
    below.roots.assign(50, Complex{m0 - 0.02, 0.0});
    RootForm above;
    above.roots.assign(50, Complex{m0 + 0.02, 0.0});
    rec.record(contraction_615(below, 1.0).holds ? 0.0 : -1.0);
    rec.record(contraction_615(above, 1.0).holds ? -1.0 : 0.0);
    return rec.result;
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& filter,
                                    const VerifyOptions& options) {
    std::vector<std::pair<std::string, std::function<CheckResult()>>> suites = {
        {"poly.roots_roundtrip", check_roots_roundtrip},
        {"poly.eval_at_roots", check_eval_at_roots},
        {"poly.scale_roots_inverse", check_scale_roots_inverse},
        {"poly.recenter_zero", check_recenter_zero},
        {"blaschke.reconstruction", check_reconstruction},
        {"blaschke.boundary_unimodular", check_boundary_unimodular},
        {"blaschke.outer_roots_outside", check_outer_roots_outside},
        {"blaschke.log_derivative_fd", check_log_derivative_fd},
        {"blaschke.one_step_inequality", check_one_step_inequality},
        {"blaschke.coefficient_reflection", check_coefficient_reflection},
        {"unwind.termination_degrees", check_termination_degrees},
        {"unwind.exactness", check_unwind_exactness},
        {"unwind.monotone_error", check_monotone_error},
        {"unwind.full_capture", check_full_capture},
        {"metrics.dirichlet_lower_bound", check_dirichlet_lower_bound},
        {"metrics.dirichlet_reflection_sum", check_dirichlet_reflection_sum},
        {"metrics.contraction_615",
         [] {
             return contraction_suite("metrics.contraction_615", 0x51, 100,
                                      [](const RootForm& rf) { return contraction_615(rf); });
         }},
        {"metrics.contraction_power_mean",
         [] {
             return contraction_suite("metrics.contraction_power_mean", 0x52, 100,
                                      [](const RootForm& rf) { return contraction_power_mean(rf); });
         }},
        {"metrics.contraction_lambda",
         [] {
             return contraction_suite(
                 "metrics.contraction_lambda", 0x53, 50, [](const RootForm& rf) {
                     double eps = 0.0;
                     for (const Complex& a : rf.roots) eps = std::max(eps, std::abs(a));
                     return contraction_lambda(rf,
                                               std::max(kContractionFactor * eps, 1.0));
                 });
         }},
        {"metrics.energy_identity",
         [&options] { return check_energy_identity(options.energy_kappa); }},
        {"metrics.scaling_equivalence", check_scaling_equivalence},
        {"metrics.coeff_bounds", check_coeff_bounds},
        {"metrics.max_coeff_index", check_max_coeff_index},
        {"metrics.m0_threshold", check_m0_threshold},
    };

    std::vector<CheckResult> out;
    for (const auto& [name, fn] : suites) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        out.push_back(fn());
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (r.failures > 0) return false;
    }
    return true;
}

}  // namespace unwinding
