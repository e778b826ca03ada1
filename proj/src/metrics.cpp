#include "unwinding/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unwinding/errors.hpp"
#include "unwinding/quadrature.hpp"

namespace unwinding {

namespace {

void require_monic(const RootForm& rf) {
    if (std::abs(rf.lead - Complex{1.0, 0.0}) > 1e-12) {
        throw std::invalid_argument("a monic root form is required");
    }
}

ContractionReport make_report(double lhs, double rhs, double lambda) {
    ContractionReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.lambda_used = lambda;
    r.slack = rhs - lhs;
    r.holds = lhs <= rhs + 1e-12 * (1.0 + rhs);
    return r;
}

double max_root_modulus(const RootForm& rf) {
    double m = 0.0;
    for (const Complex& a : rf.roots) m = std::max(m, std::abs(a));
    return m;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

Polynomial scaled_coeffs(const Polynomial& p, double factor) {
    std::vector<Complex> c = p.coeffs();
    for (Complex& x : c) x *= factor;
    return Polynomial(std::move(c));
}

/// p(s z) via coefficient scaling: coefficient k picks up s^k.
Polynomial compose_linear(const Polynomial& p, double s) {
    std::vector<Complex> c = p.coeffs();
    double pow_s = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= pow_s;
        pow_s *= s;
    }
    return Polynomial(std::move(c));
}

double max_rel_coeff_diff(const Polynomial& p, const Polynomial& q) {
    const std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
    double scale = std::max(p.max_abs_coeff(), q.max_abs_coeff());
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        worst = std::max(worst, std::abs(p.coeff(k) - q.coeff(k)));
    }
    return worst / scale;
}

}  // namespace

double dirichlet_norm_sq(const Polynomial& p) {
    double sum = 0.0;
    const std::vector<Complex>& c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); ++k) {
        sum += static_cast<double>(k) * std::norm(c[k]);
    }
    return sum;
}

double l2_error_sq(const Polynomial& F, const UnwindingSeries& s, int L,
                   double quad_tol) {
    if (!(quad_tol > 0.0)) throw std::invalid_argument("quad_tol must be positive");
    if (L < 0 || L > static_cast<int>(s.terms.size())) {
        throw std::invalid_argument("l2_error_sq: L out of range");
    }
    double coeff_power = 0.0;
    for (const Complex& c : F.coeffs()) coeff_power += std::norm(c);
    const double abs_floor = 1e-20 * (1.0 + kTwoPi * coeff_power);
    return adaptive_periodic_trapezoid(
        [&](double t) {
            const Complex z = std::polar(1.0, t);
            return std::norm(F(z) - eval_partial(s, L, z));
        },
        quad_tol, abs_floor);
}

ContractionReport contraction_615(const RootForm& rf,
                                  std::optional<double> lambda) {
    require_monic(rf);
    const double eps = max_root_modulus(rf);
    const double lam = lambda.value_or(eps > 0.0 ? kContractionFactor * eps : 1.0);
    const RootForm scaled = scale_roots(rf, lam);
    const Factorization fact = factorize(scaled, 1.0);
    const double lhs = dirichlet_norm_sq(fact.g);
    const double rhs = 0.5 * dirichlet_norm_sq(from_roots(scaled));
    return make_report(lhs, rhs, lam);
}

ContractionReport contraction_power_mean(const RootForm& rf,
                                         std::optional<double> lambda) {
    require_monic(rf);
    const std::size_t n = rf.roots.size();
    double lam;
    if (lambda) {
        lam = *lambda;
    } else {
        double mean_pow = 0.0;
        for (const Complex& a : rf.roots) {
            mean_pow += std::pow(std::abs(a), static_cast<double>(n));
        }
        mean_pow /= static_cast<double>(n);
        const double power_mean = std::pow(mean_pow, 1.0 / static_cast<double>(n));
        lam = power_mean > 0.0 ? kPowerMeanFactor * power_mean : 1.0;
    }
    const RootForm scaled = scale_roots(rf, lam);
    const Factorization fact = factorize(scaled, 1.0);
    const double lhs = dirichlet_norm_sq(fact.g);
    const double rhs = 0.5 * dirichlet_norm_sq(from_roots(scaled));
    return make_report(lhs, rhs, lam);
}

ContractionReport contraction_lambda(const RootForm& rf, double lambda) {
    require_monic(rf);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw NonPositiveLambda("contraction_lambda requires lambda > 0");
    }
    for (const Complex& a : rf.roots) {
        if (std::abs(a) >= lambda) {
            throw LambdaTooSmall("contraction_lambda requires |root| < lambda");
        }
    }
    const Factorization fact = factorize(rf, lambda);
    const int n = static_cast<int>(rf.roots.size());
    const Polynomial g_scaled = scaled_coeffs(fact.g, std::pow(lambda, -n));
    const double lhs = dirichlet_norm_sq(g_scaled);
    const double rhs = 0.5 * dirichlet_norm_sq(from_roots(rf));
    return make_report(lhs, rhs, lambda);
}

std::pair<double, double> scaling_equivalence(const RootForm& rf, double gamma,
                                              double lambda) {
    if (!(gamma > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("scaling_equivalence requires positive radii");
    }
    const double eps = max_root_modulus(rf);
    if (!(eps < gamma && gamma < lambda)) {
        throw HypothesisViolated("res1 requires max |root| < gamma < lambda");
    }
    const int n = static_cast<int>(rf.roots.size());

    const RootForm f_lambda = scale_roots(rf, lambda);
    const Polynomial g_lambda = factorize(f_lambda, gamma).g;

    // F_gamma(gamma z / lambda) = lead (gamma/lambda)^n prod(z - lambda a_i / gamma^2)
    RootForm stretched;
    stretched.lead = rf.lead * std::pow(gamma / lambda, n);
    stretched.roots.reserve(rf.roots.size());
    for (const Complex& a : rf.roots) {
        stretched.roots.push_back(a * (lambda / (gamma * gamma)));
    }
    const Polynomial g_gamma_alt = factorize(stretched, lambda).g;
    const double res1 = max_rel_coeff_diff(g_lambda, g_gamma_alt);

    const RootForm f_gamma = scale_roots(rf, gamma);
    const Polynomial g_gamma = factorize(f_gamma, lambda).g;
    const Polynomial lhs =
        scaled_coeffs(compose_linear(g_gamma, lambda), std::pow(gamma, n));
    const Polynomial rhs =
        scaled_coeffs(compose_linear(g_lambda, gamma), std::pow(lambda, n));
    const double res2 = max_rel_coeff_diff(lhs, rhs);

    return {res1, res2};
}

double energy_identity_residual(const RootForm& rf, double kappa) {
    for (const Complex& a : rf.roots) {
        if (std::abs(a) >= 1.0) {
            throw RootNotCaptured("energy identity requires all roots inside the unit disk");
        }
    }
    const Polynomial F = from_roots(rf);
    const Factorization fact = factorize(rf, 1.0);
    const double df = dirichlet_norm_sq(F);
    const double dg = dirichlet_norm_sq(fact.g);
    const double integral = adaptive_periodic_trapezoid(
        [&](double t) {
            const Complex z = std::polar(1.0, t);
            double kernel = 0.0;
            for (const Complex& a : rf.roots) {
                kernel += (1.0 - std::norm(a)) / std::norm(z - a);
            }
            return std::norm(fact.g(z)) * kernel;
        },
        1e-10, 1e-300);
    return std::abs((df - dg) - kappa * integral) / df;
}

int max_coeff_index(int n, double M) {
    if (n <= 2 || !(M > 0.0) || !std::isfinite(M)) {
        throw DomainError("max_coeff_index requires n > 2 and M > 0");
    }
    const double x = (M * n - 1.0) / (M + 1.0);
    long m = static_cast<long>(std::ceil(x));
    m = std::max(m, 1L);
    m = std::min(m, static_cast<long>(n - 1));
    return static_cast<int>(m);
}

bool coeff_bound_check(const RootForm& rf, double lambda) {
    require_monic(rf);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw NonPositiveLambda("coeff_bound_check requires lambda > 0");
    }
    const int n = static_cast<int>(rf.roots.size());
    if (n == 0) return true;
    const RootForm scaled = scale_roots(rf, lambda);
    const Polynomial p = from_roots(scaled);

    const double eps_scaled = max_root_modulus(scaled);
    double mean_pow = 0.0;
    for (const Complex& a : scaled.roots) {
        mean_pow += std::pow(std::abs(a), static_cast<double>(n));
    }
    mean_pow /= static_cast<double>(n);

    for (int k = 0; k <= n; ++k) {
        const double c = std::abs(p.coeff(static_cast<std::size_t>(k)));
        const double bin = binomial(n, k);
        const double bound_max = bin * std::pow(eps_scaled, n - k);
        const double bound_pm =
            bin * std::pow(mean_pow, 1.0 - static_cast<double>(k) / n);
        if (c > bound_max * (1.0 + 1e-9)) return false;
        if (c > bound_pm * (1.0 + 1e-9)) return false;
    }
    return true;
}

}  // namespace unwinding
