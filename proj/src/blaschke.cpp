#include "unwinding/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unwinding/errors.hpp"
#include "unwinding/quadrature.hpp"

namespace unwinding {

Complex RBlaschkeProduct::operator()(Complex z) const {
    // Each factor is computed as (z - a) / (r - (conj(a)/r) z), which equals
    // (z - a) r / (r^2 - conj(a) z) without ever forming r^2.
    Complex out{1.0, 0.0};
    for (const Complex& a : captured) {
        const Complex denom = radius - (std::conj(a) / radius) * z;
        if (denom == Complex{}) {
            throw PoleEvaluation("r-Blaschke product evaluated at a pole");
        }
        out *= (z - a) / denom;
    }
    return out;
}

Complex invert_root(Complex alpha, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw NonPositiveRadius("invert_root requires r > 0");
    }
    if (alpha == Complex{}) throw ZeroRoot("alpha = 0 has no inversion");
    if (std::abs(alpha) >= r) {
        throw RootOnOrOutsideBoundary("invert_root requires |alpha| < r");
    }
    return (r / std::conj(alpha)) * r;
}

Factorization factorize(const RootForm& rf, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw NonPositiveRadius("factorize requires r > 0");
    }
    for (const Complex& a : rf.roots) {
        if (std::abs(std::abs(a) - r) < kBoundaryTolRel * r) {
            throw RootOnBoundary("a root lies on the factorization circle; perturb r");
        }
    }

    Factorization out;
    out.b.radius = r;
    std::vector<Complex> g{rf.lead};
    for (const Complex& a : rf.roots) {
        if (a == Complex{}) {
            out.b.captured.push_back(a);
            for (Complex& c : g) c *= r;
        } else if (std::abs(a) < r) {
            out.b.captured.push_back(a);
            // times (1/r)(r^2 - conj(a) z) = r - (conj(a)/r) z
            const Complex c0{r, 0.0};
            const Complex c1 = -std::conj(a) / r;
            std::vector<Complex> next(g.size() + 1, Complex{});
            for (std::size_t i = 0; i < g.size(); ++i) {
                next[i] += g[i] * c0;
                next[i + 1] += g[i] * c1;
            }
            g = std::move(next);
        } else {
            std::vector<Complex> next(g.size() + 1, Complex{});
            for (std::size_t i = 0; i < g.size(); ++i) {
                next[i] += g[i] * (-a);
                next[i + 1] += g[i];
            }
            g = std::move(next);
        }
    }
    out.g = Polynomial(std::move(g));

    const Polynomial expanded = from_roots(rf);
    const int n = static_cast<int>(rf.roots.size());
    const int samples = 8 * (n + 1);
    double max_p = 0.0;
    double max_diff = 0.0;
    for (int j = 0; j < samples; ++j) {
        const Complex z = std::polar(r, kTwoPi * j / samples);
        const double pv = std::abs(expanded(z));
        const double diff = std::abs(expanded(z) - out.b(z) * out.g(z));
        max_p = std::max(max_p, pv);
        max_diff = std::max(max_diff, diff);
    }
    out.residual = max_p > 0.0 ? max_diff / max_p : 0.0;
    return out;
}

double log_derivative_modulus(const RBlaschkeProduct& b, double t) {
    // (r^2 - |a|^2) / (r |r e^{it} - a|^2) with numerator and denominator
    // divided by r^2 to keep intermediates near unit scale.
    const double r = b.radius;
    const Complex u = std::polar(1.0, t);
    double sum = 0.0;
    for (const Complex& a : b.captured) {
        const Complex beta = a / r;
        sum += (1.0 - std::norm(beta)) / (r * std::norm(u - beta));
    }
    return sum;
}

OneStepEnergies one_step_energies(const Polynomial& F, Complex alpha, double r,
                                  int N) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw NonPositiveRadius("one_step_energies requires r > 0");
    }
    if (std::abs(alpha) >= r) {
        throw RootOutsideDisk("one_step_energies requires |alpha| < r");
    }
    if (N < 8 * (F.degree() + 2)) {
        throw std::invalid_argument("one_step_energies requires N >= 8*(degree(F)+2)");
    }
    const Polynomial f = F * Polynomial({-alpha, Complex{1.0, 0.0}});
    const Polynomial g = F * Polynomial({Complex{r, 0.0}, -std::conj(alpha) / r});
    const Polynomial fp = f.derivative();
    const Polynomial gp = g.derivative();

    OneStepEnergies out;
    const double step = kTwoPi / N;
    for (int j = 0; j < N; ++j) {
        const Complex z = std::polar(r, step * j);
        out.f_prime_energy += std::norm(fp(z));
        out.g_prime_energy += std::norm(gp(z));
        out.f_energy += std::norm(F(z));
    }
    out.f_prime_energy *= step;
    out.g_prime_energy *= step;
    out.f_energy *= step;
    return out;
}

}  // namespace unwinding
