#include "unwinding/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "unwinding/errors.hpp"

namespace unwinding {

namespace {

// Value and derivative in one Horner pass.
void eval_with_derivative(const std::vector<Complex>& c, Complex z,
                          Complex& value, Complex& deriv) {
    Complex v{};
    Complex d{};
    for (std::size_t k = c.size(); k-- > 0;) {
        d = d * z + v;
        v = v * z + c[k];
    }
    value = v;
    deriv = d;
}

// Horner value plus the evaluation scale sum_k |c_k| |z|^k, the natural
// backward-error denominator.
void eval_with_scale(const std::vector<Complex>& c, Complex z, Complex& value,
                     double& scale) {
    Complex v{};
    double s = 0.0;
    const double az = std::abs(z);
    for (std::size_t k = c.size(); k-- > 0;) {
        v = v * z + c[k];
        s = s * az + std::abs(c[k]);
    }
    value = v;
    scale = s;
}

}  // namespace

RootForm find_roots(const Polynomial& p, double tol, int max_iter) {
    if (p.degree() < 1 || p.is_zero()) {
        throw DegreeZero("find_roots requires degree >= 1");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("find_roots requires tol > 0");
    if (max_iter < 1) throw std::invalid_argument("find_roots requires max_iter >= 1");

    const std::vector<Complex>& full = p.coeffs();
    const double resid_tol = tol * (1.0 + p.max_abs_coeff());

    RootForm out;
    out.lead = full.back();

    // Exact zero roots come out verbatim; they are exact by construction in
    // recentered polynomials.
    std::vector<Complex> c(full);
    while (c.size() > 1 && c.front() == Complex{}) {
        out.roots.push_back(Complex{});
        c.erase(c.begin());
    }
    const int d = static_cast<int>(c.size()) - 1;
    if (d == 0) return out;

    std::vector<Complex> monic(c);
    for (Complex& x : monic) x /= out.lead;

    // A root is accepted at the absolute tolerance or, for polynomials whose
    // evaluation noise floor sits above it, at backward error tol (the root
    // is exact for coefficients perturbed relatively by tol).
    auto root_accepted = [&](Complex z) {
        Complex v;
        double scale;
        eval_with_scale(full, z, v, scale);
        const double av = std::abs(v);
        return av <= resid_tol || av <= tol * scale;
    };
    auto all_accepted = [&](const std::vector<Complex>& z) {
        for (const Complex& zi : z) {
            if (!root_accepted(zi)) return false;
        }
        return true;
    };

    // Initial guesses on a circle slightly outside a scale-invariant root
    // bound (max_k |c_k/c_d|^{1/(d-k)} is within a factor 2 of the largest
    // root modulus).
    double bound = 0.0;
    for (int k = 0; k < d; ++k) {
        const double a = std::abs(monic[static_cast<std::size_t>(k)]);
        if (a > 0.0) bound = std::max(bound, std::pow(a, 1.0 / (d - k)));
    }
    const double radius = 1.0 + bound;

    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / d + 0.7;
        z[static_cast<std::size_t>(i)] = std::polar(radius, angle);
    }

    // Aberth-Ehrlich sweeps; after the first fully accepted sweep, two more
    // polish sweeps tighten multiple-root clusters.
    int accepted_sweeps = 0;
    for (int iter = 0; iter < max_iter && accepted_sweeps < 3; ++iter) {
        for (int i = 0; i < d; ++i) {
            Complex v, dv;
            eval_with_derivative(monic, z[static_cast<std::size_t>(i)], v, dv);
            if (v == Complex{}) continue;
            if (dv == Complex{}) {
                z[static_cast<std::size_t>(i)] *= Complex{1.0 + 1e-6, 1e-6};
                continue;
            }
            const Complex w = v / dv;
            Complex sum{};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Complex diff = z[static_cast<std::size_t>(i)] -
                               z[static_cast<std::size_t>(j)];
                if (diff == Complex{}) {
                    diff = Complex{
                        1e-12 * (1.0 + std::abs(z[static_cast<std::size_t>(i)])), 0.0};
                }
                sum += 1.0 / diff;
            }
            Complex denom = 1.0 - w * sum;
            if (denom == Complex{}) denom = Complex{1e-16, 0.0};
            z[static_cast<std::size_t>(i)] -= w / denom;
        }
        accepted_sweeps = all_accepted(z) ? accepted_sweeps + 1 : 0;
    }
    if (accepted_sweeps == 0) {
        throw NonConvergence("find_roots: residual above tolerance after max_iter sweeps");
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
    return out;
}

}  // namespace unwinding
