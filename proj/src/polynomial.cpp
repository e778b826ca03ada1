#include "unwinding/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unwinding/errors.hpp"

namespace unwinding {

namespace {

void check_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("polynomial coefficient is not finite");
        }
    }
}

std::vector<Complex> convolve(const std::vector<Complex>& a,
                              const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() + b.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
    check_finite(coeffs_);
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc{};
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial{};
    std::vector<Complex> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial{};
    return Polynomial(convolve(coeffs_, other.coeffs_));
}

Polynomial from_roots(const RootForm& rf) {
    std::vector<Complex> acc{rf.lead};
    for (const Complex& alpha : rf.roots) {
        acc = convolve(acc, {-alpha, Complex{1.0, 0.0}});
    }
    return Polynomial(std::move(acc));
}

RootForm scale_roots(const RootForm& rf, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw NonPositiveLambda("scale_roots requires a positive finite lambda");
    }
    RootForm out;
    out.lead = rf.lead;
    out.roots.reserve(rf.roots.size());
    for (const Complex& alpha : rf.roots) out.roots.push_back(alpha / lambda);
    return out;
}

Polynomial recenter(const Polynomial& p) {
    std::vector<Complex> coeffs = p.coeffs();
    coeffs[0] = Complex{};
    return Polynomial(std::move(coeffs));
}

std::vector<std::pair<double, Complex>> boundary_trace(const Polynomial& p,
                                                       double r, int N) {
    if (!(r > 0.0)) throw std::invalid_argument("boundary_trace requires r > 0");
    if (N < 2) throw std::invalid_argument("boundary_trace requires N >= 2");
    std::vector<std::pair<double, Complex>> out;
    out.reserve(static_cast<std::size_t>(N));
    const double step = 2.0 * std::numbers::pi / N;
    for (int j = 0; j < N; ++j) {
        const double t = step * j;
        out.emplace_back(t, p(std::polar(r, t)));
    }
    return out;
}

}  // namespace unwinding
