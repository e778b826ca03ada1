#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace unwinding {

using Complex = std::complex<double>;

/// Dense univariate polynomial over Complex, coefficient k multiplying z^k.
///
/// Canonical form: the coefficient vector is non-empty and its last entry is
/// nonzero unless the polynomial is identically zero. Exact zero leading
/// coefficients are trimmed on construction; nothing else is, so genuinely
/// tiny leading coefficients (which arise when factoring across large radii)
/// are preserved.
class Polynomial {
public:
    Polynomial() : coeffs_(1, Complex{}) {}
    explicit Polynomial(std::vector<Complex> coeffs);

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k; zero beyond the stored degree.
    Complex coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

    double max_abs_coeff() const;

    /// Horner evaluation.
    Complex operator()(Complex z) const;

    Polynomial derivative() const;

    Polynomial operator*(const Polynomial& other) const;

private:
    std::vector<Complex> coeffs_;
};

/// Leading coefficient plus root multiset: lead * prod (z - roots[i]).
struct RootForm {
    Complex lead{1.0, 0.0};
    std::vector<Complex> roots;
};

/// Expand lead * prod (z - alpha_i) by sequential linear-factor convolution.
Polynomial from_roots(const RootForm& rf);

/// Divide every root by lambda, keeping the leading coefficient.
/// Throws NonPositiveLambda unless lambda > 0 and finite.
RootForm scale_roots(const RootForm& rf, double lambda);

/// p - p(0); the result has an exact root at zero.
Polynomial recenter(const Polynomial& p);

/// N samples (t_j, p(r e^{i t_j})) with t_j = 2*pi*j/N, j = 0..N-1.
std::vector<std::pair<double, Complex>> boundary_trace(const Polynomial& p,
                                                       double r, int N);

}  // namespace unwinding
