#pragma once

#include <vector>

#include "unwinding/polynomial.hpp"

namespace unwinding {

/// Roots within this relative band of the circle |z| = r make a
/// factorization ill-defined; callers must perturb the radius.
inline constexpr double kBoundaryTolRel = 1e-9;

/// Finite product of factors (z - alpha) r / (r^2 - conj(alpha) z) with every
/// captured |alpha| < radius. Unit modulus on |z| = radius. Never expanded;
/// evaluated factor by factor.
struct RBlaschkeProduct {
    double radius = 1.0;
    std::vector<Complex> captured;

    /// Factor-wise evaluation; throws PoleEvaluation at a pole.
    Complex operator()(Complex z) const;
};

struct Factorization {
    RBlaschkeProduct b;
    Polynomial g;
    /// max over boundary samples of |P - B*G| relative to max |P|.
    double residual = 0.0;
};

/// Reflection of a captured root across |z| = r: alpha -> r^2 / conj(alpha).
/// Throws ZeroRoot for alpha = 0 and RootOnOrOutsideBoundary for |alpha| >= r.
Complex invert_root(Complex alpha, double r);

/// Split lead * prod (z - alpha_i) into B * G at radius r. B collects every
/// root with |alpha| < r; each nonzero captured root contributes the factor
/// (1/r)(r^2 - conj(alpha) z) to G and each zero root contributes the
/// constant r, so the identity P = B * G holds exactly. Uncaptured roots stay
/// in G verbatim.
Factorization factorize(const RootForm& rf, double r);

/// |B_r'(r e^{it})| = sum_j (r^2 - |alpha_j|^2) / (r |r e^{it} - alpha_j|^2).
double log_derivative_modulus(const RBlaschkeProduct& b, double t);

struct OneStepEnergies {
    double f_prime_energy = 0.0;  ///< integral of |f'(r e^{it})|^2 with f = (z-alpha) F
    double g_prime_energy = 0.0;  ///< integral of |g'(r e^{it})|^2 with g = (1/r)(r^2 - conj(alpha) z) F
    double f_energy = 0.0;        ///< integral of |F(r e^{it})|^2
};

/// The three boundary energies above on N uniform trapezoid angles.
/// Requires |alpha| < r (RootOutsideDisk otherwise) and
/// N >= 8 * (degree(F) + 2).
OneStepEnergies one_step_energies(const Polynomial& F, Complex alpha, double r,
                                  int N);

}  // namespace unwinding
