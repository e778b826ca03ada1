#pragma once

#include <optional>
#include <utility>

#include "unwinding/polynomial.hpp"
#include "unwinding/quadrature.hpp"
#include "unwinding/unwind.hpp"

namespace unwinding {

/// Margin on the n-th power mean of the root moduli that guarantees the
/// Dirichlet contraction (laxer root-spread measure than the maximum).
inline constexpr double kPowerMeanFactor = 6.75;

/// Normalization of the boundary energy identity, pinned by the F = z case.
inline constexpr double kEnergyIdentityKappa = 1.0 / kTwoPi;

struct ContractionReport {
    double lhs = 0.0;  ///< squared Dirichlet norm of the (scaled) outer factor
    double rhs = 0.0;  ///< half the squared Dirichlet norm of the input
    bool holds = false;
    double lambda_used = 0.0;
    double slack = 0.0;  ///< rhs - lhs
};

/// sum_{k>=1} k |c_k|^2; insensitive to the constant term.
double dirichlet_norm_sq(const Polynomial& p);

/// Squared L^2 boundary error of the L-term partial sum on the unit circle,
/// by doubling trapezoid quadrature converged to quad_tol relative.
double l2_error_sq(const Polynomial& F, const UnwindingSeries& s, int L,
                   double quad_tol);

/// Scale the (monic) roots down by lambda (default 6.15 * max modulus, or 1
/// when every root is zero), factor at radius 1, and compare Dirichlet norms.
ContractionReport contraction_615(const RootForm& rf,
                                  std::optional<double> lambda = std::nullopt);

/// Same pipeline with lambda defaulting to 6.75 times the n-th power mean of
/// the root moduli.
ContractionReport contraction_power_mean(const RootForm& rf,
                                         std::optional<double> lambda = std::nullopt);

/// Factor the unscaled monic polynomial at radius lambda (full capture
/// required; LambdaTooSmall otherwise) and compare
/// ||lambda^{-n} G||^2 against half the input norm.
ContractionReport contraction_lambda(const RootForm& rf, double lambda);

/// Residuals of the two radius-change identities, as max coefficient
/// discrepancies relative to the largest coefficient involved.
///
/// res1: the outer factor of F_lambda at radius gamma against the outer
/// factor of F_gamma(gamma z / lambda) at radius lambda (requires
/// max |alpha_i| < gamma < lambda; HypothesisViolated otherwise).
/// res2: gamma^n G_gamma(lambda z) against lambda^n G_lambda(gamma z), with
/// G_gamma from factoring F_gamma at radius lambda and G_lambda from
/// factoring F_lambda at radius gamma; needs no bound on the roots.
std::pair<double, double> scaling_equivalence(const RootForm& rf, double gamma,
                                              double lambda);

/// | (||F||_D^2 - ||G||_D^2) - kappa * integral of |G(e^{it})|^2 *
/// sum_i (1-|alpha_i|^2)/|e^{it}-alpha_i|^2 |, relative to ||F||_D^2, for the
/// radius-1 factorization. All roots must lie strictly inside the unit disk
/// (RootNotCaptured otherwise).
double energy_identity_residual(const RootForm& rf,
                                double kappa = kEnergyIdentityKappa);

/// Closed-form argmax of M^k C(n,k) over 1 <= k <= n-1:
/// min(n-1, max(ceil((M n - 1)/(M + 1)), 1)). Requires n > 2 and M > 0.
int max_coeff_index(int n, double M);

/// Check both coefficient bounds for the scaled expansion: for every k,
/// |c_k| <= C(n,k) (eps/lambda)^{n-k} and
/// |c_k| <= C(n,k) ((1/n) sum |alpha_i/lambda|^n)^{1-k/n}.
bool coeff_bound_check(const RootForm& rf, double lambda);

}  // namespace unwinding
