#pragma once

#include <optional>
#include <vector>

#include "unwinding/blaschke.hpp"
#include "unwinding/polynomial.hpp"

namespace unwinding {

/// Contraction margin that guarantees a halving of the Dirichlet norm per
/// factorization step once the roots are scaled inside 1/6.15 of the circle.
inline constexpr double kContractionFactor = 6.15;

/// Roots of a recentered iterate below this modulus are treated as exact
/// zeros so the forced root at the origin is always recognized.
inline constexpr double kRootSnapTol = 1e-12;

/// Rule producing the factorization radius for each unwinding step.
struct RadiusSchedule {
    enum class Kind { kFixed, kMinimalCapture, kContraction615, kOstrowski };

    Kind kind = Kind::kFixed;
    double value = 1.0;  ///< radius for kFixed, margin (> 1) for kMinimalCapture

    static RadiusSchedule fixed(double r);
    static RadiusSchedule minimal_capture(double margin);
    static RadiusSchedule contraction_615();
    static RadiusSchedule ostrowski();
};

struct UnwindTerm {
    Complex a;           ///< G_i(0), the constant coefficient of the outer factor
    RBlaschkeProduct b;  ///< inner factor of the step
};

/// F(z) = f0 + sum_i a_i * prod_{j<=i} B_j(z), exact once the last outer
/// factor is constant (at most degree(F) terms).
struct UnwindingSeries {
    Complex f0{};
    std::vector<UnwindTerm> terms;
    std::vector<double> radii;
    std::vector<int> degrees;  ///< degree of each outer factor G_i
};

/// Radius for factoring a polynomial with the given root multiset.
///
/// Fixed: the constant radius. MinimalCapture: margin * max nonzero |root|
/// (margin alone when all roots are zero). Contraction615: the same with
/// margin 6.15. Ostrowski: max of the Contraction615 radius and
/// 6.15 * prev^2 / eps, where eps lower-bounds the nonzero root moduli via
/// the displacement bound 2 n (prod |alpha_i|)^{1/n}; when that bound gives
/// nothing positive the step falls back to Contraction615.
///
/// A radius landing within kBoundaryTolRel of a root modulus is jittered
/// multiplicatively by (1 + 1e-6), at most three times, then
/// RadiusSelectionFailed is thrown.
double next_radius(const std::vector<Complex>& current_roots,
                   const RadiusSchedule& schedule,
                   std::optional<double> prev_radius);

/// Iteratively factor H_i = G_{i-1} - G_{i-1}(0) (with G_{-1} = F) at radii
/// chosen by the schedule, recording a_i = G_i(0). Stops when G_i is constant
/// or max_terms is reached; always terminates within degree(F) steps.
UnwindingSeries unwind(const Polynomial& F, const RadiusSchedule& schedule,
                       int max_terms);

/// f0 + sum_{i<L} a_i prod_{j<=i} B_j(z), products accumulated incrementally.
Complex eval_partial(const UnwindingSeries& s, int L, Complex z);

/// F(0) + sum_{k=1..L} c_k z^k, the power-series baseline.
Complex taylor_partial(const Polynomial& F, int L, Complex z);

}  // namespace unwinding
