#pragma once

#include "unwinding/polynomial.hpp"

namespace unwinding {

/// Simultaneous (Aberth-Ehrlich) root finding.
///
/// Returns degree(p) roots with multiplicities represented by clustered
/// repeated values. Every returned root beta satisfies
/// |p(beta)| <= tol * (1 + max_k |c_k|). Exact zero roots (trailing zero
/// constant coefficients) are split off before iterating.
///
/// Throws DegreeZero for constant input and NonConvergence when max_iter is
/// exhausted with some residual still above tolerance.
RootForm find_roots(const Polynomial& p, double tol = 1e-12, int max_iter = 200);

}  // namespace unwinding
