#pragma once

#include "coinv/grading_poly.hpp"
#include "coinv/numeric.hpp"
#include "coinv/partition.hpp"

namespace coinv::symfunc {

/// Schur polynomial s_lambda(x_1..x_m) by semistandard tableau
/// enumeration. Zero when lambda has more rows than m; 1 for the empty
/// shape.
GradingPoly schur_poly(const Partition& lam, int m);

/// Skew Schur polynomial s_{lam/nu}(x_1..x_m); zero unless nu is
/// contained in lam. Tableau enumeration is the primary route.
GradingPoly skew_schur_poly(const Partition& lam, const Partition& nu, int m);

/// Independent evaluation of the same polynomial through the
/// Jacobi-Trudi determinant in complete homogeneous symmetric
/// polynomials. Kept separate so the two routes can be checked against
/// each other; not used by the tableau path.
GradingPoly skew_schur_jacobi_trudi(const Partition& lam, const Partition& nu,
                                    int m);

/// Complete homogeneous symmetric polynomial h_r(x_1..x_m); h_0 = 1,
/// h_r = 0 for r < 0.
GradingPoly complete_homogeneous(int r, int m);

/// Super Schur polynomial s_lam(q/u) in k q-variables (positions
/// 0..k-1) and j u-variables (positions k..k+j-1):
/// sum over nu inside lam of s_nu(q) * s_{lam'/nu'}(u).
/// Vanishes exactly when lam_{k+1} > j.
GradingPoly super_schur(const Partition& lam, int k, int j);

/// Closed binomial form of super_schur(lam, k, j) evaluated at all
/// ones, for a single row (m) or single column (1^m). Anything else is
/// rejected.
BigInt super_schur_at_ones(const Partition& lam, int k, int j);

}  // namespace coinv::symfunc
