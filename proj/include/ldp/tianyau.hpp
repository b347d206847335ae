#pragma once

#include "ldp/compactify.hpp"
#include "ldp/rational.hpp"

namespace ldp {

/// Numerical hypotheses of the Tian-Yau construction for (M̄, C).
struct TianYauReport {
    Rational beta;
    bool beta_gt_one = false;
    /// Sing(M̄) lies on C.
    bool singularities_on_divisor = false;
    bool divisor_almost_ample = false;
    /// Every quotient point on C has a smooth uniformized preimage of C.
    bool divisor_admissible = false;
    Rational C_squared;
    /// 2 / (beta - 1); reported next to C_squared, not compared.
    Rational decay_rhs;
    Rational adjunction_residual;
};

/// K.C + C^2 - (-2 + sum (1 - 1/r_i)) with K = -beta C; zero when the
/// singularity table, beta and C^2 are mutually consistent.
Rational orbifold_adjunction_residual(const CompactificationModel& model);

TianYauReport check_hypotheses(const ResolvedModel& resolved);

/// Same checks on the unresolved surface: interior singular points count
/// against singularities_on_divisor.
TianYauReport check_hypotheses(const CompactificationModel& model);

} // namespace ldp
