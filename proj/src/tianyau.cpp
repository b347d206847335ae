#include "ldp/tianyau.hpp"

#include "ldp/arith.hpp"

namespace ldp {

Rational orbifold_adjunction_residual(const CompactificationModel& model)
{
    const Rational& c2 = model.curve.self_intersection;
    const Rational kc = -(model.beta * c2);
    Rational orbifold_degree = -2;
    for (std::int64_t r : model.curve.orbifold_points)
        orbifold_degree += Rational(1) - Rational(1, r);
    return kc + c2 - orbifold_degree;
}

namespace {

bool admissible(const CompactificationModel& model)
{
    // In the chart at a quotient point C is the image of (normal coordinate
    // = 0); its preimage is a smooth line exactly when the group acts freely
    // off the origin.
    for (const auto& p : model.infinity_singularities) {
        if (p.local.is_smooth())
            continue;
        if (gcd(p.local.q1, p.local.order) != 1 || gcd(p.local.q2, p.local.order) != 1)
            return false;
    }
    return true;
}

TianYauReport base_report(const CompactificationModel& model)
{
    TianYauReport r;
    r.beta = model.beta;
    r.beta_gt_one = model.beta > Rational(1);
    r.C_squared = model.curve.self_intersection;
    r.divisor_almost_ample = r.C_squared > Rational(0);
    r.divisor_admissible = admissible(model);
    if (r.beta_gt_one)
        r.decay_rhs = Rational(2) / (r.beta - Rational(1));
    r.adjunction_residual = orbifold_adjunction_residual(model);
    return r;
}

} // namespace

TianYauReport check_hypotheses(const ResolvedModel& resolved)
{
    TianYauReport r = base_report(resolved.base);
    r.beta = resolved.beta;
    // After resolution only the quotient points on C remain.
    r.singularities_on_divisor = resolved.configurations_known;
    return r;
}

TianYauReport check_hypotheses(const CompactificationModel& model)
{
    TianYauReport r = base_report(model);
    r.singularities_on_divisor =
        model.interior_singularities.empty() && model.interior_status != InteriorStatus::Uncertified;
    return r;
}

} // namespace ldp
