#pragma once

#include "ldp/compactify.hpp"
#include "ldp/rational.hpp"
#include "ldp/wps.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ldp {

/// Point of a weighted projective space with rational coordinates.
class WPoint {
public:
    /// Throws WrongDimension on a length mismatch and BadInput for the
    /// all-zero tuple.
    WPoint(WeightedProjectiveSpace ambient, std::vector<Rational> coords);

    const WeightedProjectiveSpace& ambient() const { return ambient_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    /// Equal iff q_i = lambda^{w_i} p_i for some complex lambda != 0.
    friend bool operator==(const WPoint& p, const WPoint& q);
    std::string to_string() const;

private:
    WeightedProjectiveSpace ambient_;
    std::vector<Rational> coords_;
};

/// pi([x:y:z:w]) = [x:z:w] in P(a, c, n). Throws NotOnSurface, and
/// IndeterminateAtR2 at R2 = [0:1:0:0], the only point where pi is undefined.
WPoint project_pi(const CompactificationModel& model, const WPoint& p);

/// Weighted blow-up of M̄ at R2.
struct BlowupModel {
    CompactificationModel base;
    /// Chart actions 1/c(b, -n) and 1/n(b, -c), reduced mod the order.
    QuotientSingularity chart_s_action;
    QuotientSingularity chart_t_action;
    /// normalize(1/c(a, n)) and normalize(1/n(a, c)); order 1 means smooth.
    std::pair<QuotientSingularity, QuotientSingularity> new_singularities;
    std::string exceptional_curve = "E";
    /// Orders > 1 among the two new points, which both lie on E.
    std::vector<std::int64_t> exceptional_orbifold_points;
};

/// Throws NotCyclicVariant for D/E models.
BlowupModel blowup_at_R2(const CompactificationModel& model);

enum class PiChart { S, T };
const char* to_string(PiChart chart);

/// Chart T: (w', r) -> [w' P(r^n) : r : 1].
/// Chart S: (u', v) -> [u' prod (1 - a_j v^c)^{k_j} : 1 : v].
WPoint evaluate_pi_chart(const CompactificationModel& model, PiChart chart, const std::pair<Rational, Rational>& coords);

/// Chart S point (u', v = t^n) in chart T coordinates: w' = u' t^b, r = t^{-c}.
/// Throws DivisionByZero for t = 0.
std::pair<Rational, Rational> chart_s_to_t(const CompactificationModel& model, const Rational& u_prime,
                                           const Rational& t);

struct BlowupCenter {
    std::string label;
    /// s_j is the image of the line z^n = a_j w^c in (x = 0).
    Rational root;
    int iterations = 1;
};

/// M̄ blown up at R2 is the blow-up of P(a, c, n) at the centers s_j, each
/// k_j times; M is the complement of the listed divisors.
struct BlowupSurfaceDescription {
    WeightedProjectiveSpace base_plane;
    std::vector<BlowupCenter> centers;
    std::vector<std::string> removed_divisors;
    /// 3 + sum k_j.
    std::int64_t euler_characteristic = 3;
    /// A single center: the iterated blow-up of one smooth point.
    bool single_point = false;
};

/// Throws NotCyclicVariant.
BlowupSurfaceDescription blowup_description(const CompactificationModel& model);

struct RoundtripResult {
    bool passed = true;
    std::size_t samples = 0;
    /// Draws discarded because w' = 0 or P(r^n) = 0.
    std::size_t redrawn = 0;
    std::string first_failure;
};

/// Degree-one check of Pi through chart T with exact rational samples.
/// Throws NotCyclicVariant.
RoundtripResult roundtrip_check(const CompactificationModel& model, std::size_t sample_count, std::uint64_t seed);

} // namespace ldp
