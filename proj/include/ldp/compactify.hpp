#pragma once

#include "ldp/arith.hpp"
#include "ldp/multipoly.hpp"
#include "ldp/rdp.hpp"
#include "ldp/singularity.hpp"
#include "ldp/wps.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ldp {

/// Roots a_j and multiplicities k_j of P(z) = prod (z - a_j)^{k_j}.
/// Roots are nonzero (man-cond) and pairwise distinct.
class RootConfig {
public:
    using Entry = std::pair<Rational, int>;

    /// Throws RootsInvalid (tag "man-cond" for a zero root, "roots" otherwise).
    static RootConfig make(std::vector<Entry> entries);
    /// "a1:k1,a2:k2,..." with rationals "p" or "p/q"; ":k" defaults to 1.
    static RootConfig parse(const std::string& text);
    /// Simple roots 1, 2, ..., d.
    static RootConfig simple(int d);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t l() const { return entries_.size(); }
    int d() const;
    /// P(z).
    UniPoly polynomial() const;
    std::string to_string() const;

private:
    std::vector<Entry> entries_;
};

/// Parse "a1:k1,a2:k2,..." without validating the entries. Throws ParseError.
std::vector<RootConfig::Entry> parse_root_entries(const std::string& text);

/// A named condition check as surfaced in reports.
struct ConditionCheck {
    std::string tag;
    bool passed = false;
    std::string detail;
};

struct WeightPair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    /// a = r0 + k n with r0 the residue of c u in [1, n].
    std::int64_t k = 0;
    /// Member of (u + kn, (d-k)n - u, 1).
    bool normalized_family = false;
    /// Member of (1 + knm, (d-k)nm - 1, m).
    bool natural_family = false;
};

struct ReducedTriple {
    std::int64_t a, b, c;
    friend auto operator<=>(const ReducedTriple&, const ReducedTriple&) = default;
};

struct WeightEnumeration {
    CyclicT data;
    std::int64_t c = 1;
    /// (a, b) with gcd(a, c) = 1, sorted by a.
    std::vector<WeightPair> pairs;
    /// Every a = c u (mod n) in [1, dnc - 1] before the gcd filter.
    std::size_t raw_count = 0;
    /// Candidates with gcd(a, c) = p > 1, divided by p and deduplicated.
    std::vector<ReducedTriple> reduced;
};

/// Throws BadInput when gcd(m, n) != 1, gcd(c, n) != 1 or d, n, c < 1.
WeightEnumeration enumerate_weights(std::int64_t d, std::int64_t n, std::int64_t m, std::int64_t c);

struct InfinityPoint {
    std::string label;
    /// Chart action with weights ordered (along C, normal to C).
    QuotientSingularity local;
    /// normalize(local).
    QuotientSingularity type;
};

struct InteriorPoint {
    std::string label;
    AdeType type;
    /// a_j for S_j = [0:0:a_j^{1/n}:1]; empty for the origin of a D/E fiber.
    std::optional<Rational> root;
    int multiplicity = 0;
};

struct CurveAtInfinity {
    Rational self_intersection;
    /// Orders of the non-smooth quotient points on C.
    std::vector<std::int64_t> orbifold_points;
    int genus = 0;
    /// C = O(divisor_degree) restricted to the surface.
    std::int64_t divisor_degree = 1;
};

enum class InteriorStatus { Smooth, Singular, Uncertified };
const char* to_string(InteriorStatus s);

struct TopologyInvariants {
    std::int64_t pi1_order_M = 1;
    std::int64_t b2_M = 0;
    std::int64_t b2_Mbar = 0;
    std::int64_t chi_M = 0;
    std::int64_t chi_Mbar = 0;
    friend bool operator==(const TopologyInvariants&, const TopologyInvariants&) = default;
};

/// Log del Pezzo compactification of a class-T deformation fiber as a
/// hypersurface in P(a, b, c, e), coordinates [x:y:z:w], curve at infinity
/// C = (w = 0).
struct CompactificationModel {
    ClassTDescriptor descriptor;
    WeightedProjectiveSpace ambient;
    std::int64_t degree = 0;
    std::int64_t a = 0, b = 0, c = 0;

    std::optional<RootConfig> roots;   // cyclic variant
    std::vector<Rational> coefficients; // D/E variant, one per Milnor basis monomial

    MultiPoly equation{4};        // F(x, y, z, w) = 0
    MultiPoly affine_equation{3}; // F(X, Y, Z, 1)

    std::vector<InfinityPoint> infinity_singularities;
    std::vector<InteriorPoint> interior_singularities;
    InteriorStatus interior_status = InteriorStatus::Smooth;

    Rational beta;
    CurveAtInfinity curve;
    std::vector<ConditionCheck> conditions;

    bool is_cyclic() const { return descriptor.is_cyclic(); }
    const CyclicT& cyclic() const { return descriptor.cyclic(); }
    HypersurfaceClass hypersurface() const { return {ambient, degree}; }
};

/// hom, action, div and man-cond for the cyclic construction, without
/// throwing. `roots` is unvalidated input.
std::vector<ConditionCheck> cyclic_conditions(std::int64_t d, std::int64_t n, std::int64_t m, std::int64_t c,
                                              std::int64_t a, const std::vector<RootConfig::Entry>& roots);

/// xy = prod (z^n - a_j w^c)^{k_j} in P(a, b, c, n), b = dnc - a.
/// Throws BadInput, ConditionViolated (tag hom/action/div) or RootsInvalid.
CompactificationModel build_cyclic(std::int64_t d, std::int64_t n, std::int64_t m, std::int64_t c, std::int64_t a,
                                   const RootConfig& roots);

/// (a, b, c) for D_k, E_6, E_7, E_8.
std::array<std::int64_t, 3> rdp_weights(const AdeType& type);

/// w^N h(x/w^a, y/w^b, z/w^c) = 0 in P(a, b, c, 1), h = f - sum coeff_i g_i.
/// Throws InvalidIndex (including for A types) or CoefficientCountMismatch.
CompactificationModel build_rdp(const AdeType& type, const std::vector<Rational>& coefficients);

struct SmoothnessStatus {
    bool smooth = true;
    std::vector<AdeType> singular_types;
};

SmoothnessStatus smoothness_status(const RootConfig& roots);

TopologyInvariants topology(const CompactificationModel& model);

struct ExceptionalConfiguration {
    std::string label;
    AdeType type;
    DualGraph graph;
};

/// Minimal resolution of the interior rational double points; the
/// singularities left are the ones on C.
struct ResolvedModel {
    CompactificationModel base;
    std::vector<ExceptionalConfiguration> exceptional;
    Rational beta;
    /// False when interior singularities exist whose types are unknown.
    bool configurations_known = true;

    const std::vector<InfinityPoint>& singularities() const { return base.infinity_singularities; }
};

ResolvedModel minimal_resolution(const CompactificationModel& model);

/// Gradient of the affine equation at (X, Y, Z) in the chart w = 1.
std::array<Rational, 3> affine_gradient(const CompactificationModel& model, const std::array<Rational, 3>& point);

} // namespace ldp
