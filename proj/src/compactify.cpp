#include "ldp/compactify.hpp"

#include "ldp/elimination.hpp"
#include "ldp/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ldp {

// ---------------------------------------------------------------------------
// RootConfig

RootConfig RootConfig::make(std::vector<Entry> entries)
{
    if (entries.empty())
        throw Error(Errc::RootsInvalid, "root configuration is empty", "roots");
    std::set<Rational> seen;
    for (const auto& [root, k] : entries) {
        if (root.is_zero())
            throw Error(Errc::RootsInvalid, "root a_j = 0 violates a_j != 0", "man-cond");
        if (k < 1)
            throw Error(Errc::RootsInvalid, "root multiplicities must be positive", "roots");
        if (!seen.insert(root).second)
            throw Error(Errc::RootsInvalid, "roots must be pairwise distinct (repeated " + root.pretty() + ")",
                        "roots");
    }
    RootConfig out;
    out.entries_ = std::move(entries);
    return out;
}

std::vector<RootConfig::Entry> parse_root_entries(const std::string& text)
{
    std::vector<RootConfig::Entry> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   item.end());
        if (item.empty())
            throw Error(Errc::ParseError, "empty entry in root list '" + text + "'");
        auto colon = item.find(':');
        Rational root = Rational::parse(item.substr(0, colon));
        int k = 1;
        if (colon != std::string::npos) {
            std::string ks = item.substr(colon + 1);
            try {
                std::size_t used = 0;
                k = std::stoi(ks, &used);
                if (used != ks.size())
                    throw std::invalid_argument(ks);
            } catch (const std::logic_error&) {
                throw Error(Errc::ParseError, "bad multiplicity '" + ks + "' in root list");
            }
        }
        entries.emplace_back(root, k);
    }
    return entries;
}

RootConfig RootConfig::parse(const std::string& text)
{
    return make(parse_root_entries(text));
}

RootConfig RootConfig::simple(int d)
{
    std::vector<Entry> entries;
    for (int j = 1; j <= d; ++j)
        entries.emplace_back(Rational(j), 1);
    return make(std::move(entries));
}

int RootConfig::d() const
{
    int d = 0;
    for (const auto& e : entries_)
        d += e.second;
    return d;
}

UniPoly RootConfig::polynomial() const
{
    return UniPoly::from_roots(entries_);
}

std::string RootConfig::to_string() const
{
    std::string out;
    for (const auto& [root, k] : entries_) {
        if (!out.empty())
            out += ",";
        out += root.pretty() + ":" + std::to_string(k);
    }
    return out;
}

const char* to_string(InteriorStatus s)
{
    switch (s) {
    case InteriorStatus::Smooth: return "smooth";
    case InteriorStatus::Singular: return "singular";
    case InteriorStatus::Uncertified: return "uncertified";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Weights

WeightEnumeration enumerate_weights(std::int64_t d, std::int64_t n, std::int64_t m, std::int64_t c)
{
    if (d < 1 || n < 1 || c < 1)
        throw Error(Errc::BadInput, "enumerate_weights needs d, n, c >= 1");
    if (gcd(m, n) != 1)
        throw Error(Errc::BadInput, "enumerate_weights needs gcd(m, n) = 1");
    if (gcd(c, n) != 1)
        throw Error(Errc::BadInput, "enumerate_weights needs gcd(c, n) = 1");

    WeightEnumeration out;
    out.data = CyclicT::make(d, n, m);
    out.c = c;
    const std::int64_t total = d * n * c;
    const std::int64_t r0 = mod(c * out.data.u - 1, n) + 1;
    std::set<ReducedTriple> reduced;
    for (std::int64_t a = r0; a < total; a += n) {
        ++out.raw_count;
        const std::int64_t b = total - a;
        const std::int64_t p = gcd(a, c);
        if (p != 1) {
            reduced.insert({a / p, b / p, c / p});
            continue;
        }
        WeightPair pair;
        pair.a = a;
        pair.b = b;
        pair.k = (a - r0) / n;
        pair.normalized_family = c == 1 && n >= 2;
        pair.natural_family = c == m && (a - 1) % (n * m) == 0;
        out.pairs.push_back(pair);
    }
    out.reduced.assign(reduced.begin(), reduced.end());
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic construction

std::vector<ConditionCheck> cyclic_conditions(std::int64_t d, std::int64_t n, std::int64_t m, std::int64_t c,
                                              std::int64_t a, const std::vector<RootConfig::Entry>& roots)
{
    std::vector<ConditionCheck> out;
    const std::int64_t total = d * n * c;
    const std::int64_t b = total - a;
    {
        std::ostringstream os;
        os << "a + b = dnc = " << total << " with a = " << a << ", b = " << b;
        out.push_back({"hom", a >= 1 && b >= 1, os.str()});
    }
    {
        std::ostringstream os;
        bool ok = n >= 1 && mod(a * m - c, n) == 0;
        os << "a m = " << a * m << " = c = " << c << " (mod " << n << ")";
        out.push_back({"action", ok, os.str()});
    }
    {
        std::ostringstream os;
        os << "gcd(c, n) = " << gcd(c, n) << ", gcd(a, c) = " << gcd(a, c);
        out.push_back({"div", gcd(c, n) == 1 && gcd(a, c) == 1, os.str()});
    }
    {
        bool ok = std::none_of(roots.begin(), roots.end(), [](const auto& e) { return e.first.is_zero(); });
        out.push_back({"man-cond", ok, ok ? "all roots a_j != 0" : "some root a_j = 0"});
    }
    {
        std::set<Rational> distinct;
        int sum = 0;
        bool positive = true;
        for (const auto& [root, k] : roots) {
            distinct.insert(root);
            sum += k;
            positive = positive && k >= 1;
        }
        bool ok = positive && distinct.size() == roots.size() && sum == d && !roots.empty();
        std::ostringstream os;
        os << "distinct roots, sum k_j = " << sum << " (d = " << d << ")";
        out.push_back({"roots", ok, os.str()});
    }
    return out;
}

namespace {

MultiPoly cyclic_equation(std::int64_t n, std::int64_t c, const RootConfig& roots)
{
    // xy - prod (z^n - a_j w^c)^{k_j}
    MultiPoly rhs = MultiPoly::constant(4, 1);
    for (const auto& [root, k] : roots.entries()) {
        MultiPoly factor = MultiPoly::monomial(1, {0, 0, static_cast<unsigned>(n), 0}) -
                           MultiPoly::monomial(root, {0, 0, 0, static_cast<unsigned>(c)});
        rhs = rhs * pow(factor, static_cast<unsigned>(k));
    }
    return MultiPoly::monomial(1, {1, 1, 0, 0}) - rhs;
}

MultiPoly dehomogenize_w(const MultiPoly& p)
{
    MultiPoly out(3);
    for (const auto& [e, coeff] : p.terms())
        out.add_term({e[0], e[1], e[2]}, coeff);
    return out;
}

} // namespace

CompactificationModel build_cyclic(std::int64_t d, std::int64_t n, std::int64_t m, std::int64_t c, std::int64_t a,
                                   const RootConfig& roots)
{
    if (d < 1 || n < 1 || c < 1)
        throw Error(Errc::BadInput, "build_cyclic needs d, n, c >= 1");
    CyclicT data = CyclicT::make(d, n, m);

    for (const auto& check : cyclic_conditions(d, n, m, c, a, roots.entries())) {
        if (check.passed)
            continue;
        if (check.tag == "man-cond" || check.tag == "roots")
            throw Error(Errc::RootsInvalid, "root configuration invalid: " + check.detail, check.tag);
        throw Error(Errc::ConditionViolated, "condition (" + check.tag + ") violated: " + check.detail, check.tag);
    }

    CompactificationModel model;
    model.descriptor = ClassTDescriptor{data, {data}};
    model.a = a;
    model.b = d * n * c - a;
    model.c = c;
    model.ambient = WeightedProjectiveSpace({a, model.b, c, n});
    model.degree = d * n * c;
    model.roots = roots;
    model.equation = cyclic_equation(n, c, roots);
    model.affine_equation = dehomogenize_w(model.equation);
    model.conditions = cyclic_conditions(d, n, m, c, a, roots.entries());

    auto infinity_point = [](std::string label, std::int64_t order, std::int64_t along, std::int64_t normal) {
        QuotientSingularity local{order, along, normal};
        return InfinityPoint{std::move(label), local, normalize(local)};
    };
    model.infinity_singularities.push_back(infinity_point("R1", a, c, n));
    model.infinity_singularities.push_back(infinity_point("R2", model.b, c, n));

    const auto& entries = roots.entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
        const auto& [root, k] = entries[j];
        if (k >= 2)
            model.interior_singularities.push_back(
                {"S_" + std::to_string(j + 1), AdeType::make(AdeFamily::A, k - 1), root, k});
    }
    model.interior_status =
        model.interior_singularities.empty() ? InteriorStatus::Smooth : InteriorStatus::Singular;

    model.beta = Rational(c + n) / Rational(n);
    model.curve.divisor_degree = n;
    model.curve.self_intersection = hypersurface_intersection(model.hypersurface(), n, n);
    for (const auto& p : model.infinity_singularities)
        if (!p.type.is_smooth())
            model.curve.orbifold_points.push_back(p.type.order);
    return model;
}

// ---------------------------------------------------------------------------
// D/E construction

std::array<std::int64_t, 3> rdp_weights(const AdeType& type)
{
    AdeType t = AdeType::make(type.family, type.rank);
    switch (t.family) {
    case AdeFamily::D:
        return {t.rank - 2, 2, t.rank - 1};
    case AdeFamily::E:
        if (t.rank == 6)
            return {3, 4, 6};
        if (t.rank == 7)
            return {4, 6, 9};
        return {6, 10, 15};
    case AdeFamily::A:
        break;
    }
    throw Error(Errc::InvalidIndex, "A-type points are compactified by the cyclic construction with n = 1");
}

namespace {

// Orders of the quotient points on C, all of type 1/r(1,1).
std::vector<std::int64_t> rdp_infinity_orders(const AdeType& t)
{
    if (t.family == AdeFamily::D)
        return {2, 2, t.rank - 2};
    switch (t.rank) {
    case 6: return {3, 3, 2};
    case 7: return {2, 3, 4};
    default: return {2, 3, 5};
    }
}

InteriorStatus certify_rdp_fiber(const RDPData& data, const MultiPoly& h)
{
    // Basis monomials avoid z, so dh/dz = 2z and singular points lie on z = 0.
    for (const auto& g : data.milnor_basis)
        if (g[2] != 0)
            return InteriorStatus::Uncertified;
    MultiPoly planar(2);
    for (const auto& [e, coeff] : h.terms())
        if (e[2] == 0)
            planar.add_term({e[0], e[1]}, coeff);
    std::vector<MultiPoly> system{planar, planar.derivative(0), planar.derivative(1)};
    return certify_no_common_zero(system) ? InteriorStatus::Smooth : InteriorStatus::Uncertified;
}

} // namespace

CompactificationModel build_rdp(const AdeType& type, const std::vector<Rational>& coefficients)
{
    auto weights = rdp_weights(type);
    RDPData data = rdp_data(type);
    if (coefficients.size() != data.milnor_basis.size())
        throw Error(Errc::CoefficientCountMismatch,
                    "expected " + std::to_string(data.milnor_basis.size()) + " deformation coefficients for " +
                        data.type.name() + ", got " + std::to_string(coefficients.size()));

    CompactificationModel model;
    model.descriptor = ClassTDescriptor{data.type, {}};
    model.a = weights[0];
    model.b = weights[1];
    model.c = weights[2];
    model.ambient = WeightedProjectiveSpace({model.a, model.b, model.c, 1});
    model.degree = model.a + model.b + model.c - 1;
    model.coefficients = coefficients;

    MultiPoly h = data.f;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        h -= MultiPoly::monomial(coefficients[i], data.milnor_basis[i]);
    model.affine_equation = h;
    model.equation = h.homogenize(weights, model.degree);

    const bool quasi_homogeneous = data.f.is_quasi_homogeneous(weights, model.degree);
    {
        std::ostringstream os;
        os << "N = a + b + c - 1 = " << model.degree << (quasi_homogeneous ? "; f quasi-homogeneous of degree N"
                                                                            : "; f NOT quasi-homogeneous of degree N");
        model.conditions.push_back({"hom", quasi_homogeneous, os.str()});
    }
    model.conditions.push_back({"action", true, "w has weight 1, so U_w = C^3"});
    {
        std::int64_t g = gcd(std::span<const std::int64_t>(weights));
        bool ok = g == 1 && is_well_formed(model.ambient);
        model.conditions.push_back({"div", ok, "gcd(a, b, c) = " + std::to_string(g)});
    }
    model.conditions.push_back({"man-cond", true, "vacuous: no roots in the D/E construction"});

    const auto orders = rdp_infinity_orders(data.type);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        QuotientSingularity local{orders[i], 1, 1};
        model.infinity_singularities.push_back({"P_" + std::to_string(i + 1), local, normalize(local)});
    }

    const bool central = std::all_of(coefficients.begin(), coefficients.end(), [](const auto& x) { return x.is_zero(); });
    if (central) {
        model.interior_singularities.push_back({"S_0", data.type, std::nullopt, 0});
        model.interior_status = InteriorStatus::Singular;
    } else {
        model.interior_status = certify_rdp_fiber(data, h);
    }

    model.beta = 2;
    model.curve.divisor_degree = 1;
    model.curve.self_intersection = hypersurface_intersection(model.hypersurface(), 1, 1);
    for (const auto& p : model.infinity_singularities)
        if (!p.type.is_smooth())
            model.curve.orbifold_points.push_back(p.type.order);
    return model;
}

// ---------------------------------------------------------------------------

SmoothnessStatus smoothness_status(const RootConfig& roots)
{
    SmoothnessStatus out;
    std::map<int, long> by_multiplicity;
    for (const auto& [root, k] : roots.entries()) {
        ++by_multiplicity[k];
        if (k >= 2) {
            out.smooth = false;
            out.singular_types.push_back(AdeType::make(AdeFamily::A, k - 1));
        }
    }
    // The squarefree decomposition of P must see the same multiplicities.
    auto profile = multiplicity_profile(roots.polynomial());
    std::map<int, long> from_profile;
    for (const auto& part : profile)
        from_profile[part.multiplicity] += part.degree;
    if (from_profile != by_multiplicity)
        throw std::logic_error("smoothness_status: multiplicity profile disagrees with root data");
    return out;
}

TopologyInvariants topology(const CompactificationModel& model)
{
    TopologyInvariants t;
    if (model.is_cyclic()) {
        const auto& data = model.cyclic();
        t.pi1_order_M = data.n;
        t.chi_M = data.d;
        t.b2_M = data.d - 1;
        t.b2_Mbar = data.d;
        t.chi_Mbar = data.d + 2;
    } else {
        const int mu = model.descriptor.rdp().milnor_number();
        t.pi1_order_M = 1;
        t.b2_M = mu;
        t.chi_M = mu + 1;
        t.b2_Mbar = mu + 1;
        t.chi_Mbar = mu + 3;
    }
    return t;
}

ResolvedModel minimal_resolution(const CompactificationModel& model)
{
    ResolvedModel out;
    out.base = model;
    out.beta = model.beta;
    out.configurations_known = model.interior_status != InteriorStatus::Uncertified;
    for (const auto& p : model.interior_singularities) {
        ExceptionalConfiguration conf;
        conf.label = p.label;
        conf.type = p.type;
        if (p.type.family == AdeFamily::A) {
            // A_{k-1} = 1/k(1, k-1)
            const std::int64_t k = p.type.rank + 1;
            HJChain chain = hj_resolution({k, 1, k - 1});
            for (std::size_t i = 0; i < chain.entries.size(); ++i) {
                conf.graph.self_intersections.push_back(-chain.entries[i]);
                if (i > 0)
                    conf.graph.edges.emplace_back(i - 1, i);
            }
        } else {
            conf.graph = dynkin_graph(p.type);
        }
        out.exceptional.push_back(std::move(conf));
    }
    return out;
}

std::array<Rational, 3> affine_gradient(const CompactificationModel& model, const std::array<Rational, 3>& point)
{
    std::array<Rational, 3> g;
    for (std::size_t i = 0; i < 3; ++i)
        g[i] = model.affine_equation.derivative(i).evaluate(point);
    return g;
}

} // namespace ldp
