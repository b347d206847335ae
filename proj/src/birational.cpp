#include "ldp/birational.hpp"

#include "ldp/arith.hpp"
#include "ldp/error.hpp"

#include <random>
#include <sstream>

namespace ldp {

WPoint::WPoint(WeightedProjectiveSpace ambient, std::vector<Rational> coords)
    : ambient_(std::move(ambient)), coords_(std::move(coords))
{
    if (coords_.size() != ambient_.weights.size())
        throw Error(Errc::WrongDimension, "point has " + std::to_string(coords_.size()) + " coordinates, ambient " +
                                              ambient_.to_string() + " needs " +
                                              std::to_string(ambient_.weights.size()));
    bool all_zero = true;
    for (const auto& x : coords_)
        all_zero = all_zero && x.is_zero();
    if (all_zero)
        throw Error(Errc::BadInput, "the origin is not a point of " + ambient_.to_string());
}

bool operator==(const WPoint& p, const WPoint& q)
{
    if (p.ambient_ != q.ambient_)
        return false;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < p.coords_.size(); ++i) {
        if (p.coords_[i].is_zero() != q.coords_[i].is_zero())
            return false;
        if (!p.coords_[i].is_zero())
            support.push_back(i);
    }
    // mu = prod rho_i^{x_i} with sum x_i w_i = g plays the role of lambda^g.
    const auto& w = p.ambient_.weights;
    std::int64_t g = 0;
    std::vector<std::int64_t> x(support.size(), 0);
    for (std::size_t s = 0; s < support.size(); ++s) {
        auto bz = ext_gcd(g, w[support[s]]);
        for (std::size_t t = 0; t < s; ++t)
            x[t] *= bz.x;
        x[s] = bz.y;
        g = bz.g;
    }
    Rational mu = 1;
    for (std::size_t s = 0; s < support.size(); ++s)
        mu *= pow(q.coords_[support[s]] / p.coords_[support[s]], x[s]);
    for (std::size_t s = 0; s < support.size(); ++s) {
        std::size_t i = support[s];
        if (q.coords_[i] / p.coords_[i] != pow(mu, w[i] / g))
            return false;
    }
    return true;
}

std::string WPoint::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ":";
        out += coords_[i].pretty();
    }
    return out + "]";
}

namespace {

void require_cyclic(const CompactificationModel& model, const char* what)
{
    if (!model.is_cyclic() || !model.roots)
        throw Error(Errc::NotCyclicVariant, std::string(what) + " applies to the cyclic construction only");
}

WeightedProjectiveSpace pi_target(const CompactificationModel& model)
{
    return WeightedProjectiveSpace({model.a, model.c, model.cyclic().n});
}

} // namespace

WPoint project_pi(const CompactificationModel& model, const WPoint& p)
{
    require_cyclic(model, "project_pi");
    if (p.ambient() != model.ambient)
        throw Error(Errc::WrongDimension, "point lives in " + p.ambient().to_string() + ", model in " +
                                              model.ambient.to_string());
    if (!model.equation.evaluate(p.coords()).is_zero())
        throw Error(Errc::NotOnSurface, p.to_string() + " does not satisfy the surface equation");
    if (p[0].is_zero() && p[2].is_zero() && p[3].is_zero())
        throw Error(Errc::IndeterminateAtR2, "pi is not defined at R2 = [0:1:0:0]");
    return WPoint(pi_target(model), {p[0], p[2], p[3]});
}

BlowupModel blowup_at_R2(const CompactificationModel& model)
{
    require_cyclic(model, "blowup_at_R2");
    const std::int64_t a = model.a, b = model.b, c = model.c, n = model.cyclic().n;
    BlowupModel out;
    out.base = model;
    out.chart_s_action = {c, c == 1 ? 1 : mod(b, c), c == 1 ? 1 : mod(-n, c)};
    out.chart_t_action = {n, n == 1 ? 1 : mod(b, n), n == 1 ? 1 : mod(-c, n)};
    out.new_singularities = {normalize({c, mod(a, c), mod(n, c)}), normalize({n, mod(a, n), mod(c, n)})};
    for (const auto& s : {out.new_singularities.first, out.new_singularities.second})
        if (!s.is_smooth())
            out.exceptional_orbifold_points.push_back(s.order);
    return out;
}

const char* to_string(PiChart chart)
{
    return chart == PiChart::S ? "S" : "T";
}

WPoint evaluate_pi_chart(const CompactificationModel& model, PiChart chart, const std::pair<Rational, Rational>& coords)
{
    require_cyclic(model, "evaluate_pi_chart");
    const std::int64_t n = model.cyclic().n;
    const auto& [first, second] = coords;
    if (chart == PiChart::T) {
        Rational value = eval_poly(model.roots->polynomial(), pow(second, n));
        return WPoint(pi_target(model), {first * value, second, 1});
    }
    // v^{dc} P(1 / v^c) rewritten so that v = 0 is allowed.
    Rational product = 1;
    const Rational vc = pow(second, model.c);
    for (const auto& [root, k] : model.roots->entries())
        product *= pow(Rational(1) - root * vc, k);
    return WPoint(pi_target(model), {first * product, 1, second});
}

std::pair<Rational, Rational> chart_s_to_t(const CompactificationModel& model, const Rational& u_prime,
                                           const Rational& t)
{
    require_cyclic(model, "chart_s_to_t");
    if (t.is_zero())
        throw Error(Errc::DivisionByZero, "chart transition needs v != 0");
    return {u_prime * pow(t, model.b), pow(t, -model.c)};
}

BlowupSurfaceDescription blowup_description(const CompactificationModel& model)
{
    require_cyclic(model, "blowup_description");
    BlowupSurfaceDescription out;
    out.base_plane = pi_target(model);
    const auto& entries = model.roots->entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
        out.centers.push_back({"s_" + std::to_string(j + 1), entries[j].first, entries[j].second});
        out.euler_characteristic += entries[j].second;
    }
    out.removed_divisors = {"proper transform of (x = 0)", "proper transform of (w = 0)"};
    out.single_point = out.centers.size() == 1;
    return out;
}

namespace {

Rational draw_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-24, 24);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

} // namespace

RoundtripResult roundtrip_check(const CompactificationModel& model, std::size_t sample_count, std::uint64_t seed)
{
    require_cyclic(model, "roundtrip_check");
    RoundtripResult result;
    std::mt19937_64 rng(seed);
    const UniPoly P = model.roots->polynomial();
    const std::int64_t n = model.cyclic().n;

    while (result.samples < sample_count) {
        const Rational w_prime = draw_rational(rng);
        const Rational r = draw_rational(rng);
        const Rational pr = eval_poly(P, pow(r, n));
        if (w_prime.is_zero() || pr.is_zero()) {
            ++result.redrawn;
            continue;
        }
        ++result.samples;
        const WPoint image = evaluate_pi_chart(model, PiChart::T, {w_prime, r});
        const Rational& x = image[0];
        const Rational& z = image[1];
        const Rational& w = image[2];
        // y = w^{dc} P(z^n / w^c) / x
        const Rational y = pow(w, model.cyclic().d * model.c) * eval_poly(P, pow(z, n) / pow(w, model.c)) / x;
        const WPoint lifted(model.ambient, {x, y, z, w});
        bool ok = model.equation.evaluate(lifted.coords()).is_zero() && project_pi(model, lifted) == image;
        if (!ok && result.passed) {
            result.passed = false;
            result.first_failure = "(w', r) = (" + w_prime.pretty() + ", " + r.pretty() + ")";
        }
    }
    return result;
}

} // namespace ldp
