#include "ldp/wps.hpp"

#include "ldp/arith.hpp"
#include "ldp/error.hpp"

#include <sstream>

namespace ldp {

WeightedProjectiveSpace::WeightedProjectiveSpace(std::vector<std::int64_t> w) : weights(std::move(w))
{
    if (weights.size() < 2)
        throw Error(Errc::BadInput, "weighted projective space needs at least two weights");
    for (auto x : weights)
        if (x < 1)
            throw Error(Errc::BadInput, "weights must be positive");
}

std::string WeightedProjectiveSpace::to_string() const
{
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < weights.size(); ++i)
        os << (i ? "," : "") << weights[i];
    os << ")";
    return os.str();
}

bool is_well_formed(const WeightedProjectiveSpace& space)
{
    const auto& w = space.weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::int64_t g = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i)
                g = gcd(g, w[j]);
        if (g != 1)
            return false;
    }
    return true;
}

AffineQuotientChart chart(const WeightedProjectiveSpace& space, std::size_t index)
{
    if (index >= space.weights.size())
        throw Error(Errc::IndexOutOfRange, "chart index " + std::to_string(index) + " out of range for " +
                                               space.to_string());
    AffineQuotientChart c;
    c.chart_index = index;
    c.group_order = space.weights[index];
    for (std::size_t j = 0; j < space.weights.size(); ++j)
        if (j != index)
            c.action_weights.push_back(space.weights[j] % space.weights[index]);
    return c;
}

Rational hypersurface_intersection(const HypersurfaceClass& x, std::int64_t j, std::int64_t k)
{
    const auto& w = x.ambient.weights;
    if (w.size() != 4)
        throw Error(Errc::WrongDimension, "intersection numbers need a surface in a weighted projective 3-space");
    Integer num = Integer(static_cast<long>(j)) * static_cast<long>(k) * static_cast<long>(x.degree);
    Integer den = 1;
    for (auto wi : w)
        den *= static_cast<long>(wi);
    return Rational(num, den);
}

std::int64_t adjunction_class(const HypersurfaceClass& x)
{
    std::int64_t t = x.degree;
    for (auto wi : x.ambient.weights)
        t -= wi;
    return t;
}

WeightedProjectiveSpace well_formed_reduction(const WeightedProjectiveSpace& space,
                                              const std::set<std::size_t>& indices)
{
    const auto& w = space.weights;
    std::int64_t p = 0;
    for (auto i : indices) {
        if (i >= w.size())
            throw Error(Errc::IndexOutOfRange, "reduction index out of range");
        p = gcd(p, w[i]);
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (indices.count(j))
            continue;
        for (std::int64_t g = gcd(p, w[j]); g > 1; g = gcd(p, w[j]))
            p /= g;
    }
    if (p <= 1)
        throw Error(Errc::NoCommonFactor, "indicated weights of " + space.to_string() +
                                              " share no factor coprime to the rest");
    auto out = w;
    for (auto i : indices)
        out[i] /= p;
    return WeightedProjectiveSpace(std::move(out));
}

WeightedProjectiveSpace well_formed_reduction(const WeightedProjectiveSpace& space)
{
    WeightedProjectiveSpace current = space;
    // P(k w) = P(w)
    if (std::int64_t g = gcd(current.weights); g > 1)
        for (auto& w : current.weights)
            w /= g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t omit = 0; omit < current.weights.size(); ++omit) {
            std::set<std::size_t> idx;
            for (std::size_t j = 0; j < current.weights.size(); ++j)
                if (j != omit)
                    idx.insert(j);
            try {
                current = well_formed_reduction(current, idx);
                changed = true;
            } catch (const Error& e) {
                if (e.code() != Errc::NoCommonFactor)
                    throw;
            }
        }
    }
    return current;
}

} // namespace ldp
