#include "ldp/elimination.hpp"

#include "ldp/error.hpp"

#include <vector>

namespace ldp {

Rational sylvester_resultant(const UniPoly& f, long f_degree, const UniPoly& g, long g_degree)
{
    if (f_degree < 0 || g_degree < 0)
        return 0;
    const auto n = static_cast<std::size_t>(f_degree + g_degree);
    if (n == 0)
        return 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    // Rows hold coefficients from the formal leading term downwards.
    for (std::size_t row = 0; row < static_cast<std::size_t>(g_degree); ++row)
        for (long i = 0; i <= f_degree; ++i)
            m[row][row + static_cast<std::size_t>(i)] = f.coefficient(static_cast<std::size_t>(f_degree - i));
    for (std::size_t row = 0; row < static_cast<std::size_t>(f_degree); ++row)
        for (long i = 0; i <= g_degree; ++i)
            m[static_cast<std::size_t>(g_degree) + row][row + static_cast<std::size_t>(i)] =
                g.coefficient(static_cast<std::size_t>(g_degree - i));
    return determinant(std::move(m));
}

UniPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t elim)
{
    if (f.nvars() != 2 || g.nvars() != 2)
        throw Error(Errc::WrongDimension, "resultant: expected bivariate polynomials");
    if (f.is_zero() || g.is_zero())
        return {};
    const std::size_t keep = 1 - elim;
    const long fe = f.degree_in(elim), ge = g.degree_in(elim);
    const long fk = f.degree_in(keep), gk = g.degree_in(keep);
    const long bound = ge * fk + fe * gk;

    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(static_cast<std::size_t>(bound) + 1);
    std::vector<Rational> point(2);
    for (long t = 0; t <= bound; ++t) {
        point[keep] = Rational(t);
        UniPoly fs = f.specialize(elim, point);
        UniPoly gs = g.specialize(elim, point);
        samples.emplace_back(Rational(t), sylvester_resultant(fs, fe, gs, ge));
    }
    return interpolate(samples);
}

bool certify_no_common_zero(std::span<const MultiPoly> polys)
{
    if (polys.empty())
        return false;
    for (const auto& p : polys) {
        if (p.nvars() != 2)
            throw Error(Errc::WrongDimension, "certify_no_common_zero: expected bivariate polynomials");
        if (p.terms().size() == 1 && p.terms().begin()->first == Exponents{0, 0})
            return true; // nonzero constant
    }
    if (polys.size() == 1)
        return false;
    for (std::size_t elim = 0; elim < 2; ++elim) {
        UniPoly g;
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = i + 1; j < polys.size(); ++j)
                g = gcd(g, resultant(polys[i], polys[j], elim));
        // Every common zero projects to a root of g.
        if (!g.is_zero() && g.degree() == 0)
            return true;
    }
    return false;
}

} // namespace ldp
