#include "ldp/multipoly.hpp"

#include "ldp/error.hpp"

#include <sstream>

namespace ldp {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index)
{
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(1, std::move(e));
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents e)
{
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != nvars_)
        throw Error(Errc::WrongDimension, "monomial arity does not match polynomial");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw Error(Errc::WrongDimension, "multiplying polynomials in different rings");
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p)
{
    MultiPoly out(p.nvars_);
    for (const auto& [e, c] : p.terms_)
        out.add_term(e, s * c);
    return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_)
        throw Error(Errc::WrongDimension, "evaluation point has wrong arity");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i])
                t *= pow(point[i], static_cast<long>(e[i]));
        acc += t;
    }
    return acc;
}

UniPoly MultiPoly::specialize(std::size_t keep, std::span<const Rational> point) const
{
    if (point.size() != nvars_)
        throw Error(Errc::WrongDimension, "specialization point has wrong arity");
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(degree_in(keep), 0L)) + 1);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (i != keep && e[i])
                t *= pow(point[i], static_cast<long>(e[i]));
        coeffs[e[keep]] += t;
    }
    return UniPoly(std::move(coeffs));
}

long MultiPoly::degree_in(std::size_t var) const
{
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(e.at(var)));
    return d;
}

long MultiPoly::weighted_degree(std::span<const std::int64_t> weights) const
{
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            w += static_cast<long>(weights[i]) * static_cast<long>(e[i]);
        d = std::max(d, w);
    }
    return d;
}

bool MultiPoly::is_quasi_homogeneous(std::span<const std::int64_t> weights, long degree) const
{
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            w += static_cast<long>(weights[i]) * static_cast<long>(e[i]);
        if (w != degree)
            return false;
    }
    return true;
}

MultiPoly MultiPoly::homogenize(std::span<const std::int64_t> weights, long degree) const
{
    if (weights.size() != nvars_)
        throw Error(Errc::WrongDimension, "homogenize: weight count does not match variables");
    MultiPoly out(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            w += static_cast<long>(weights[i]) * static_cast<long>(e[i]);
        if (w > degree)
            throw Error(Errc::BadInput, "homogenize: term exceeds target degree");
        Exponents h = e;
        h.push_back(static_cast<unsigned>(degree - w));
        out.add_term(h, c);
    }
    return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool constant = true;
        for (auto x : e)
            if (x)
                constant = false;
        if (constant) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (mag != Rational(1)) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i])
                continue;
            if (need_star)
                os << "*";
            os << names[i];
            if (e[i] > 1)
                os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned exponent)
{
    MultiPoly result = MultiPoly::constant(p.nvars(), 1);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * p;
    return result;
}

} // namespace ldp
