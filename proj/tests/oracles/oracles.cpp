#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

std::int64_t slow_gcd(std::int64_t a, std::int64_t b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (a != 0 && b != 0) {
        if (a > b)
            a -= b;
        else
            b -= a;
    }
    return a + b;
}

std::int64_t mod_inverse(std::int64_t m, std::int64_t n)
{
    if (n == 1)
        return 0;
    const std::int64_t r = ((m % n) + n) % n;
    for (std::int64_t u = 1; u < n; ++u)
        if ((r * u) % n == 1)
            return u;
    return -1;
}

std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> class_T(std::int64_t r, std::int64_t q)
{
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    for (std::int64_t n = 1; n * n <= r; ++n)
        for (std::int64_t d = 1; d * n * n <= r; ++d) {
            if (d * n * n != r)
                continue;
            for (std::int64_t m = 1; m <= std::max<std::int64_t>(1, n - 1); ++m) {
                if (slow_gcd(m, n) != 1)
                    continue;
                if (((d * n * m - 1) % r + r) % r == ((q % r) + r) % r)
                    out.insert({d, n, m});
            }
        }
    return out;
}

std::vector<Rational> expand_roots(const std::vector<std::pair<Rational, int>>& roots)
{
    std::vector<Rational> p{Rational(1)};
    for (const auto& [a, k] : roots)
        for (int i = 0; i < k; ++i) {
            std::vector<Rational> next(p.size() + 1, Rational(0));
            for (std::size_t j = 0; j < p.size(); ++j) {
                next[j + 1] += p[j];
                next[j] -= a * p[j];
            }
            p = next;
        }
    return p;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x)
{
    Rational sum = 0;
    Rational power = 1;
    for (const auto& c : coeffs) {
        sum += c * power;
        power *= x;
    }
    return sum;
}

std::size_t rank(std::vector<std::vector<Rational>> rows)
{
    std::size_t r = 0;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero())
                continue;
            Rational factor = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

std::vector<ldp::Exponents> monomials_of_degree(const std::array<std::int64_t, 3>& w, std::int64_t degree)
{
    std::vector<ldp::Exponents> out;
    for (std::int64_t i = 0; i * w[0] <= degree; ++i)
        for (std::int64_t j = 0; i * w[0] + j * w[1] <= degree; ++j) {
            std::int64_t rest = degree - i * w[0] - j * w[1];
            if (rest % w[2] == 0)
                out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(rest / w[2])});
        }
    return out;
}

std::int64_t wdeg(const ldp::Exponents& e, const std::array<std::int64_t, 3>& w)
{
    return static_cast<std::int64_t>(e[0]) * w[0] + static_cast<std::int64_t>(e[1]) * w[1] +
           static_cast<std::int64_t>(e[2]) * w[2];
}

} // namespace

MilnorCount milnor_quotient(const ldp::MultiPoly& f, const std::array<std::int64_t, 3>& weights,
                            std::int64_t max_degree, const std::vector<ldp::Exponents>& basis)
{
    std::vector<ldp::MultiPoly> generators{f, f.derivative(0), f.derivative(1), f.derivative(2)};
    std::vector<std::int64_t> gen_degree;
    for (const auto& g : generators) {
        std::int64_t deg = -1;
        for (const auto& [e, c] : g.terms())
            deg = std::max(deg, wdeg(e, weights));
        gen_degree.push_back(deg);
    }

    MilnorCount out;
    out.basis_independent = true;
    out.vanishes_at_top = true;
    std::int64_t socle = -1;
    for (std::int64_t delta = 0; delta <= max_degree; ++delta) {
        auto monos = monomials_of_degree(weights, delta);
        if (monos.empty())
            continue;
        std::map<ldp::Exponents, std::size_t> column;
        for (std::size_t i = 0; i < monos.size(); ++i)
            column[monos[i]] = i;

        std::vector<std::vector<Rational>> rows;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g].is_zero() || gen_degree[g] > delta)
                continue;
            for (const auto& m : monomials_of_degree(weights, delta - gen_degree[g])) {
                std::vector<Rational> row(monos.size(), Rational(0));
                for (const auto& [e, c] : generators[g].terms()) {
                    ldp::Exponents prod{e[0] + m[0], e[1] + m[1], e[2] + m[2]};
                    row[column.at(prod)] += c;
                }
                rows.push_back(std::move(row));
            }
        }
        const std::size_t ideal_rank = oracle::rank(rows);
        const std::size_t quotient = monos.size() - ideal_rank;
        out.dimension += quotient;
        if (quotient > 0)
            socle = delta;

        std::size_t in_degree = 0;
        for (const auto& b : basis) {
            if (wdeg(b, weights) != delta)
                continue;
            std::vector<Rational> row(monos.size(), Rational(0));
            row[column.at(b)] = 1;
            rows.push_back(std::move(row));
            ++in_degree;
        }
        if (in_degree > 0 && oracle::rank(rows) != ideal_rank + in_degree)
            out.basis_independent = false;
    }
    // Nothing survives in the upper half of the range.
    out.vanishes_at_top = socle >= 0 && 2 * socle <= max_degree;
    return out;
}

Rational continued_fraction(const std::vector<std::int64_t>& entries)
{
    Rational value = entries.back();
    for (std::size_t i = entries.size() - 1; i-- > 0;)
        value = Rational(entries[i]) - Rational(1) / value;
    return value;
}

} // namespace oracle
