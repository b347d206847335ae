#include "ldp/arith.hpp"

#include "ldp/error.hpp"

#include <algorithm>
#include <sstream>

namespace ldp {

namespace {

template <class T>
Bezout<T> ext_gcd_impl(const T& a, const T& b)
{
    if (a == 0 && b == 0)
        return {T(0), T(0), T(0)};
    T old_r = a, r = b;
    T old_s = 1, s = 0;
    T old_t = 0, t = 1;
    while (r != 0) {
        T q = old_r / r;
        T tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

} // namespace

Bezout<Integer> ext_gcd(const Integer& a, const Integer& b)
{
    return ext_gcd_impl<Integer>(a, b);
}

Bezout<std::int64_t> ext_gcd(std::int64_t a, std::int64_t b)
{
    return ext_gcd_impl<std::int64_t>(a, b);
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return ext_gcd(a, b).g;
}

std::int64_t gcd(std::span<const std::int64_t> values)
{
    std::int64_t g = 0;
    for (auto v : values)
        g = gcd(g, v);
    return g;
}

std::int64_t mod(std::int64_t x, std::int64_t n)
{
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

std::int64_t mod_inverse(std::int64_t m, std::int64_t n)
{
    if (n < 1)
        throw Error(Errc::BadInput, "mod_inverse: modulus must be positive");
    auto [g, x, y] = ext_gcd(mod(m, n), n);
    (void)y;
    if (g != 1)
        throw Error(Errc::NonInvertible,
                    "mod_inverse: gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
    if (n == 1)
        return 0;
    return mod(x, n);
}

Integer mod_inverse(const Integer& m, const Integer& n)
{
    if (n < 1)
        throw Error(Errc::BadInput, "mod_inverse: modulus must be positive");
    Integer mm = m % n;
    if (mm < 0)
        mm += n;
    auto b = ext_gcd(mm, n);
    if (b.g != 1)
        throw Error(Errc::NonInvertible, "mod_inverse: arguments not coprime");
    if (n == 1)
        return 0;
    Integer u = b.x % n;
    if (u < 0)
        u += n;
    return u;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    trim();
}

UniPoly UniPoly::constant(const Rational& c)
{
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const std::pair<Rational, int>> roots)
{
    UniPoly p = constant(1);
    for (const auto& [root, k] : roots) {
        UniPoly factor{-root, Rational(1)};
        for (int i = 0; i < k; ++i)
            p = p * factor;
    }
    return p;
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& UniPoly::leading() const
{
    if (coeffs_.empty())
        throw Error(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return {};
    Rational inv = Rational(1) / leading();
    return inv * *this;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& p)
{
    std::vector<Rational> out = p.coeffs_;
    for (auto& c : out)
        c *= s;
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit)
            os << mag << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den)
{
    if (den.is_zero())
        throw Error(Errc::ZeroPolynomial, "polynomial division by zero");
    std::vector<Rational> rem = num.coefficients();
    long dn = den.degree();
    long nn = num.degree();
    if (nn < dn)
        return {UniPoly{}, num};
    std::vector<Rational> quot(static_cast<std::size_t>(nn - dn + 1));
    const Rational& lead = den.leading();
    for (long i = nn - dn; i >= 0; --i) {
        Rational q = rem[static_cast<std::size_t>(i + dn)] / lead;
        quot[static_cast<std::size_t>(i)] = q;
        if (q.is_zero())
            continue;
        for (long j = 0; j <= dn; ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * den.coefficients()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly pow(const UniPoly& p, unsigned exponent)
{
    UniPoly result = UniPoly::constant(1);
    UniPoly base = p;
    while (exponent) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent)
            base = base * base;
    }
    return result;
}

Rational eval_poly(const UniPoly& p, const Rational& x)
{
    Rational acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<MultiplicityPart> multiplicity_profile(const UniPoly& p)
{
    if (p.is_zero())
        throw Error(Errc::ZeroPolynomial, "multiplicity_profile of the zero polynomial");
    std::vector<MultiplicityPart> parts;
    if (p.degree() == 0)
        return parts;

    // Yun: a0 = gcd(f, f'), b1 = f/a0, c1 = f'/a0, d1 = c1 - b1'.
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly a0 = gcd(f, fp);
    UniPoly b = divmod(f, a0).first;
    UniPoly c = divmod(fp, a0).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0)
            parts.push_back({a.degree(), i});
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    std::sort(parts.begin(), parts.end(), [](const auto& l, const auto& r) {
        return l.multiplicity != r.multiplicity ? l.multiplicity < r.multiplicity : l.degree < r.degree;
    });
    return parts;
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero())
                continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

std::size_t rank(std::vector<std::vector<Rational>> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t row = r + 1; row < rows; ++row) {
            if (m[row][col].is_zero())
                continue;
            Rational f = m[row][col] / m[r][col];
            for (std::size_t k = col; k < cols; ++k)
                m[row][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points)
{
    // Newton divided differences.
    const std::size_t n = points.size();
    std::vector<Rational> coef(n);
    for (std::size_t i = 0; i < n; ++i)
        coef[i] = points[i].second;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            Rational dx = points[i].first - points[i - j].first;
            if (dx.is_zero())
                throw Error(Errc::BadInput, "interpolate: repeated abscissa");
            coef[i] = (coef[i] - coef[i - 1]) / dx;
        }
    UniPoly result;
    for (std::size_t k = n; k-- > 0;) {
        result = result * UniPoly{-points[k].first, Rational(1)} + UniPoly::constant(coef[k]);
    }
    return result;
}

} // namespace ldp
