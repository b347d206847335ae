#include "ldp/singularity.hpp"

#include "ldp/arith.hpp"
#include "ldp/error.hpp"

#include <sstream>

namespace ldp {

std::string QuotientSingularity::to_string() const
{
    std::ostringstream os;
    os << "1/" << order << "(" << q1 << "," << q2 << ")";
    return os.str();
}

QuotientSingularity normalize(const QuotientSingularity& s)
{
    if (s.order < 1)
        throw Error(Errc::BadInput, "quotient singularity order must be positive");
    if (s.order == 1)
        return {1, 1, 1};
    if (gcd(s.q1, s.order) != 1 || gcd(s.q2, s.order) != 1)
        throw Error(Errc::NotFree, s.to_string() + " does not act freely off the origin");
    std::int64_t k = mod_inverse(s.q1, s.order);
    return {s.order, 1, mod(s.q2 * k, s.order)};
}

bool is_equivalent(const QuotientSingularity& a, const QuotientSingularity& b)
{
    if (a.order != b.order)
        return false;
    auto na = normalize(a), nb = normalize(b);
    if (na.q2 == nb.q2)
        return true;
    return mod(na.q2 * nb.q2, a.order) == 1 % a.order;
}

Rational HJChain::value() const
{
    if (entries.empty())
        throw Error(Errc::BadInput, "empty Hirzebruch-Jung chain");
    Rational acc(entries.back());
    for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it)
        acc = Rational(*it) - Rational(1) / acc;
    return acc;
}

HJChain hj_resolution(const QuotientSingularity& s)
{
    auto n = normalize(s);
    if (n.order == 1)
        throw Error(Errc::SmoothPoint, "smooth point has no resolution chain");
    HJChain chain;
    std::int64_t num = n.order, den = n.q2;
    while (den != 0) {
        std::int64_t b = (num + den - 1) / den;
        chain.entries.push_back(b);
        std::int64_t rem = b * den - num;
        num = den;
        den = rem;
    }
    return chain;
}

const char* to_string(AdeFamily f)
{
    switch (f) {
    case AdeFamily::A: return "A";
    case AdeFamily::D: return "D";
    case AdeFamily::E: return "E";
    }
    return "?";
}

AdeType AdeType::make(AdeFamily family, int rank)
{
    bool ok = false;
    switch (family) {
    case AdeFamily::A: ok = rank >= 1; break;
    case AdeFamily::D: ok = rank >= 4; break;
    case AdeFamily::E: ok = rank >= 6 && rank <= 8; break;
    }
    if (!ok)
        throw Error(Errc::InvalidIndex,
                    std::string("invalid rational double point ") + ldp::to_string(family) + "_" + std::to_string(rank));
    return {family, rank};
}

AdeType AdeType::parse(const std::string& text)
{
    if (text.size() < 2)
        throw Error(Errc::ParseError, "cannot parse ADE type '" + text + "'");
    AdeFamily family;
    switch (text[0]) {
    case 'A': case 'a': family = AdeFamily::A; break;
    case 'D': case 'd': family = AdeFamily::D; break;
    case 'E': case 'e': family = AdeFamily::E; break;
    default: throw Error(Errc::ParseError, "cannot parse ADE type '" + text + "'");
    }
    std::string digits = text.substr(text[1] == '_' ? 2 : 1);
    try {
        std::size_t used = 0;
        int rank = std::stoi(digits, &used);
        if (used != digits.size())
            throw std::invalid_argument(digits);
        return make(family, rank);
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "cannot parse ADE type '" + text + "'");
    }
}

std::string AdeType::name() const
{
    return std::string(ldp::to_string(family)) + "_" + std::to_string(rank);
}

CyclicT CyclicT::make(std::int64_t d, std::int64_t n, std::int64_t m)
{
    if (d < 1 || n < 1)
        throw Error(Errc::BadInput, "class-T data needs d >= 1 and n >= 1");
    if (gcd(m, n) != 1)
        throw Error(Errc::BadInput, "class-T data needs gcd(m, n) = 1");
    return {d, n, m, mod_inverse(m, n)};
}

QuotientSingularity CyclicT::singularity() const
{
    std::int64_t r = d * n * n;
    if (r == 1)
        return {1, 1, 1};
    return {r, 1, mod(d * n * m - 1, r)};
}

std::string ClassTDescriptor::to_string() const
{
    if (!is_cyclic())
        return rdp().name();
    const auto& t = cyclic();
    std::ostringstream os;
    os << "T(d=" << t.d << ", n=" << t.n << ", m=" << t.m << ")";
    if (t.is_a_type())
        os << " = A_" << t.d - 1;
    return os.str();
}

std::optional<ClassTDescriptor> detect_class_T(const QuotientSingularity& s)
{
    auto ns = normalize(s);
    const std::int64_t r = ns.order;
    const std::int64_t q = ns.q2;
    if (r == 1)
        return std::nullopt;

    // d n m = q + 1 (mod d n^2)  <=>  d n | q + 1 and m = (q + 1)/(d n) (mod n).
    std::vector<CyclicT> found;
    for (std::int64_t n = 1; n * n <= r; ++n) {
        if (r % (n * n) != 0)
            continue;
        std::int64_t d = r / (n * n);
        if ((q + 1) % (d * n) != 0)
            continue;
        std::int64_t m = (q + 1) / (d * n) % n;
        if (n == 1)
            m = 1;
        if (gcd(m, n) != 1)
            continue;
        found.push_back(CyclicT::make(d, n, m));
    }
    if (found.empty())
        return std::nullopt;
    ClassTDescriptor out{found.back(), found};
    return out;
}

} // namespace ldp
