#include "ldp/rdp.hpp"

#include "ldp/error.hpp"

namespace ldp {

namespace {

MultiPoly term(long c, unsigned ex, unsigned ey, unsigned ez)
{
    return MultiPoly::monomial(Rational(c), {ex, ey, ez});
}

} // namespace

std::string monomial_string(const Exponents& e)
{
    static const char* names[] = {"x", "y", "z", "w"};
    std::string out;
    for (std::size_t i = 0; i < e.size() && i < 4; ++i) {
        if (!e[i])
            continue;
        out += names[i];
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

RDPData rdp_data(const AdeType& type)
{
    AdeType t = AdeType::make(type.family, type.rank);
    RDPData out;
    out.type = t;
    const int r = t.rank;

    switch (t.family) {
    case AdeFamily::A: {
        // A_{k-1}: xy + z^k
        const unsigned k = static_cast<unsigned>(r) + 1;
        out.f = term(1, 1, 1, 0) + term(1, 0, 0, k);
        for (unsigned i = 0; i + 1 < k; ++i)
            out.milnor_basis.push_back({0, 0, i});
        if (k % 2 == 0) {
            out.weights = {k / 2, k / 2, 1};
            out.weighted_degree = k;
        } else {
            out.weights = {k, k, 2};
            out.weighted_degree = 2 * static_cast<long>(k);
        }
        break;
    }
    case AdeFamily::D: {
        // D_k: x^2 y + y^{k-1} + z^2
        const unsigned k = static_cast<unsigned>(r);
        out.f = term(1, 2, 1, 0) + term(1, 0, k - 1, 0) + term(1, 0, 0, 2);
        out.milnor_basis.push_back({0, 0, 0});
        out.milnor_basis.push_back({1, 0, 0});
        for (unsigned i = 1; i + 2 <= k; ++i)
            out.milnor_basis.push_back({0, i, 0});
        out.weights = {k - 2, 2, k - 1};
        out.weighted_degree = 2 * static_cast<long>(k) - 2;
        break;
    }
    case AdeFamily::E:
        switch (r) {
        case 6:
            out.f = term(1, 4, 0, 0) + term(1, 0, 3, 0) + term(1, 0, 0, 2);
            out.milnor_basis = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}};
            out.weights = {3, 4, 6};
            out.weighted_degree = 12;
            break;
        case 7:
            out.f = term(1, 3, 1, 0) + term(1, 0, 3, 0) + term(1, 0, 0, 2);
            out.milnor_basis = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}, {0, 1, 0}, {1, 1, 0}};
            out.weights = {4, 6, 9};
            out.weighted_degree = 18;
            break;
        case 8:
            out.f = term(1, 5, 0, 0) + term(1, 0, 3, 0) + term(1, 0, 0, 2);
            out.milnor_basis = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0},
                                {0, 1, 0}, {1, 1, 0}, {2, 1, 0}, {3, 1, 0}};
            out.weights = {6, 10, 15};
            out.weighted_degree = 30;
            break;
        }
        break;
    }
    out.milnor_number = static_cast<int>(out.milnor_basis.size());
    return out;
}

DualGraph dynkin_graph(const AdeType& type)
{
    AdeType t = AdeType::make(type.family, type.rank);
    const auto r = static_cast<std::size_t>(t.rank);
    DualGraph g;
    g.self_intersections.assign(r, -2);
    switch (t.family) {
    case AdeFamily::A:
        for (std::size_t i = 0; i + 1 < r; ++i)
            g.edges.emplace_back(i, i + 1);
        break;
    case AdeFamily::D:
        // chain 0 .. r-2, with r-1 branching off r-3
        for (std::size_t i = 0; i + 2 < r; ++i)
            g.edges.emplace_back(i, i + 1);
        g.edges.emplace_back(r - 3, r - 1);
        break;
    case AdeFamily::E:
        // chain 0 .. r-2, with r-1 attached to vertex 2
        for (std::size_t i = 0; i + 2 < r; ++i)
            g.edges.emplace_back(i, i + 1);
        g.edges.emplace_back(2, r - 1);
        break;
    }
    return g;
}

} // namespace ldp
