#include "helpers.hpp"
#include "oracles.hpp"

#include "ldp/birational.hpp"

#include <set>

using namespace ldp;

namespace {

Rational q(long p, long r)
{
    return Rational(Integer(p), Integer(r));
}

} // namespace

TEST_CASE("weighted point equality")
{
    WeightedProjectiveSpace p({1, 1, 2});
    CHECK(WPoint(p, {1, 2, 3}) == WPoint(p, {2, 4, 12}));
    CHECK(WPoint(p, {1, 2, 3}) == WPoint(p, {-1, -2, 3}));
    CHECK_FALSE(WPoint(p, {1, 2, 3}) == WPoint(p, {1, 2, -3}));
    CHECK_FALSE(WPoint(p, {1, 0, 3}) == WPoint(p, {1, 1, 3}));
    // lambda = sqrt(2): [0:0:1] = [0:0:2] needs lambda^2 = 2.
    CHECK(WPoint(p, {0, 0, 1}) == WPoint(p, {0, 0, 2}));
    // lambda = 2^(1/3) in P(3, 3, 2): (1, 1, 1) -> (2, 2, 2^(2/3)) is not rational,
    // but (1, 2, 0) -> (2, 4, 0) is.
    WeightedProjectiveSpace r({3, 3, 2});
    CHECK(WPoint(r, {1, 2, 0}) == WPoint(r, {2, 4, 0}));
    CHECK_FALSE(WPoint(r, {1, 2, 0}) == WPoint(r, {2, 3, 0}));
    // lambda = -1 in P(2, 3): (1, 1) -> (1, -1).
    WeightedProjectiveSpace s({2, 3});
    CHECK(WPoint(s, {1, 1}) == WPoint(s, {1, -1}));
    CHECK(WPoint(s, {1, 1}) == WPoint(s, {4, 8}));
    CHECK_FALSE(WPoint(s, {1, 1}) == WPoint(s, {4, 4}));
    CHECK_ERRC(WPoint(p, {0, 0, 0}), Errc::BadInput);
    CHECK_ERRC(WPoint(p, {1, 0}), Errc::WrongDimension);
}

TEST_CASE("weighted point equality agrees with explicit scalings")
{
    WeightedProjectiveSpace p({2, 3, 5, 1});
    std::vector<Rational> base{q(1, 2), -3, 0, q(5, 7)};
    for (long num = -4; num <= 4; ++num) {
        if (num == 0)
            continue;
        for (long den = 1; den <= 3; ++den) {
            Rational lambda = q(num, den);
            std::vector<Rational> scaled;
            for (std::size_t i = 0; i < base.size(); ++i)
                scaled.push_back(base[i] * pow(lambda, p.weights[i]));
            CHECK(WPoint(p, base) == WPoint(p, scaled));
            scaled[3] += 1;
            CHECK_FALSE(WPoint(p, base) == WPoint(p, scaled));
        }
    }
}

TEST_CASE("project_pi")
{
    auto model = build_cyclic(1, 2, 1, 1, 1, RootConfig::simple(1));
    // P(z) = z - 1; chart w = 1: (X, Y, Z) = (1, P(0), 0).
    WPoint p(model.ambient, {1, -1, 0, 1});
    WeightedProjectiveSpace plane({1, 1, 2});
    CHECK(project_pi(model, p) == WPoint(plane, {1, 0, 1}));

    // x = 1, z = 2, w = 1: y = P(4) = 3.
    WPoint p2(model.ambient, {1, 3, 2, 1});
    CHECK(project_pi(model, p2) == WPoint(plane, {1, 2, 1}));

    CHECK_ERRC(project_pi(model, WPoint(model.ambient, {0, 1, 0, 0})), Errc::IndeterminateAtR2);
    CHECK_ERRC(project_pi(model, WPoint(model.ambient, {1, 1, 1, 1})), Errc::NotOnSurface);
    // A point of the line L_1 (x = 0, z^2 = w) maps to s_1.
    CHECK(project_pi(model, WPoint(model.ambient, {0, 5, 1, 1})) == WPoint(plane, {0, 1, 1}));

    auto e6 = build_rdp(AdeType::make(AdeFamily::E, 6), std::vector<Rational>(6, Rational(0)));
    CHECK_ERRC(project_pi(e6, WPoint(e6.ambient, {0, 0, 0, 1})), Errc::NotCyclicVariant);
}

TEST_CASE("blowup_at_R2 examples")
{
    auto b1 = blowup_at_R2(build_cyclic(2, 2, 1, 1, 1, RootConfig::simple(2)));
    CHECK(b1.base.b == 3);
    CHECK(b1.new_singularities.first.is_smooth());
    CHECK(b1.new_singularities.second == QuotientSingularity{2, 1, 1});

    auto b2 = blowup_at_R2(build_cyclic(2, 3, 2, 2, 1, RootConfig::simple(2)));
    CHECK(b2.base.b == 11);
    CHECK(b2.new_singularities.first == normalize({2, 1, 3}));
    CHECK(b2.new_singularities.first == QuotientSingularity{2, 1, 1});
    CHECK(b2.new_singularities.second == QuotientSingularity{3, 1, 2});
    CHECK(b2.exceptional_orbifold_points == std::vector<std::int64_t>{2, 3});

    auto b3 = blowup_at_R2(build_cyclic(1, 2, 1, 1, 1, RootConfig::simple(1)));
    CHECK(b3.new_singularities.first.is_smooth());
    CHECK(b3.new_singularities.second == QuotientSingularity{2, 1, 1});

    auto e6 = build_rdp(AdeType::make(AdeFamily::E, 6), std::vector<Rational>(6, Rational(0)));
    CHECK_ERRC(blowup_at_R2(e6), Errc::NotCyclicVariant);
    CHECK_ERRC(blowup_description(e6), Errc::NotCyclicVariant);
    CHECK_ERRC(roundtrip_check(e6, 1, 1), Errc::NotCyclicVariant);
}

TEST_CASE("chart actions normalize to the new singularities")
{
    for (std::int64_t d = 1; d <= 4; ++d)
        for (std::int64_t n = 1; n <= 6; ++n)
            for (std::int64_t m = 1; m <= std::max<std::int64_t>(1, n - 1); ++m) {
                if (gcd(m, n) != 1)
                    continue;
                for (std::int64_t c = 1; c <= 5; ++c) {
                    if (gcd(c, n) != 1)
                        continue;
                    for (const auto& p : enumerate_weights(d, n, m, c).pairs) {
                        auto b = blowup_at_R2(build_cyclic(d, n, m, c, p.a, RootConfig::simple(static_cast<int>(d))));
                        CHECK(normalize(b.chart_s_action) == b.new_singularities.first);
                        CHECK(normalize(b.chart_t_action) == b.new_singularities.second);
                        CHECK(b.new_singularities.first.order == c);
                        CHECK(b.new_singularities.second.order == n);
                    }
                }
            }
}

TEST_CASE("evaluate_pi_chart examples")
{
    auto model = build_cyclic(1, 2, 1, 1, 1, RootConfig::simple(1));
    WeightedProjectiveSpace plane({1, 1, 2});
    CHECK(evaluate_pi_chart(model, PiChart::T, {0, 7}) == WPoint(plane, {0, 7, 1}));
    CHECK(evaluate_pi_chart(model, PiChart::T, {1, 2}) == WPoint(plane, {3, 2, 1}));
    auto s = evaluate_pi_chart(model, PiChart::S, {1, 0});
    CHECK(s.coords() == std::vector<Rational>{1, 1, 0});

    auto two = build_cyclic(2, 2, 1, 1, 1, RootConfig::simple(2));
    CHECK(evaluate_pi_chart(two, PiChart::S, {1, 0}).coords() == std::vector<Rational>{1, 1, 0});
}

TEST_CASE("chart S and chart T agree on the overlap")
{
    for (std::int64_t d = 1; d <= 4; ++d)
        for (std::int64_t n = 1; n <= 5; ++n)
            for (std::int64_t c = 1; c <= 4; ++c) {
                if (gcd(c, n) != 1)
                    continue;
                for (const auto& p : enumerate_weights(d, n, 1, c).pairs) {
                    const std::string roots = d == 1 ? "1:1" : "1:1,-2:" + std::to_string(d - 1);
                    auto model = build_cyclic(d, n, 1, c, p.a, RootConfig::parse(roots));
                    for (Rational t : {q(1, 2), q(-3, 1), q(5, 4)}) {
                        Rational u = q(2, 3);
                        auto viaS = evaluate_pi_chart(model, PiChart::S, {u, pow(t, n)});
                        auto viaT = evaluate_pi_chart(model, PiChart::T, chart_s_to_t(model, u, t));
                        CHECK(viaS == viaT);
                    }
                }
            }
    auto model = build_cyclic(1, 2, 1, 1, 1, RootConfig::simple(1));
    CHECK_ERRC(chart_s_to_t(model, 1, 0), Errc::DivisionByZero);
}

TEST_CASE("blowup_description examples")
{
    auto two = blowup_description(build_cyclic(2, 2, 1, 1, 1, RootConfig::simple(2)));
    CHECK(two.base_plane.weights == std::vector<std::int64_t>{1, 1, 2});
    CHECK(two.centers.size() == 2);
    CHECK(two.euler_characteristic == 5);
    CHECK_FALSE(two.single_point);

    auto a2 = blowup_description(build_cyclic(3, 1, 1, 1, 1, RootConfig::parse("1:3")));
    CHECK(a2.base_plane.weights == std::vector<std::int64_t>{1, 1, 1});
    REQUIRE(a2.centers.size() == 1);
    CHECK(a2.centers[0].iterations == 3);
    CHECK(a2.single_point);

    auto one = blowup_description(build_cyclic(1, 2, 1, 1, 1, RootConfig::simple(1)));
    CHECK(one.centers.size() == 1);
    CHECK(one.centers[0].iterations == 1);
    CHECK(one.removed_divisors.size() == 2);
}

TEST_CASE("contracted line images are distinct")
{
    auto model = build_cyclic(4, 3, 1, 1, 1, RootConfig::parse("1:1,8:1,-1:2"));
    auto desc = blowup_description(model);
    std::set<Rational> roots;
    for (const auto& c : desc.centers)
        roots.insert(c.root);
    CHECK(roots.size() == desc.centers.size());
    // Roots that are cubes give rational s_j = [0 : t : 1]; they differ.
    auto s1 = evaluate_pi_chart(model, PiChart::T, {0, 1});
    auto s2 = evaluate_pi_chart(model, PiChart::T, {0, 2});
    CHECK_FALSE(s1 == s2);
}

TEST_CASE("roundtrip examples")
{
    auto model = build_cyclic(2, 2, 1, 1, 1, RootConfig::simple(2));
    auto r = roundtrip_check(model, 100, 42);
    CHECK(r.passed);
    CHECK(r.samples == 100);

    // P(r^2) = r^2 - 1 vanishes at r = +-1; those draws are discarded.
    auto d1 = build_cyclic(1, 2, 1, 1, 1, RootConfig::simple(1));
    auto r1 = roundtrip_check(d1, 400, 3);
    CHECK(r1.passed);
    CHECK(r1.samples == 400);
    CHECK(r1.redrawn > 0);

    auto singular = build_cyclic(3, 2, 1, 1, 1, RootConfig::parse("1:2,4:1"));
    CHECK(roundtrip_check(singular, 100, 9).passed);

    // Same seed, same result.
    CHECK(roundtrip_check(model, 50, 7).redrawn == roundtrip_check(model, 50, 7).redrawn);
}

TEST_CASE("euler count of the blow-up description")
{
    for (std::int64_t d = 1; d <= 5; ++d)
        for (std::int64_t n = 1; n <= 6; ++n) {
            auto pairs = enumerate_weights(d, n, 1, 1).pairs;
            if (pairs.empty())
                continue;
            auto model = build_cyclic(d, n, 1, 1, pairs.front().a, RootConfig::simple(static_cast<int>(d)));
            CHECK(blowup_description(model).euler_characteristic == 3 + d);
            CHECK(blowup_description(model).euler_characteristic == topology(model).chi_Mbar + 1);
        }
}
