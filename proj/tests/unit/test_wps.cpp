#include "helpers.hpp"

#include "ldp/wps.hpp"

using namespace ldp;

TEST_CASE("weighted projective space validation")
{
    CHECK_ERRC(WeightedProjectiveSpace({1}), Errc::BadInput);
    CHECK_ERRC(WeightedProjectiveSpace({1, 0, 2}), Errc::BadInput);
    CHECK(WeightedProjectiveSpace({1, 1, 2}).to_string() == "P(1,1,2)");
}

TEST_CASE("well-formedness")
{
    CHECK(is_well_formed(WeightedProjectiveSpace({1, 1, 2})));
    CHECK(is_well_formed(WeightedProjectiveSpace({1, 3, 1, 2})));
    CHECK_FALSE(is_well_formed(WeightedProjectiveSpace({2, 2, 1})));
    CHECK_FALSE(is_well_formed(WeightedProjectiveSpace({2, 4, 6, 1})));
}

TEST_CASE("affine charts")
{
    WeightedProjectiveSpace p({1, 3, 1, 2});
    auto u1 = chart(p, 1);
    CHECK(u1.group_order == 3);
    CHECK(u1.action_weights == std::vector<std::int64_t>{1, 1, 2});
    auto u3 = chart(p, 3);
    CHECK(u3.group_order == 2);
    CHECK(u3.action_weights == std::vector<std::int64_t>{1, 1, 1});
    CHECK(chart(p, 0).is_smooth());
    CHECK_ERRC(chart(p, 4), Errc::IndexOutOfRange);
}

TEST_CASE("hypersurface intersections")
{
    HypersurfaceClass x{WeightedProjectiveSpace({1, 3, 1, 2}), 8};
    CHECK(hypersurface_intersection(x, 2, 2) == Rational(Integer(16), Integer(3)));
    CHECK(hypersurface_intersection(x, 1, 1) == Rational(Integer(8), Integer(6)));
    CHECK(adjunction_class(x) == 1);
    HypersurfaceClass e6{WeightedProjectiveSpace({3, 4, 6, 1}), 12};
    CHECK(hypersurface_intersection(e6, 1, 1) == Rational(Integer(1), Integer(6)));
    CHECK(adjunction_class(e6) == -2);
    CHECK_ERRC(hypersurface_intersection(HypersurfaceClass{WeightedProjectiveSpace({1, 1, 1}), 2}, 1, 1),
               Errc::WrongDimension);
}

TEST_CASE("well-formed reduction")
{
    WeightedProjectiveSpace p({2, 4, 3});
    CHECK(well_formed_reduction(p, {0, 1}).weights == std::vector<std::int64_t>{1, 2, 3});
    CHECK_ERRC(well_formed_reduction(WeightedProjectiveSpace({2, 3, 5}), {0, 1}), Errc::NoCommonFactor);
    CHECK(well_formed_reduction(WeightedProjectiveSpace({1, 1, 2})).weights == std::vector<std::int64_t>{1, 1, 2});
    CHECK(well_formed_reduction(WeightedProjectiveSpace({2, 2, 2, 6})).weights ==
          std::vector<std::int64_t>{1, 1, 1, 3});
    CHECK(well_formed_reduction(WeightedProjectiveSpace({2, 4, 6, 1})).weights ==
          std::vector<std::int64_t>{1, 2, 3, 1});
    for (auto w : std::vector<std::vector<std::int64_t>>{{6, 10, 15, 4}, {4, 6, 9, 2}, {2, 2, 3}, {3, 6, 9, 2}})
        CHECK(is_well_formed(well_formed_reduction(WeightedProjectiveSpace(w))));
}
