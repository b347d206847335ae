#pragma once

#include "ldp/rational.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ldp {

/// P(w_0, ..., w_m).
struct WeightedProjectiveSpace {
    std::vector<std::int64_t> weights;

    WeightedProjectiveSpace() = default;
    /// Throws BadInput unless there are >= 2 weights, all positive.
    explicit WeightedProjectiveSpace(std::vector<std::int64_t> w);

    std::size_t dimension() const { return weights.size() - 1; }
    std::string to_string() const;
    friend bool operator==(const WeightedProjectiveSpace&, const WeightedProjectiveSpace&) = default;
};

/// gcd of the weights with w_i omitted is 1 for every i.
bool is_well_formed(const WeightedProjectiveSpace& space);

/// U_i = (z_i != 0) = C^m / (1/w_i)(w_0, ..., ^w_i, ..., w_m).
struct AffineQuotientChart {
    std::size_t chart_index = 0;
    std::int64_t group_order = 1;
    std::vector<std::int64_t> action_weights;

    bool is_smooth() const { return group_order == 1; }
};

/// Throws IndexOutOfRange.
AffineQuotientChart chart(const WeightedProjectiveSpace& space, std::size_t index);

/// Degree-e hypersurface in a weighted projective 3-space.
struct HypersurfaceClass {
    WeightedProjectiveSpace ambient;
    std::int64_t degree = 1;
};

/// O_X(j) . O_X(k) = j k e / (w_0 w_1 w_2 w_3). Throws WrongDimension
/// unless the ambient has exactly four weights.
Rational hypersurface_intersection(const HypersurfaceClass& x, std::int64_t j, std::int64_t k);

/// t with K_X = O_X(t), namely e - sum(w_i).
std::int64_t adjunction_class(const HypersurfaceClass& x);

/// Divide the indicated weights by their common factor p (only the part of p
/// coprime to the remaining weights). Throws NoCommonFactor when that part
/// is 1.
WeightedProjectiveSpace well_formed_reduction(const WeightedProjectiveSpace& space,
                                              const std::set<std::size_t>& indices);

/// Repeatedly apply the reduction to every m-subset of weights that shares a
/// factor coprime to the remaining weight. Unchanged if none does.
WeightedProjectiveSpace well_formed_reduction(const WeightedProjectiveSpace& space);

} // namespace ldp
