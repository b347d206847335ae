#pragma once

#include "ldp/multipoly.hpp"
#include "ldp/singularity.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ldp {

/// Hypersurface model of a rational double point in C^3_{x,y,z}.
struct RDPData {
    AdeType type;
    /// Defining polynomial f(x, y, z).
    MultiPoly f{3};
    /// Monomial basis of C[x,y,z] / <f, df/dx, df/dy, df/dz>.
    std::vector<Exponents> milnor_basis;
    int milnor_number = 0;
    /// Weights (wx, wy, wz) making f quasi-homogeneous of `weighted_degree`.
    std::array<std::int64_t, 3> weights{};
    long weighted_degree = 0;
};

/// Catalogued data for A_{k-1} (k >= 2), D_k (k >= 4), E_6, E_7, E_8.
/// Throws InvalidIndex outside those ranges.
RDPData rdp_data(const AdeType& type);

/// Resolution graph of the singularity: the Dynkin diagram, every vertex a
/// (-2)-curve.
struct DualGraph {
    std::vector<std::int64_t> self_intersections;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

DualGraph dynkin_graph(const AdeType& type);

std::string monomial_string(const Exponents& e);

} // namespace ldp
