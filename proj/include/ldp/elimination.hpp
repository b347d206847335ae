#pragma once

#include "ldp/arith.hpp"
#include "ldp/multipoly.hpp"

#include <span>

namespace ldp {

/// Sylvester resultant of f and g taken with formal degrees (the leading
/// coefficients may vanish).
Rational sylvester_resultant(const UniPoly& f, long f_degree, const UniPoly& g, long g_degree);

/// Res_{elim}(F, G) for bivariate F, G, as a polynomial in the remaining
/// variable. Computed exactly by evaluation at integer points and
/// interpolation up to the Bezout degree bound.
UniPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t elim);

/// True only if the bivariate polynomials provably have no common complex
/// zero. A false result is inconclusive.
bool certify_no_common_zero(std::span<const MultiPoly> polys);

} // namespace ldp
