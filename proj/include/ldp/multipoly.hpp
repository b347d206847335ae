#pragma once

#include "ldp/arith.hpp"
#include "ldp/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace ldp {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over Q in a fixed number of variables.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly monomial(const Rational& c, Exponents e);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly derivative(std::size_t var) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Substitute values for all variables but `keep`; the result is in `keep`.
    UniPoly specialize(std::size_t keep, std::span<const Rational> point) const;

    /// Largest exponent of `var` appearing in any term (-1 for zero).
    long degree_in(std::size_t var) const;
    /// Largest value of sum(weights[i] * e_i) over the terms (-1 for zero).
    long weighted_degree(std::span<const std::int64_t> weights) const;
    bool is_quasi_homogeneous(std::span<const std::int64_t> weights, long degree) const;

    /// Append a variable w and multiply each term by w^(degree - wdeg(term)).
    /// Throws BadInput if some term has weighted degree above `degree`.
    MultiPoly homogenize(std::span<const std::int64_t> weights, long degree) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

} // namespace ldp
