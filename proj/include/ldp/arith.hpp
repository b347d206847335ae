#pragma once

#include "ldp/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ldp {

template <class T>
struct Bezout {
    T g;
    T x;
    T y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y = g. (0, 0) gives (0, 0, 0).
Bezout<Integer> ext_gcd(const Integer& a, const Integer& b);
Bezout<std::int64_t> ext_gcd(std::int64_t a, std::int64_t b);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::span<const std::int64_t> values);

/// The residue u in {1, ..., n-1} with m*u = 1 (mod n); 0 when n = 1.
/// Throws NonInvertible when gcd(m, n) != 1.
std::int64_t mod_inverse(std::int64_t m, std::int64_t n);
Integer mod_inverse(const Integer& m, const Integer& n);

/// Least non-negative residue.
std::int64_t mod(std::int64_t x, std::int64_t n);

/// Dense univariate polynomial over Q; coefficient i multiplies z^i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);
    /// Product of (z - root)^multiplicity.
    static UniPoly from_roots(std::span<const std::pair<Rational, int>> roots);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const;
    const Rational& leading() const;

    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws ZeroPolynomial on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned exponent);

Rational eval_poly(const UniPoly& p, const Rational& x);

struct MultiplicityPart {
    long degree;
    int multiplicity;
    friend bool operator==(const MultiplicityPart&, const MultiplicityPart&) = default;
};

/// Squarefree decomposition p = c * prod q_i^{m_i} by Yun's gcd chain;
/// returns (deg q_i, m_i) for the non-constant parts, sorted by multiplicity.
std::vector<MultiplicityPart> multiplicity_profile(const UniPoly& p);

/// Determinant over Q by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);
/// Rank over Q.
std::size_t rank(std::vector<std::vector<Rational>> m);

/// Unique polynomial of degree < points.size() through (x_i, y_i).
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

} // namespace ldp
