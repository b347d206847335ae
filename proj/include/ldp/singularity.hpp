#pragma once

#include "ldp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ldp {

/// Cyclic quotient singularity C^2 / (1/r)(q1, q2). Order 1 is a smooth point.
struct QuotientSingularity {
    std::int64_t order = 1;
    std::int64_t q1 = 1;
    std::int64_t q2 = 1;

    bool is_smooth() const { return order == 1; }
    std::string to_string() const;
    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
};

/// Rescale the generator so the first weight is 1: result is 1/r(1, q) with
/// q in [0, r). The smooth point is canonically 1/1(1, 1).
/// Throws NotFree when gcd(q_i, r) != 1.
QuotientSingularity normalize(const QuotientSingularity& s);

/// Same order and normalized weights q' = q or q q' = 1 (mod r).
bool is_equivalent(const QuotientSingularity& a, const QuotientSingularity& b);

/// Hirzebruch-Jung continued fraction r/q = b1 - 1/(b2 - 1/(...)).
struct HJChain {
    std::vector<std::int64_t> entries;

    /// Re-evaluates the continued fraction.
    Rational value() const;
    friend bool operator==(const HJChain&, const HJChain&) = default;
};

/// Throws SmoothPoint when r = 1.
HJChain hj_resolution(const QuotientSingularity& s);

enum class AdeFamily { A, D, E };

/// Rational double point A_rank, D_rank or E_rank. The Milnor number equals
/// the rank.
struct AdeType {
    AdeFamily family = AdeFamily::A;
    int rank = 1;

    /// Throws InvalidIndex outside A_{>=1}, D_{>=4}, E_{6,7,8}.
    static AdeType make(AdeFamily family, int rank);
    static AdeType parse(const std::string& text);

    int milnor_number() const { return rank; }
    std::string name() const;
    friend bool operator==(const AdeType&, const AdeType&) = default;
};

const char* to_string(AdeFamily f);

/// Cyclic class-T data: the singularity 1/(d n^2)(1, d n m - 1), gcd(m, n) = 1.
/// u is the inverse of m mod n (0 when n = 1). n = 1 is the A_{d-1} point.
struct CyclicT {
    std::int64_t d = 1;
    std::int64_t n = 1;
    std::int64_t m = 1;
    std::int64_t u = 0;

    /// Throws BadInput unless d >= 1, n >= 1 and gcd(m, n) = 1.
    static CyclicT make(std::int64_t d, std::int64_t n, std::int64_t m);

    QuotientSingularity singularity() const;
    bool is_a_type() const { return n == 1; }
    friend bool operator==(const CyclicT&, const CyclicT&) = default;
};

struct ClassTDescriptor {
    std::variant<AdeType, CyclicT> kind;
    /// Every (d, n, m) that fits, ascending n; filled by detect_class_T.
    std::vector<CyclicT> decompositions;

    bool is_cyclic() const { return std::holds_alternative<CyclicT>(kind); }
    const CyclicT& cyclic() const { return std::get<CyclicT>(kind); }
    const AdeType& rdp() const { return std::get<AdeType>(kind); }
    std::string to_string() const;
};

/// Class-T recognition for a cyclic quotient singularity. The primary
/// descriptor carries the largest n; n = 1 means the A_{r-1} reading.
std::optional<ClassTDescriptor> detect_class_T(const QuotientSingularity& s);

} // namespace ldp
