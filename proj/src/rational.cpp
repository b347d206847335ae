#include "ldp/rational.hpp"

#include "ldp/error.hpp"

#include <cctype>
#include <ostream>

namespace ldp {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotFree: return "NotFree";
    case Errc::SmoothPoint: return "SmoothPoint";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NoCommonFactor: return "NoCommonFactor";
    case Errc::BadInput: return "BadInput";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::RootsInvalid: return "RootsInvalid";
    case Errc::CoefficientCountMismatch: return "CoefficientCountMismatch";
    case Errc::NotOnSurface: return "NotOnSurface";
    case Errc::IndeterminateAtR2: return "IndeterminateAtR2";
    case Errc::NotCyclicVariant: return "NotCyclicVariant";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto bad = [&] {
        return Error(Errc::ParseError, "cannot parse rational '" + std::string(text) + "'");
    };
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char ch : s)
            if (ch < '0' || ch > '9')
                return false;
        return true;
    };
    auto to_integer = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return Integer(std::string(s), 10);
    };

    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text))
            throw bad();
        return Rational(to_integer(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw bad();
    return Rational(to_integer(num), to_integer(den));
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(Errc::DivisionByZero, "division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return to_string();
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero())
            throw Error(Errc::DivisionByZero, "negative power of zero");
        return pow(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational abs(const Rational& x)
{
    return x.sign() < 0 ? -x : x;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.pretty();
}

} // namespace ldp
