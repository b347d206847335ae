#pragma once

#include <stdexcept>
#include <string>

namespace ldp {

enum class Errc {
    NonInvertible,
    ZeroPolynomial,
    DivisionByZero,
    NotFree,
    SmoothPoint,
    InvalidIndex,
    IndexOutOfRange,
    WrongDimension,
    NoCommonFactor,
    BadInput,
    ConditionViolated,
    RootsInvalid,
    CoefficientCountMismatch,
    NotOnSurface,
    IndeterminateAtR2,
    NotCyclicVariant,
    ParseError,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library. `tag()` names the violated
// condition (hom, action, div, man-cond) for ConditionViolated/RootsInvalid.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::string tag = {})
        : std::runtime_error(message), code_(code), tag_(std::move(tag))
    {
    }

    Errc code() const noexcept { return code_; }
    const std::string& tag() const noexcept { return tag_; }

private:
    Errc code_;
    std::string tag_;
};

} // namespace ldp
