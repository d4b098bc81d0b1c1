#pragma once

#include <stdexcept>
#include <string>

namespace padic {

enum class Err {
    NotPIntegral,
    NotAUnit,
    NotAResidue,
    NotRepresentable,
    DenominatorDivisible,
    PrecisionLoss,
    Overflow,
    ModulusMismatch,
    NonTerminating,
    LowerParameterPole,
    DegreeOverflow,
    UnknownTheorem,
    OrderTooSmall,
    PrimeOutOfRange,
    BadArgument,
};

const char* to_string(Err e);

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* to_string(Err e) {
    switch (e) {
        case Err::NotPIntegral: return "NotPIntegral";
        case Err::NotAUnit: return "NotAUnit";
        case Err::NotAResidue: return "NotAResidue";
        case Err::NotRepresentable: return "NotRepresentable";
        case Err::DenominatorDivisible: return "DenominatorDivisible";
        case Err::PrecisionLoss: return "PrecisionLoss";
        case Err::Overflow: return "Overflow";
        case Err::ModulusMismatch: return "ModulusMismatch";
        case Err::NonTerminating: return "NonTerminating";
        case Err::LowerParameterPole: return "LowerParameterPole";
        case Err::DegreeOverflow: return "DegreeOverflow";
        case Err::UnknownTheorem: return "UnknownTheorem";
        case Err::OrderTooSmall: return "OrderTooSmall";
        case Err::PrimeOutOfRange: return "PrimeOutOfRange";
        case Err::BadArgument: return "BadArgument";
    }
    return "Error";
}

} // namespace padic
