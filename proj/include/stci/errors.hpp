#pragma once

#include <stdexcept>
#include <string>

namespace stci {

// Base class for all input/consistency errors thrown by the library.
// Computation outcomes that are answers rather than failures (NotCertified,
// Undetermined, a semigroup jump found by the lift) are returned in result
// structs, not thrown.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroGenerator : Error {
    ZeroGenerator() : Error("semigroup generators must be positive") {}
};

struct NotNumerical : Error {
    explicit NotNumerical(long long g)
        : Error("gcd of generators is " + std::to_string(g) +
                ", complement is infinite") {}
};

struct NotMember : Error {
    explicit NotMember(long long k)
        : Error(std::to_string(k) + " is not a member of the semigroup") {}
};

struct WeightMismatch : Error {
    WeightMismatch() : Error("operands carry different variable weights") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no order or initial part") {}
};

struct ValuationOfZero : Error {
    ValuationOfZero() : Error("zero series has no valuation") {}
};

struct NonUniqueH1Witness : Error {
    explicit NonUniqueH1Witness(const std::string& what)
        : Error("three-relation case witness is not unique: " + what) {}
};

struct DegenerateRelation : Error {
    DegenerateRelation() : Error("a1*b + a*b2 = 0: relation is degenerate") {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what)
        : Error("internal cross-check failed: " + what) {}
};

struct ReductionFailure : Error {
    explicit ReductionFailure(const std::string& what)
        : Error("power reduction failed: " + what) {}
};

struct TailAtOrBelowBase : Error {
    TailAtOrBelowBase(long long i, long long base)
        : Error("tail exponent " + std::to_string(i) +
                " does not exceed base exponent " + std::to_string(base)) {}
};

struct InvalidTail : Error {
    explicit InvalidTail(const std::string& what) : Error("invalid tail: " + what) {}
};

struct TruncationTooSmall : Error {
    TruncationTooSmall(long long t, long long need)
        : Error("truncation order " + std::to_string(t) +
                " is below the sound minimum " + std::to_string(need)) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what)
        : Error("parametrization shape not supported: " + what) {}
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& what)
        : Error("invalid family parameters: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace stci
