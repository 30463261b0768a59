#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kakeya {

// Base class for every error the toolkit raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact fields
struct NotOddPrime : Error {
    explicit NotOddPrime(const std::string& what = "modulus must be an odd prime") : Error(what) {}
};
struct ZeroInversion : Error {
    explicit ZeroInversion(const std::string& what = "division by zero field element") : Error(what) {}
};
struct WrongField : Error {
    explicit WrongField(const std::string& what) : Error(what) {}
};

// polynomials and parsing
struct SyntaxError : Error {
    SyntaxError(std::size_t position, const std::string& what)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          pos(position) {}
    std::size_t pos;
};
struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name) : Error("unknown variable: " + name) {}
};
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& what = "operation undefined for the zero polynomial") : Error(what) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};
struct ZeroDirection : Error {
    explicit ZeroDirection(const std::string& what = "direction vector must be nonzero") : Error(what) {}
};
struct InvalidRelation : Error {
    explicit InvalidRelation(const std::string& what) : Error(what) {}
};

// local geometry
struct NotOnHypersurface : Error {
    explicit NotOnHypersurface(const std::string& what = "point does not lie on the hypersurface") : Error(what) {}
};
struct SingularPoint : Error {
    explicit SingularPoint(const std::string& what = "point is singular; smooth point required") : Error(what) {}
};
struct InfiniteField : Error {
    explicit InfiniteField(const std::string& what = "enumeration requires a finite field") : Error(what) {}
};
struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& what = "degree too small") : Error(what) {}
};

// set constructors
struct NotLinear : Error {
    explicit NotLinear(const std::string& what = "polynomial must be linear") : Error(what) {}
};
struct PointNotOnHyperplane : Error {
    explicit PointNotOnHyperplane(const std::string& what = "point does not lie on the hyperplane") : Error(what) {}
};
struct BadParameters : Error {
    explicit BadParameters(const std::string& what) : Error(what) {}
};

// sweeps and covers
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};
struct EmptyDomain : Error {
    explicit EmptyDomain(const std::string& what = "direction domain is empty over this field") : Error(what) {}
};
struct DenominatorUndeclared : Error {
    explicit DenominatorUndeclared(const std::string& what) : Error(what) {}
};
struct NonLineImage : Error {
    explicit NonLineImage(const std::string& what) : Error(what) {}
};
struct CenterOnDirection : Error {
    explicit CenterOnDirection(const std::string& what = "direction maps through the projection center") : Error(what) {}
};

// CLI / input files
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace kakeya
