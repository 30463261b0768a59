#pragma once

#include <string_view>

#include "kakeya/poly.hpp"

namespace kakeya {

/// Quotient of two polynomials; den is never zero. Used for witness
/// coordinates that divide by direction parameters. No gcd reduction is
/// performed; zero-testing only inspects the numerator.
struct RationalExpr {
    MultiPoly num;
    MultiPoly den;

    static RationalExpr from_poly(MultiPoly p);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const;

    RationalExpr operator-() const;
    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
    RationalExpr pow(unsigned e) const;

    /// Exact evaluation; throws ZeroInversion when den vanishes at the point.
    Scalar eval(std::span<const Scalar> point) const;

    std::string str() const;
};

/// Parse a polynomial expression: integer (or integer-ratio) literals,
/// variable names, + - * ^, parentheses; implicit multiplication is
/// forbidden and whitespace ignored. Division is accepted only by nonzero
/// constants. Errors: SyntaxError (with position), UnknownVariable.
MultiPoly parse_poly(std::string_view text, const VarSet& vars, const FieldCtx& ctx);

/// Same grammar with unrestricted division; result may have a nontrivial
/// denominator.
RationalExpr parse_rational(std::string_view text, const VarSet& vars, const FieldCtx& ctx);

}  // namespace kakeya
