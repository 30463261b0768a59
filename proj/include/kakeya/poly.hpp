#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kakeya/field.hpp"

namespace kakeya {

/// Exponent vector, one entry per variable of the owning VarSet.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded-lexicographic order: compare total degree first, then the
/// exponent vectors lexicographically (earlier variables weigh more).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Ordered list of distinct variable names; the order fixes exponent
/// positions and the printing order.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    /// Comma-separated list, e.g. "x,y,z".
    static VarSet parse(std::string_view csv);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(std::string_view name) const;

    VarSet prepended(const std::string& new_name) const;
    VarSet without(std::size_t idx) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

class UniPoly;

/// Sparse multivariate polynomial over a fixed field and variable set.
/// Invariants: no stored coefficient is zero; the zero polynomial has an
/// empty term map; terms are kept in graded-lex order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(VarSet vars, FieldCtx ctx) : vars_(std::move(vars)), ctx_(ctx) {}

    static MultiPoly zero(const VarSet& vars, const FieldCtx& ctx) { return MultiPoly(vars, ctx); }
    static MultiPoly constant(const VarSet& vars, const Scalar& c);
    static MultiPoly variable(const VarSet& vars, const FieldCtx& ctx, std::size_t idx);
    static MultiPoly monomial(const VarSet& vars, Monomial m, const Scalar& c);

    const VarSet& vars() const { return vars_; }
    const FieldCtx& ctx() const { return ctx_; }
    const std::map<Monomial, Scalar, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Max total degree; nullopt is the "-inf" sentinel of the zero polynomial.
    std::optional<unsigned> degree() const;
    /// Largest exponent of variable idx appearing in any term.
    unsigned degree_in(std::size_t idx) const;
    bool is_homogeneous() const;
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Scalar eval(std::span<const Scalar> point) const;

    /// Simultaneous substitution x_i -> images[i]; all images must share one
    /// variable set and field, which become the result's.
    MultiPoly substitute(std::span<const MultiPoly> images) const;

    /// Canonical rendering under graded-lex order, leading term first.
    /// Reparsing the output reproduces the polynomial.
    std::string str() const;

private:
    VarSet vars_;
    FieldCtx ctx_;
    std::map<Monomial, Scalar, GrlexLess> terms_;
};

/// Dense univariate polynomial in t; trailing zero coefficients stripped.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldCtx ctx) : ctx_(ctx) {}
    UniPoly(FieldCtx ctx, std::vector<Scalar> coeffs);

    const FieldCtx& ctx() const { return ctx_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<unsigned> degree() const;
    /// Order of vanishing at t = 0; nullopt iff identically zero.
    std::optional<unsigned> valuation() const;
    Scalar coeff(std::size_t i) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar eval(const Scalar& t) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    void strip();
    FieldCtx ctx_;
    std::vector<Scalar> coeffs_;
};

// --- spec operations on polynomials ---

/// Homogenize with respect to a fresh variable, prepended to the variable set.
MultiPoly homogenize(const MultiPoly& g, const std::string& new_var);

/// Set var = 1 and drop it from the variable set.
MultiPoly dehomogenize(const MultiPoly& G, const std::string& var);

/// result[i] is the homogeneous degree-i part; sum equals g; empty for g = 0.
std::vector<MultiPoly> graded_parts(const MultiPoly& g);

/// g(x + p), exactly.
MultiPoly shift(const MultiPoly& g, std::span<const Scalar> p);

/// g(p + t v) as an exact univariate polynomial in t.
UniPoly restrict_to_line(const MultiPoly& g, std::span<const Scalar> p, std::span<const Scalar> v);

/// Rewrite modulo the relation var^d = repl until no term has var-exponent >= d.
/// repl must not involve var (InvalidRelation otherwise).
MultiPoly reduce_by_binomial(const MultiPoly& g, const std::string& var, unsigned d,
                             const MultiPoly& repl);

/// Formal partial derivatives, one per variable.
std::vector<MultiPoly> gradient(const MultiPoly& g);

/// Exact single-divisor division: returns the quotient iff d | n.
std::optional<MultiPoly> try_divide_exact(const MultiPoly& n, const MultiPoly& d);

/// Map a polynomial over Q into F_p coefficient-wise (num * den^-1 mod p).
/// Identity when the context already matches. ZeroInversion if a coefficient
/// denominator vanishes mod p.
MultiPoly change_field(const MultiPoly& g, const FieldCtx& target);

}  // namespace kakeya
