#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "kakeya/errors.hpp"

namespace kakeya {

/// Deterministic Miller-Rabin, valid for the full uint64_t range.
bool is_prime_u64(std::uint64_t n);

enum class FieldKind { PrimeField, Rationals };

/// Descriptor of the coefficient field: F_p for an odd prime p, or Q.
/// Two contexts are interchangeable iff kind and modulus agree.
class FieldCtx {
public:
    FieldCtx() : kind_(FieldKind::Rationals), p_(0) {}

    static FieldCtx prime(std::uint64_t p);
    static FieldCtx rationals() { return FieldCtx(); }

    /// Accepts "Q" or "q<p>" (e.g. "q7").
    static FieldCtx parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    std::uint64_t modulus() const;

    std::string str() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return !(a == b); }

private:
    FieldKind kind_;
    std::uint64_t p_;
};

/// Exact field element in canonical form: an integer in [0, p) for F_p,
/// a reduced fraction with positive denominator for Q. Equality of Scalars
/// is equality of representations.
class Scalar {
public:
    Scalar() : ctx_(FieldCtx::rationals()), fp_(0), rat_(0) {}

    static Scalar zero(const FieldCtx& ctx) { return from_int(ctx, 0); }
    static Scalar one(const FieldCtx& ctx) { return from_int(ctx, 1); }
    static Scalar from_int(const FieldCtx& ctx, long long n);
    static Scalar from_mpz(const FieldCtx& ctx, const mpz_class& n);
    static Scalar from_mpq(const FieldCtx& ctx, const mpq_class& r);
    /// Accepts an integer or "num/den" literal.
    static Scalar from_string(const FieldCtx& ctx, const std::string& text);

    const FieldCtx& ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    std::uint64_t fp_value() const;       // PrimeField only
    const mpq_class& rat_value() const;   // Rationals only

    Scalar operator-() const;
    Scalar inv() const;  // throws ZeroInversion on 0
    Scalar pow(std::uint64_t e) const;

    /// Euler's criterion over F_p; 0 counts as a square. WrongField over Q.
    bool is_square() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order for deterministic sorting; compares representations.
    int cmp(const Scalar& b) const;

    std::string str() const;

private:
    Scalar(const FieldCtx& ctx, std::uint64_t v) : ctx_(ctx), fp_(v), rat_(0) {}
    Scalar(const FieldCtx& ctx, mpq_class r) : ctx_(ctx), fp_(0), rat_(std::move(r)) {}

    FieldCtx ctx_;
    std::uint64_t fp_;
    mpq_class rat_;
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

}  // namespace kakeya
