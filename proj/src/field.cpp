#include "kakeya/field.hpp"

#include <charconv>

namespace kakeya {

namespace {

using u128 = unsigned __int128;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw ZeroInversion();
    // Fermat; p is prime by FieldCtx construction.
    return powmod_u64(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // This base set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw NotOddPrime();
    if (p >= (1ull << 62)) throw NotOddPrime("modulus too large (must be < 2^62)");
    FieldCtx ctx;
    ctx.kind_ = FieldKind::PrimeField;
    ctx.p_ = p;
    return ctx;
}

FieldCtx FieldCtx::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (!text.empty() && (text[0] == 'q' || text[0] == 'F')) {
        std::uint64_t p = 0;
        auto digits = text.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return prime(p);
    }
    throw UsageError("cannot parse field '" + std::string(text) + "'; expected Q or q<p>");
}

std::uint64_t FieldCtx::modulus() const {
    if (!is_prime_field()) throw WrongField("modulus requested for the rational field");
    return p_;
}

std::string FieldCtx::str() const {
    return is_prime_field() ? "q" + std::to_string(p_) : "Q";
}

Scalar Scalar::from_int(const FieldCtx& ctx, long long n) {
    if (ctx.is_prime_field()) {
        const std::uint64_t p = ctx.modulus();
        long long m = n % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return Scalar(ctx, static_cast<std::uint64_t>(m));
    }
    return Scalar(ctx, mpq_class(static_cast<long>(n)));
}

Scalar Scalar::from_mpz(const FieldCtx& ctx, const mpz_class& n) {
    if (ctx.is_prime_field()) {
        mpz_class p(static_cast<unsigned long>(ctx.modulus()));
        mpz_class m = n % p;
        if (m < 0) m += p;
        return Scalar(ctx, mpz_get_ui(m.get_mpz_t()));
    }
    return Scalar(ctx, mpq_class(n));
}

Scalar Scalar::from_mpq(const FieldCtx& ctx, const mpq_class& r) {
    if (ctx.is_prime_field()) {
        Scalar num = from_mpz(ctx, r.get_num());
        Scalar den = from_mpz(ctx, r.get_den());
        if (den.is_zero())
            throw ZeroInversion("denominator vanishes modulo " + std::to_string(ctx.modulus()));
        return num * den.inv();
    }
    mpq_class c = r;
    c.canonicalize();
    return Scalar(ctx, std::move(c));
}

Scalar Scalar::from_string(const FieldCtx& ctx, const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0) throw UsageError("cannot parse scalar '" + text + "'");
    r.canonicalize();
    return from_mpq(ctx, r);
}

bool Scalar::is_zero() const {
    return ctx_.is_prime_field() ? fp_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return ctx_.is_prime_field() ? fp_ == 1 % ctx_.modulus() : rat_ == 1;
}

std::uint64_t Scalar::fp_value() const {
    if (!ctx_.is_prime_field()) throw WrongField("fp_value on a rational scalar");
    return fp_;
}

const mpq_class& Scalar::rat_value() const {
    if (ctx_.is_prime_field()) throw WrongField("rat_value on a prime-field scalar");
    return rat_;
}

namespace {
void require_same_ctx(const Scalar& a, const Scalar& b) {
    if (a.ctx() != b.ctx())
        throw WrongField("mixed-field arithmetic: " + a.ctx().str() + " vs " + b.ctx().str());
}
}  // namespace

Scalar Scalar::operator-() const {
    if (ctx_.is_prime_field()) {
        const std::uint64_t p = ctx_.modulus();
        return Scalar(ctx_, fp_ == 0 ? 0 : p - fp_);
    }
    return Scalar(ctx_, mpq_class(-rat_));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ZeroInversion();
    if (ctx_.is_prime_field()) return Scalar(ctx_, invmod_u64(fp_, ctx_.modulus()));
    return Scalar(ctx_, mpq_class(1 / rat_));
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar r = Scalar::one(ctx_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::is_square() const {
    if (!ctx_.is_prime_field()) throw WrongField("is_square is defined over prime fields only");
    if (fp_ == 0) return true;
    const std::uint64_t p = ctx_.modulus();
    return powmod_u64(fp_, (p - 1) / 2, p) == 1;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_ctx(a, b);
    if (a.ctx_.is_prime_field()) {
        const std::uint64_t p = a.ctx_.modulus();
        std::uint64_t s = a.fp_ + b.fp_;  // p < 2^63, no overflow
        if (s >= p) s -= p;
        return Scalar(a.ctx_, s);
    }
    return Scalar(a.ctx_, mpq_class(a.rat_ + b.rat_));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_ctx(a, b);
    if (a.ctx_.is_prime_field())
        return Scalar(a.ctx_, mulmod_u64(a.fp_, b.fp_, a.ctx_.modulus()));
    return Scalar(a.ctx_, mpq_class(a.rat_ * b.rat_));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_ctx(a, b);
    return a.ctx_.is_prime_field() ? a.fp_ == b.fp_ : a.rat_ == b.rat_;
}

int Scalar::cmp(const Scalar& b) const {
    require_same_ctx(*this, b);
    if (ctx_.is_prime_field()) return fp_ < b.fp_ ? -1 : (fp_ == b.fp_ ? 0 : 1);
    return ::cmp(rat_, b.rat_);
}

std::string Scalar::str() const {
    if (ctx_.is_prime_field()) return std::to_string(fp_);
    return rat_.get_str();
}

}  // namespace kakeya
