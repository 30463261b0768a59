#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kakeya/field.hpp"
#include "support.hpp"

using namespace kakeya;

TEST_CASE("field context construction and parsing") {
    CHECK(FieldCtx::prime(7).modulus() == 7);
    CHECK(FieldCtx::parse("q7") == FieldCtx::prime(7));
    CHECK(FieldCtx::parse("Q") == FieldCtx::rationals());
    CHECK(FieldCtx::prime(7) != FieldCtx::prime(11));
    CHECK(FieldCtx::prime(7) != FieldCtx::rationals());
    CHECK_THROWS_AS(FieldCtx::prime(4), NotOddPrime);
    CHECK_THROWS_AS(FieldCtx::prime(2), NotOddPrime);
    CHECK_THROWS_AS(FieldCtx::prime(1), NotOddPrime);
    CHECK_THROWS_AS(FieldCtx::prime(91), NotOddPrime);  // 7*13
    CHECK_THROWS_AS(FieldCtx::parse("q4"), NotOddPrime);
    CHECK_THROWS_AS(FieldCtx::parse("hello"), UsageError);
}

TEST_CASE("primality helper") {
    std::set<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        bool composite = false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) { composite = true; break; }
        if (!composite) primes.insert(n);
        CHECK(is_prime_u64(n) == !composite);
    }
    CHECK(is_prime_u64(2147483647ull));       // 2^31 - 1
    CHECK_FALSE(is_prime_u64(2147483649ull)); // 3 * 715827883
}

TEST_CASE("inverse examples") {
    FieldCtx f7 = FieldCtx::prime(7);

    // Oracle: the exhaustive multiplication table of F_7.
    auto inv_by_table = [&](std::uint64_t a) {
        for (std::uint64_t c = 0; c < 7; ++c)
            if (a * c % 7 == 1) return c;
        FAIL("no inverse found");
        return std::uint64_t{0};
    };
    CHECK(inv_by_table(3) == 5);
    CHECK(inv_by_table(6) == 6);

    CHECK(Scalar::from_int(f7, 3).inv() == Scalar::from_int(f7, 5));
    CHECK(Scalar::from_int(f7, 6).inv() == Scalar::from_int(f7, 6));
    CHECK(Scalar::one(f7).inv() == Scalar::one(f7));
    CHECK(Scalar::one(FieldCtx::rationals()).inv() == Scalar::one(FieldCtx::rationals()));
    for (std::uint64_t a = 1; a < 7; ++a)
        CHECK(Scalar::from_int(f7, (long long)a).inv() ==
              Scalar::from_int(f7, (long long)inv_by_table(a)));

    CHECK_THROWS_AS(Scalar::zero(f7).inv(), ZeroInversion);
    CHECK_THROWS_AS(Scalar::zero(FieldCtx::rationals()).inv(), ZeroInversion);
}

TEST_CASE("is_square examples against enumeration") {
    FieldCtx f7 = FieldCtx::prime(7);
    std::set<std::uint64_t> squares;
    for (std::uint64_t c = 0; c < 7; ++c) squares.insert(c * c % 7);
    CHECK(squares == std::set<std::uint64_t>{0, 1, 2, 4});

    CHECK(Scalar::zero(f7).is_square());
    CHECK(Scalar::from_int(f7, 2).is_square());
    CHECK_FALSE(Scalar::from_int(f7, 3).is_square());
    CHECK_THROWS_AS(Scalar::one(FieldCtx::rationals()).is_square(), WrongField);
}

TEST_CASE("is_square matches enumeration for all odd p <= 101") {
    for (std::uint64_t p = 3; p <= 101; ++p) {
        if (!is_prime_u64(p)) continue;
        FieldCtx fp = FieldCtx::prime(p);
        std::set<std::uint64_t> squares;
        for (std::uint64_t c = 0; c < p; ++c) squares.insert(c * c % p);
        std::uint64_t count = 0;
        for (std::uint64_t a = 0; a < p; ++a) {
            bool expected = squares.count(a) > 0;
            CHECK(Scalar::from_int(fp, (long long)a).is_square() == expected);
            if (expected) ++count;
        }
        CHECK(count == (p + 1) / 2);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (const FieldCtx& ctx : {FieldCtx::prime(7), FieldCtx::prime(101), FieldCtx::rationals()}) {
        for (int iter = 0; iter < 200; ++iter) {
            Scalar a = testsupport::random_scalar(rng, ctx);
            Scalar b = testsupport::random_scalar(rng, ctx);
            Scalar c = testsupport::random_scalar(rng, ctx);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("canonical representations") {
    FieldCtx f7 = FieldCtx::prime(7);
    CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
    CHECK(Scalar::from_int(f7, 15).fp_value() == 1);
    FieldCtx q = FieldCtx::rationals();
    CHECK(Scalar::from_string(q, "2/4") == Scalar::from_string(q, "1/2"));
    CHECK(Scalar::from_string(q, "2/4").str() == "1/2");
    CHECK(Scalar::from_string(f7, "1/2") == Scalar::from_int(f7, 4));  // inv(2) = 4 mod 7
    CHECK(Scalar::from_int(q, -3).str() == "-3");
    CHECK_THROWS_AS(Scalar::from_string(FieldCtx::prime(7), "1/7"), ZeroInversion);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    Scalar a = Scalar::one(FieldCtx::prime(7));
    Scalar b = Scalar::one(FieldCtx::prime(11));
    Scalar c = Scalar::one(FieldCtx::rationals());
    CHECK_THROWS_AS((void)(a + b), WrongField);
    CHECK_THROWS_AS((void)(a * c), WrongField);
    CHECK_THROWS_AS((void)(a == c), WrongField);
}
