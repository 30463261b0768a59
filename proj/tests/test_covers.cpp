#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kakeya/covers.hpp"
#include "kakeya/localgeom.hpp"
#include "support.hpp"

using namespace kakeya;

namespace {
const FieldCtx kQ = FieldCtx::rationals();
}

TEST_CASE("squares cover shape") {
    CoverSpec two = build_squares_cover(2);
    CHECK(two.generators.size() == 1);
    CHECK(two.ambient_vars.size() == 3);  // 2n - 1
    CHECK(two.target_vars.size() == 2);

    CoverSpec four = build_squares_cover(4);
    CHECK(four.generators.size() == 3);
    CHECK(four.ambient_vars.size() == 7);

    CHECK_THROWS_AS(build_squares_cover(1), BadParameters);
}

TEST_CASE("squares cover verifies symbolically for n = 2, 3, 4") {
    for (unsigned n : {2u, 3u, 4u}) {
        CoverReport rep = verify_cover_symbolic(build_squares_cover(n));
        CHECK(rep.pass);
        CHECK(rep.direction_match);
        for (bool ok : rep.generator_identities) CHECK(ok);
        for (const auto& r : rep.residuals) CHECK(r == "0");
    }
}

TEST_CASE("g14 cover shape and symbolic verification") {
    CoverSpec spec = build_g14_cover();
    CHECK(spec.generators.size() == 3);
    CHECK(spec.ambient_vars.size() == 6);
    CHECK(spec.target_vars.size() == 3);

    CoverReport rep = verify_cover_symbolic(spec);
    CHECK(rep.pass);
    CHECK(rep.direction_match);
}

TEST_CASE("a corrupted witness fails with a nonzero residual") {
    CoverSpec spec = build_squares_cover(2);
    // c_1 = t + v_1 instead of t + v_1/2.
    spec.witness_base.back() = parse_rational("v1", spec.param_vars, kQ);
    CoverReport rep = verify_cover_symbolic(spec);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.generator_identities[0]);
    CHECK(rep.residuals[0] != "0");
}

TEST_CASE("exhaustive verification over small fields") {
    for (std::uint64_t q : {5ull, 7ull, 11ull}) {
        for (unsigned n : {2u, 3u}) {
            CoverReport rep = verify_cover_exhaustive(build_squares_cover(n), q);
            CHECK(rep.pass);
            std::uint64_t tuples = 1;
            for (unsigned i = 1; i < n; ++i) tuples *= q;
            CHECK(rep.directions_checked == tuples);  // every [v : 1] chart point
        }
        CoverReport g14 = verify_cover_exhaustive(build_g14_cover(), q);
        CHECK(g14.pass);
        CHECK(g14.directions_checked == (q - 1) * q);  // al != 0, ga free
    }
    CoverReport sq11 = verify_cover_exhaustive(build_squares_cover(2), 11);
    CHECK(sq11.pass);
    CHECK(sq11.directions_checked == 11);  // all [v1 : 1]
}

TEST_CASE("empty direction domain is an error") {
    CoverSpec spec = build_squares_cover(2);
    spec.guard_vanish.push_back(parse_poly("1", spec.param_vars, kQ));
    CHECK_THROWS_AS(verify_cover_exhaustive(spec, 5), EmptyDomain);
}

TEST_CASE("undeclared witness denominators are rejected") {
    CoverSpec spec = build_g14_cover();
    spec.denominators.clear();
    CHECK_THROWS_AS(verify_cover_symbolic(spec), DenominatorUndeclared);
}

TEST_CASE("a non-line image is rejected") {
    CoverSpec spec = build_squares_cover(2);
    // Quadratic projection coordinate: z1 = a1^2 has t-degree 2 on the line.
    spec.projection[0] = parse_poly("a1^2", spec.ambient_vars, kQ);
    CHECK_THROWS_AS(verify_cover_symbolic(spec), NonLineImage);

    CoverSpec point_spec = build_squares_cover(2);
    point_spec.projection[0] = parse_poly("0", point_spec.ambient_vars, kQ);
    point_spec.projection[1] = parse_poly("1", point_spec.ambient_vars, kQ);
    CHECK_THROWS_AS(verify_cover_symbolic(point_spec), NonLineImage);
}

TEST_CASE("census: exact counts and the closed-form q((q+1)/2)^{n-1}") {
    CHECK(census_squares_image(2, 7) == 28);
    CHECK(census_squares_image(3, 7) == 112);
    CHECK(census_squares_image(2, 5) == 15);

    for (unsigned n : {2u, 3u, 4u}) {
        for (std::uint64_t q : {5ull, 7ull, 11ull, 13ull}) {
            std::uint64_t expect = q;
            for (unsigned i = 1; i < n; ++i) expect *= (q + 1) / 2;
            CHECK(census_squares_image(n, q) == expect);
        }
    }
}

TEST_CASE("census ratio approaches 2^{1-n} with an exact rational gap bound") {
    // ((q+1)/(2q))^{n-1} - (1/2)^{n-1} <= n/q, as exact rationals.
    for (unsigned n : {2u, 3u, 4u}) {
        for (std::uint64_t q : {7ull, 13ull}) {
            mpq_class ratio(1), limit(1), half(1, 2);
            mpq_class per(q + 1, 2 * q);
            per.canonicalize();
            for (unsigned i = 1; i < n; ++i) {
                ratio *= per;
                limit *= half;
            }
            mpq_class gap = ratio - limit;
            CHECK(gap >= 0);
            CHECK(gap <= mpq_class(n, q));
            // Cross-check the census against the same exact ratio.
            mpq_class denom(1);
            for (unsigned i = 0; i < n; ++i) denom *= (unsigned long)q;
            CHECK(mpq_class(census_squares_image(n, q)) / denom == ratio);
        }
    }
}

TEST_CASE("projected witness line: t in {0,1} gives distinct points along v") {
    for (std::uint64_t q : {7ull, 11ull}) {
        FieldCtx fq = FieldCtx::prime(q);
        CoverSpec spec = build_g14_cover();
        // Spot-check a couple of parameter tuples directly.
        for (std::uint64_t al = 1; al < 3; ++al) {
            for (std::uint64_t ga = 0; ga < 2; ++ga) {
                std::vector<Scalar> u{Scalar::from_int(fq, (long long)al),
                                      Scalar::from_int(fq, (long long)ga)};
                std::vector<Scalar> x0, x1;
                for (std::size_t i = 0; i < 6; ++i) {
                    RationalExpr b{to_fq(spec.witness_base[i].num, q),
                                   to_fq(spec.witness_base[i].den, q)};
                    RationalExpr d{to_fq(spec.witness_dir[i].num, q),
                                   to_fq(spec.witness_dir[i].den, q)};
                    Scalar bb = b.eval(u), dd = d.eval(u);
                    x0.push_back(bb);
                    x1.push_back(bb + dd);
                }
                std::vector<Scalar> w;
                for (std::size_t j = 0; j < 3; ++j) {
                    MultiPoly pj = to_fq(spec.projection[j], q);
                    w.push_back(pj.eval(x1) - pj.eval(x0));
                }
                // Difference is proportional to [al : 1 : ga].
                std::vector<Scalar> dv{Scalar::from_int(fq, (long long)al), Scalar::one(fq),
                                       Scalar::from_int(fq, (long long)ga)};
                CHECK(ProjPoint(w) == ProjPoint(dv));
            }
        }
    }
}
