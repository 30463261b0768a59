#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kakeya/localgeom.hpp"
#include "kakeya/parse.hpp"
#include "support.hpp"

using namespace kakeya;

namespace {
const FieldCtx kQ = FieldCtx::rationals();
const FieldCtx kF7 = FieldCtx::prime(7);
const VarSet kXYZ = VarSet::parse("x,y,z");

std::vector<Scalar> pt(const FieldCtx& ctx, std::vector<long long> xs) {
    std::vector<Scalar> p;
    for (auto x : xs) p.push_back(Scalar::from_int(ctx, x));
    return p;
}

MultiPoly cusp_cone(const FieldCtx& ctx, unsigned d) {
    VarSet xyz = kXYZ;
    std::string e = "y^" + std::to_string(d - 1) + "*z - x^" + std::to_string(d);
    return parse_poly(e, xyz, ctx);
}
}  // namespace

TEST_CASE("multiplicity at the two marked points of the cusp cone") {
    for (const FieldCtx& ctx : {kQ, kF7}) {
        for (unsigned d : {3u, 4u, 5u}) {
            MultiPoly g = cusp_cone(ctx, d);
            CHECK(multiplicity(g, pt(ctx, {0, 0, 0})) == MultResult::finite(d));
            CHECK(multiplicity(g, pt(ctx, {0, 0, 1})) == MultResult::finite(d - 1));
        }
        MultiPoly g = cusp_cone(ctx, 3);
        CHECK(multiplicity(g, pt(ctx, {1, 0, 0})) == MultResult::finite(0));  // g(p) != 0
        CHECK_THROWS_AS(multiplicity(MultiPoly::zero(kXYZ, ctx), pt(ctx, {0, 0, 0})),
                        ZeroPolynomial);
    }
}

TEST_CASE("intersection multiplicity examples") {
    MultiPoly g = cusp_cone(kQ, 3);
    AffLine x_axis(pt(kQ, {0, 0, 0}), pt(kQ, {1, 0, 0}));
    CHECK(intersection_multiplicity(g, x_axis) == MultResult::finite(3));

    // (1,1,1) satisfies v2^2 v3 = v1^3: a ruling of the cone.
    AffLine ruling(pt(kQ, {0, 0, 0}), pt(kQ, {1, 1, 1}));
    CHECK(intersection_multiplicity(g, ruling) == MultResult::inf());

    AffLine off(pt(kQ, {1, 0, 0}), pt(kQ, {0, 1, 0}));
    CHECK(intersection_multiplicity(g, off) == MultResult::finite(0));
}

TEST_CASE("intersection multiplicity dominates point multiplicity (exhaustive, F_5)") {
    FieldCtx f5 = FieldCtx::prime(5);
    MultiPoly g = cusp_cone(f5, 3);
    for (const FqVec& praw : enumerate_affine_points(3, 5)) {
        auto p = pt(f5, {praw[0], praw[1], praw[2]});
        if (!g.eval(p).is_zero()) continue;
        MultResult mp = multiplicity(g, p);
        for (const FqVec& vraw : enumerate_proj_points(3, 5)) {
            AffLine l(p, ProjPoint::from_fq(vraw, f5));
            UniPoly r = restrict_to_line(g, p, ProjPoint::from_fq(vraw, f5).coords());
            auto val = r.valuation();
            MultResult im = val ? MultResult::finite(*val) : MultResult::inf();
            CHECK(im.at_least(mp.value));
        }
    }
}

TEST_CASE("vertex intersection multiplicities are d or INFINITE (q in 5,7,11)") {
    for (std::uint64_t q : {5ull, 7ull, 11ull}) {
        FieldCtx fq = FieldCtx::prime(q);
        MultiPoly g = cusp_cone(fq, 3);
        auto origin = pt(fq, {0, 0, 0});
        CHECK(multiplicity(g, origin) == MultResult::finite(3));
        for (const FqVec& vraw : enumerate_proj_points(3, q)) {
            AffLine l(origin, ProjPoint::from_fq(vraw, fq));
            MultResult im = intersection_multiplicity(g, l);
            bool ok = im == MultResult::inf() || im == MultResult::finite(3);
            CHECK(ok);
        }
    }
}

TEST_CASE("flexy point examples") {
    VarSet xy = VarSet::parse("x,y");
    CHECK_FALSE(is_flexy_point(parse_poly("y - x^2", xy, kQ), pt(kQ, {0, 0})));
    CHECK(is_flexy_point(parse_poly("x + x*y + y^3", xy, kQ), pt(kQ, {0, 0})));
    CHECK(is_flexy_point(parse_poly("x", xy, kQ), pt(kQ, {0, 0})));

    CHECK_THROWS_AS(is_flexy_point(parse_poly("y - x^2", xy, kQ), pt(kQ, {1, 0})),
                    NotOnHypersurface);
    CHECK_THROWS_AS(is_flexy_point(parse_poly("y^2 - x^2", xy, kQ), pt(kQ, {0, 0})),
                    SingularPoint);
}

TEST_CASE("contact directions: a plane admits q+1 contact-3 directions") {
    MultiPoly plane = parse_poly("x", kXYZ, kF7);
    auto dirs = contact_directions(plane, pt(kF7, {0, 0, 0}), 3);
    CHECK(dirs.size() == 8);  // q + 1
    for (const auto& v : dirs) CHECK(v.coords()[0].is_zero());

    // k = 1 keeps every direction since g(p) = 0.
    auto all = contact_directions(plane, pt(kF7, {0, 0, 0}), 1);
    CHECK(all.size() == proj_point_count(3, 7));

    CHECK_THROWS_AS(contact_directions(parse_poly("x", kXYZ, kQ), pt(kQ, {0, 0, 0}), 3),
                    InfiniteField);
}

TEST_CASE("contact directions on the cone chart: unique vertex direction") {
    // Chart z = 1 of the projective cone over the cusp curve: the surface
    // y^2 - x^3 in coordinates (x0, x, y) is a cylinder along x0, and the
    // vertex direction is [1:0:0].
    VarSet chart = VarSet::parse("x0,x,y");
    MultiPoly h = parse_poly("y^2 - x^3", chart, kF7);
    // p = (anything, a, b) with b^2 = a^3, b != 0, non-flexy.
    // (a,b) = (2,1): 1 = 8 = 1 mod 7.
    auto p = pt(kF7, {0, 2, 1});
    REQUIRE(h.eval(p).is_zero());
    CHECK_FALSE(is_flexy_point(h, p));
    auto dirs = contact_directions(h, p, 3);
    REQUIRE(dirs.size() == 1);
    CHECK(dirs[0] == ProjPoint(pt(kF7, {1, 0, 0})));
}

TEST_CASE("funny scan examples") {
    MultiPoly conic = parse_poly("x^2 + y*z", kXYZ, kQ);
    FunnyScan s1 = is_funny_over_fq(conic, 7);
    CHECK_FALSE(s1.center.has_value());
    CHECK_FALSE(s1.degree_too_small);

    FunnyScan s2 = is_funny_over_fq(cusp_cone(kQ, 3), 7);
    CHECK_FALSE(s2.center.has_value());

    FunnyScan s3 = is_funny_over_fq(parse_poly("x", kXYZ, kQ), 7);
    CHECK_FALSE(s3.center.has_value());
    CHECK(s3.degree_too_small);
}

TEST_CASE("a strange curve in characteristic p is caught by the scan") {
    // x^2 - y*z in char 2 would be the classic strange conic; over odd q our
    // scan must stay silent for smooth conics but fires for a double line.
    MultiPoly dbl = parse_poly("x^2", kXYZ, kQ);
    FunnyScan s = is_funny_over_fq(dbl, 5);
    // Every smooth point of V(x^2) has gradient (2x,0,0) = 0; no smooth points.
    CHECK_FALSE(s.center.has_value());
    CHECK(s.no_smooth_points);
}

TEST_CASE("projective multiplicity picks the chart of the leading coordinate") {
    VarSet v4 = VarSet::parse("x0,x,y,z");
    MultiPoly G = parse_poly("y^2*z - x^3", v4, kQ);
    CHECK(proj_multiplicity(G, ProjPoint(pt(kQ, {1, 0, 0, 0}))) == 3);
    CHECK(proj_multiplicity(G, ProjPoint(pt(kQ, {1, 0, 0, 1}))) == 2);
    MultiPoly C3 = parse_poly("y^2*z - x^3", kXYZ, kQ);
    CHECK(proj_multiplicity(C3, ProjPoint(pt(kQ, {0, 0, 1}))) == 2);
}

TEST_CASE("cone detection examples") {
    VarSet v4 = VarSet::parse("x0,x,y,z");
    MultiPoly G = parse_poly("y^2*z - x^3", v4, kQ);
    ConeScan s = detect_cone(G);
    REQUIRE(s.vertex.has_value());
    CHECK(*s.vertex == ProjPoint(pt(kQ, {1, 0, 0, 0})));
    CHECK_FALSE(s.degree_one);

    VarSet q4 = VarSet::parse("x0,x1,x2,x3");
    MultiPoly quadric = parse_poly("x0*x3 - x1*x2", q4, kQ);
    CHECK_FALSE(detect_cone(quadric, 5).vertex.has_value());

    MultiPoly plane = parse_poly("x1", q4, kQ);
    ConeScan sp = detect_cone(plane);
    REQUIRE(sp.vertex.has_value());
    CHECK(*sp.vertex == ProjPoint(pt(kQ, {1, 0, 0, 0})));  // first coordinate point on it
    CHECK(sp.degree_one);
}

TEST_CASE("type-1 extreme diagnosis of the cusp cone passes all five checks") {
    MultiPoly g = cusp_cone(kQ, 3);
    DiagnosisReport rep = diagnose_type1_extreme(g, 7);
    CHECK(rep.cone_detected);
    CHECK(rep.unique_singular);
    REQUIRE(rep.singular_points.size() == 1);
    CHECK(rep.singular_points[0] == ProjPoint(pt(FieldCtx::prime(7), {0, 0, 1})));
    CHECK(rep.singular_multiplicity == 2);
    CHECK(rep.singular_mult_is_d_minus_1);
    CHECK(rep.has_nonflexy_smooth_point);
    CHECK(rep.no_funny_center);
    CHECK(rep.finite_sample);
    CHECK(rep.pass());
}

TEST_CASE("diagnosis fails check 1 on a smooth cubic surface") {
    MultiPoly g = parse_poly("x^3 + y^3 + z^3 + 1", kXYZ, kQ);
    DiagnosisReport rep = diagnose_type1_extreme(g, 7);
    CHECK_FALSE(rep.cone_detected);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("diagnosis rejects degree < 3") {
    MultiPoly g = parse_poly("x*z - y^2", kXYZ, kQ);
    CHECK_THROWS_AS(diagnose_type1_extreme(g, 7), DegreeTooSmall);
}
