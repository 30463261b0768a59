#include "kakeya/localgeom.hpp"

#include <algorithm>
#include <array>

namespace kakeya {

MultiPoly to_fq(const MultiPoly& g, std::uint64_t q) {
    if (g.ctx().is_prime_field()) {
        if (g.ctx().modulus() != q)
            throw WrongField("polynomial lives over " + g.ctx().str() + ", not q" +
                             std::to_string(q));
        return g;
    }
    return change_field(g, FieldCtx::prime(q));
}

MultResult multiplicity(const MultiPoly& g, std::span<const Scalar> p) {
    if (g.is_zero()) throw ZeroPolynomial("multiplicity of the zero polynomial");
    MultiPoly local = shift(g, p);
    // The grlex-least surviving term has the least total degree.
    return MultResult::finite(total_degree(local.terms().begin()->first));
}

MultResult intersection_multiplicity(const MultiPoly& g, const AffLine& l) {
    if (g.is_zero()) throw ZeroPolynomial("intersection multiplicity with the zero polynomial");
    UniPoly r = restrict_to_line(g, l.base(), l.dir().coords());
    auto v = r.valuation();
    return v ? MultResult::finite(*v) : MultResult::inf();
}

bool is_flexy_point(const MultiPoly& g, std::span<const Scalar> p) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (!g.eval(p).is_zero()) throw NotOnHypersurface();
    MultiPoly local = shift(g, p);
    auto parts = graded_parts(local);
    if (parts.size() < 2 || !parts[0].is_zero() || parts[1].is_zero())
        throw SingularPoint();
    if (parts.size() < 3 || parts[2].is_zero()) return true;
    return try_divide_exact(parts[2], parts[1]).has_value();
}

std::vector<ProjDirection> contact_directions(const MultiPoly& g, std::span<const Scalar> p,
                                              unsigned k) {
    if (!g.ctx().is_prime_field())
        throw InfiniteField("direction exhaustion needs a finite field");
    if (g.is_zero()) throw ZeroPolynomial();
    if (!g.eval(p).is_zero()) throw NotOnHypersurface();
    if (k < 1) throw BadParameters("contact order k must be >= 1");

    const std::uint64_t q = g.ctx().modulus();
    const std::size_t n = g.vars().size();
    std::vector<ProjDirection> out;
    for (const FqVec& v : enumerate_proj_points(n, q)) {
        std::vector<Scalar> dir;
        dir.reserve(n);
        for (auto a : v) dir.push_back(Scalar::from_int(g.ctx(), a));
        auto val = restrict_to_line(g, p, dir).valuation();
        MultResult m = val ? MultResult::finite(*val) : MultResult::inf();
        if (m.at_least(k)) out.emplace_back(std::move(dir));
    }
    return out;  // enumeration order is already sorted by coordinates
}

FunnyScan is_funny_over_fq(const MultiPoly& C, std::uint64_t q) {
    if (C.is_zero()) throw ZeroPolynomial();
    if (C.vars().size() != 3) throw DimensionMismatch("funny scan expects a plane curve (3 vars)");
    if (!C.is_homogeneous()) throw BadParameters("funny scan expects a homogeneous form");
    if (*C.degree() < 2) return FunnyScan{std::nullopt, true, false};

    MultiPoly Cq = to_fq(C, q);
    const FieldCtx& fq = Cq.ctx();
    auto grad = gradient(Cq);

    // Collect the gradient at every smooth F_q-point of C.
    std::vector<std::array<Scalar, 3>> tangents;
    auto points = enumerate_proj_points(3, q);
    for (const FqVec& raw : points) {
        std::vector<Scalar> p;
        for (auto a : raw) p.push_back(Scalar::from_int(fq, a));
        if (!Cq.eval(p).is_zero()) continue;
        std::array<Scalar, 3> gp{grad[0].eval(p), grad[1].eval(p), grad[2].eval(p)};
        if (gp[0].is_zero() && gp[1].is_zero() && gp[2].is_zero()) continue;
        tangents.push_back(std::move(gp));
    }
    if (tangents.empty()) return FunnyScan{std::nullopt, false, true};

    for (const FqVec& raw : points) {
        std::vector<Scalar> p0;
        for (auto a : raw) p0.push_back(Scalar::from_int(fq, a));
        bool all_through = true;
        for (const auto& gp : tangents) {
            Scalar dot = gp[0] * p0[0] + gp[1] * p0[1] + gp[2] * p0[2];
            if (!dot.is_zero()) { all_through = false; break; }
        }
        if (all_through) return FunnyScan{ProjPoint(std::move(p0)), false, false};
    }
    return FunnyScan{};
}

unsigned proj_multiplicity(const MultiPoly& G, const ProjPoint& P) {
    if (G.is_zero()) throw ZeroPolynomial();
    if (!G.is_homogeneous()) throw BadParameters("projective multiplicity expects a form");
    if (P.ncoords() != G.vars().size())
        throw DimensionMismatch("point and form live in different spaces");
    const std::size_t chart = P.leading_index();
    MultiPoly h = dehomogenize(G, G.vars().name(chart));
    std::vector<Scalar> affine;
    affine.reserve(P.ncoords() - 1);
    for (std::size_t i = 0; i < P.ncoords(); ++i)
        if (i != chart) affine.push_back(P.coords()[i]);
    return multiplicity(h, affine).value;
}

ConeScan detect_cone(const MultiPoly& G, std::optional<std::uint64_t> enum_q) {
    if (G.is_zero()) throw ZeroPolynomial();
    if (!G.is_homogeneous()) throw BadParameters("cone detection expects a homogeneous form");
    const std::size_t n = G.vars().size();
    if (n < 3) throw BadParameters("cone detection expects at least 3 homogeneous coordinates");
    const unsigned d = *G.degree();

    ConeScan scan;
    scan.degree_one = d == 1;

    for (std::size_t i = 0; i < n; ++i) {
        // At a coordinate point the chart multiplicity is d - deg_{x_i} G,
        // so e_i is a vertex exactly when G does not involve x_i.
        if (G.degree_in(i) != 0) continue;
        std::vector<Scalar> e(n, Scalar::zero(G.ctx()));
        e[i] = Scalar::one(G.ctx());
        ProjPoint P(std::move(e));
        if (proj_multiplicity(G, P) == d) {
            scan.vertex = std::move(P);
            return scan;
        }
    }

    if (enum_q) {
        MultiPoly Gq = to_fq(G, *enum_q);
        for (const FqVec& raw : enumerate_proj_points(n, *enum_q)) {
            ProjPoint P = ProjPoint::from_fq(raw, Gq.ctx());
            if (!Gq.eval(P.coords()).is_zero()) continue;
            if (proj_multiplicity(Gq, P) == d) {
                scan.vertex = std::move(P);
                return scan;
            }
        }
    }
    return scan;
}

DiagnosisReport diagnose_type1_extreme(const MultiPoly& g, std::uint64_t q) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (g.vars().size() != 3) throw DimensionMismatch("diagnosis expects a surface in A^3");
    const unsigned d = *g.degree();
    if (d < 3) throw DegreeTooSmall("the extreme construction needs degree >= 3");

    DiagnosisReport rep;
    rep.d = d;
    rep.q = q;

    // Fresh homogenization variable.
    std::string hv = "x0";
    while (g.vars().index(hv)) hv += "_";

    MultiPoly gq = to_fq(g, q);
    const FieldCtx& fq = gq.ctx();

    // (1) V(G) is a cone: a point of multiplicity d exists.
    ConeScan cone = detect_cone(homogenize(gq, hv), q);
    rep.cone_detected = cone.vertex.has_value();
    rep.vertex = cone.vertex;

    // The part at infinity C = V(G) cap V(x0) is the top graded part of g.
    MultiPoly C = graded_parts(gq).back();
    auto gradC = gradient(C);

    std::vector<ProjPoint> smooth;
    for (const FqVec& raw : enumerate_proj_points(3, q)) {
        ProjPoint P = ProjPoint::from_fq(raw, fq);
        if (!C.eval(P.coords()).is_zero()) continue;
        bool singular = true;
        for (const auto& dC : gradC)
            if (!dC.eval(P.coords()).is_zero()) { singular = false; break; }
        if (singular) {
            rep.singular_points.push_back(P);
        } else {
            smooth.push_back(P);
        }
    }

    // (2) exactly one singular F_q-point on C.
    rep.unique_singular = rep.singular_points.size() == 1;

    // (3) its multiplicity on C is d-1.
    if (!rep.singular_points.empty()) {
        rep.singular_multiplicity = proj_multiplicity(C, rep.singular_points.front());
        rep.singular_mult_is_d_minus_1 =
            rep.unique_singular && rep.singular_multiplicity == d - 1;
    }

    // (4) the flexy scan finds at least one non-flexy smooth point.
    rep.smooth_points = smooth.size();
    for (const ProjPoint& P : smooth) {
        const std::size_t chart = P.leading_index();
        MultiPoly h = dehomogenize(C, C.vars().name(chart));
        std::vector<Scalar> affine;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != chart) affine.push_back(P.coords()[i]);
        if (!is_flexy_point(h, affine)) ++rep.nonflexy_smooth_points;
    }
    rep.has_nonflexy_smooth_point = rep.nonflexy_smooth_points > 0;

    // (5) no funny center among F_q-points.
    FunnyScan funny = is_funny_over_fq(C, q);
    rep.funny_center = funny.center;
    rep.no_funny_center = !funny.center.has_value();

    return rep;
}

}  // namespace kakeya
