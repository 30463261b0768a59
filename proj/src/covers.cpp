#include "kakeya/covers.hpp"

#include <algorithm>
#include <chrono>

#include "kakeya/localgeom.hpp"

namespace kakeya {

namespace {

// Recoat a polynomial in param_vars as one in param_vars + {t}.
MultiPoly adjoin_t(const MultiPoly& p, const VarSet& combined) {
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        auto idx = combined.index(p.vars().name(i));
        images.push_back(MultiPoly::variable(combined, p.ctx(), *idx));
    }
    return p.substitute(images);
}

RationalExpr adjoin_t(const RationalExpr& e, const VarSet& combined) {
    return RationalExpr{adjoin_t(e.num, combined), adjoin_t(e.den, combined)};
}

// Compose a polynomial with rational coordinate values.
RationalExpr compose(const MultiPoly& h, const std::vector<RationalExpr>& coords) {
    if (coords.size() != h.vars().size())
        throw DimensionMismatch("composition arity mismatch");
    const VarSet& vars = coords[0].num.vars();
    const FieldCtx& ctx = coords[0].num.ctx();
    RationalExpr acc = RationalExpr::from_poly(MultiPoly::zero(vars, ctx));
    for (const auto& [m, c] : h.terms()) {
        RationalExpr term = RationalExpr::from_poly(MultiPoly::constant(vars, c));
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) term = term * coords[i].pow(m[i]);
        acc = acc + term;
    }
    return acc;
}

// The denominator must clear against the declared list: divide out declared
// factors until only a constant remains.
void require_cleared(const MultiPoly& den, const std::vector<MultiPoly>& declared,
                     const std::string& where) {
    MultiPoly rem = den;
    for (;;) {
        if (auto d = rem.degree(); d && *d == 0) return;
        bool progressed = false;
        for (const auto& dec : declared) {
            if (!dec.degree() || *dec.degree() == 0) continue;
            if (auto quot = try_divide_exact(rem, dec)) {
                rem = std::move(*quot);
                progressed = true;
                break;
            }
        }
        if (!progressed)
            throw DenominatorUndeclared(where + ": denominator " + den.str() +
                                        " does not clear against the declared denominators");
    }
}

// Coefficient of t^k, with the t variable dropped.
MultiPoly t_coefficient(const MultiPoly& p, std::size_t t_idx, unsigned k, const VarSet& params) {
    MultiPoly out(params, p.ctx());
    for (const auto& [m, c] : p.terms()) {
        if (m[t_idx] != k) continue;
        Monomial mm;
        mm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != t_idx) mm.push_back(m[i]);
        out.add_term(mm, c);
    }
    return out;
}

void validate_shape(const CoverSpec& spec) {
    const std::size_t N = spec.ambient_vars.size();
    const std::size_t n = spec.target_vars.size();
    if (spec.projection.size() != n || spec.direction_coords.size() != n)
        throw DimensionMismatch("projection/direction arity must equal the target dimension");
    if (spec.witness_base.size() != N || spec.witness_dir.size() != N)
        throw DimensionMismatch("witness must have one coordinate per ambient variable");
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

CoverReport verify_cover_symbolic(const CoverSpec& spec) {
    validate_shape(spec);
    auto t0 = std::chrono::steady_clock::now();
    const FieldCtx Q = FieldCtx::rationals();
    const std::size_t N = spec.ambient_vars.size();
    const std::size_t n = spec.target_vars.size();

    // Parameters plus the line parameter t.
    std::string tname = "t";
    while (spec.param_vars.index(tname)) tname += "_";
    std::vector<std::string> names = spec.param_vars.names();
    names.push_back(tname);
    VarSet combined{names};
    const std::size_t t_idx = combined.size() - 1;

    for (const auto& e : spec.witness_base) require_cleared(e.den, spec.denominators, "base");
    for (const auto& e : spec.witness_dir) require_cleared(e.den, spec.denominators, "dir");

    // Line coordinates L_i = base_i + t dir_i as rational expressions.
    MultiPoly tpoly = MultiPoly::variable(combined, Q, t_idx);
    std::vector<RationalExpr> line;
    line.reserve(N);
    for (std::size_t i = 0; i < N; ++i) {
        RationalExpr b = adjoin_t(spec.witness_base[i], combined);
        RationalExpr d = adjoin_t(spec.witness_dir[i], combined);
        line.push_back(b + RationalExpr::from_poly(tpoly) * d);
    }

    CoverReport rep;
    rep.mode = "symbolic";
    rep.name = spec.name;
    rep.pass = true;

    for (const auto& h : spec.generators) {
        RationalExpr residual = compose(h, line);
        bool ok = residual.is_zero();
        rep.generator_identities.push_back(ok);
        rep.residuals.push_back(residual.num.str());
        if (!ok) rep.pass = false;
    }

    // Projected line coordinates; the denominators never involve t.
    unsigned max_tdeg = 0;
    std::vector<RationalExpr> dir_coeff;  // t^1 coefficient of each z_j
    for (std::size_t j = 0; j < n; ++j) {
        RationalExpr zj = compose(spec.projection[j], line);
        if (zj.den.degree_in(t_idx) != 0)
            throw NonLineImage("projected coordinate has a t-dependent denominator");
        unsigned tdeg = zj.num.degree_in(t_idx);
        max_tdeg = std::max(max_tdeg, tdeg);
        if (tdeg >= 2)
            throw NonLineImage("projected image has t-degree >= 2 in coordinate " +
                               spec.target_vars.name(j));
        MultiPoly num1 = t_coefficient(zj.num, t_idx, 1, spec.param_vars);
        MultiPoly den0 = t_coefficient(zj.den, t_idx, 0, spec.param_vars);
        dir_coeff.push_back(RationalExpr{std::move(num1), std::move(den0)});
    }
    if (max_tdeg == 0) throw NonLineImage("projected image is a point");

    // [V_1 : ... : V_n] = [D_1 : ... : D_n] as a polynomial identity.
    rep.direction_match = true;
    for (std::size_t i = 0; i < n && rep.direction_match; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            RationalExpr di = RationalExpr::from_poly(spec.direction_coords[i]);
            RationalExpr dj = RationalExpr::from_poly(spec.direction_coords[j]);
            if (!(dir_coeff[i] * dj - dir_coeff[j] * di).is_zero()) {
                rep.direction_match = false;
                rep.fail_note = "projected direction differs from the direction coordinates";
                break;
            }
        }
    }
    if (!rep.direction_match) rep.pass = false;

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CoverReport verify_cover_exhaustive(const CoverSpec& spec, std::uint64_t q,
                                    const VerifyOptions& opts) {
    validate_shape(spec);
    if (q == 2) throw NotOddPrime();
    auto t0 = std::chrono::steady_clock::now();
    FieldCtx fq = FieldCtx::prime(q);
    const std::size_t N = spec.ambient_vars.size();
    const std::size_t n = spec.target_vars.size();
    const unsigned P = static_cast<unsigned>(spec.param_vars.size());

    const std::uint64_t est = pow_u64(q, P) * q * (spec.generators.size() + 1);
    if (est > opts.budget)
        throw BudgetExceeded("exhaustive cover check needs about " + std::to_string(est) +
                             " evaluations, over the budget of " + std::to_string(opts.budget));

    auto reduce_all = [&](const std::vector<MultiPoly>& v) {
        std::vector<MultiPoly> out;
        out.reserve(v.size());
        for (const auto& p : v) out.push_back(to_fq(p, q));
        return out;
    };
    std::vector<MultiPoly> gens = reduce_all(spec.generators);
    std::vector<MultiPoly> proj = reduce_all(spec.projection);
    std::vector<MultiPoly> dcoords = reduce_all(spec.direction_coords);
    std::vector<MultiPoly> vanish = reduce_all(spec.guard_vanish);
    std::vector<MultiPoly> nonvanish = reduce_all(spec.guard_nonvanish);
    std::vector<MultiPoly> dens = reduce_all(spec.denominators);
    std::vector<RationalExpr> wbase, wdir;
    for (const auto& e : spec.witness_base)
        wbase.push_back(RationalExpr{to_fq(e.num, q), to_fq(e.den, q)});
    for (const auto& e : spec.witness_dir)
        wdir.push_back(RationalExpr{to_fq(e.num, q), to_fq(e.den, q)});

    CoverReport rep;
    rep.mode = "exhaustive";
    rep.name = spec.name;
    rep.q = q;
    rep.pass = true;
    rep.generator_identities.assign(gens.size(), true);
    rep.residuals.assign(gens.size(), "0");
    rep.direction_match = true;

    for (const FqVec& uraw : enumerate_affine_points(P, q)) {
        std::vector<Scalar> u;
        u.reserve(P);
        for (auto a : uraw) u.push_back(Scalar::from_int(fq, a));

        bool in_domain = true;
        for (const auto& g : vanish)
            if (!g.eval(u).is_zero()) { in_domain = false; break; }
        if (in_domain)
            for (const auto& g : nonvanish)
                if (g.eval(u).is_zero()) { in_domain = false; break; }
        if (in_domain)
            for (const auto& g : dens)
                if (g.eval(u).is_zero()) { in_domain = false; break; }
        if (!in_domain) continue;
        ++rep.directions_checked;

        std::vector<Scalar> dvals;
        for (const auto& D : dcoords) dvals.push_back(D.eval(u));
        bool dzero = std::all_of(dvals.begin(), dvals.end(),
                                 [](const Scalar& s) { return s.is_zero(); });
        std::string at = " at parameters " + scalar_vec_str(u);
        if (dzero) {
            rep.pass = false;
            rep.direction_match = false;
            rep.fail_note = "degenerate direction coordinates" + at;
            break;
        }

        std::vector<Scalar> base, dir;
        try {
            for (std::size_t i = 0; i < N; ++i) {
                base.push_back(wbase[i].eval(u));
                dir.push_back(wdir[i].eval(u));
            }
        } catch (const ZeroInversion&) {
            rep.pass = false;
            rep.fail_note = "witness denominator vanished" + at;
            break;
        }

        // All q points of the witness line satisfy every generator.
        bool bad = false;
        for (std::uint64_t t = 0; t < q && !bad; ++t) {
            Scalar ts = Scalar::from_int(fq, (long long)t);
            std::vector<Scalar> x;
            x.reserve(N);
            for (std::size_t i = 0; i < N; ++i) x.push_back(base[i] + ts * dir[i]);
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Scalar val = gens[gi].eval(x);
                if (!val.is_zero()) {
                    rep.generator_identities[gi] = false;
                    rep.residuals[gi] = val.str() + at + ", t = " + ts.str();
                    rep.pass = false;
                    bad = true;
                    break;
                }
            }
        }
        if (bad) break;

        // The projected points form a line in direction [D(u)].
        std::vector<Scalar> z0, z1;
        {
            std::vector<Scalar> x0 = base, x1 = base;
            for (std::size_t i = 0; i < N; ++i) x1[i] += dir[i];
            for (std::size_t j = 0; j < n; ++j) {
                z0.push_back(proj[j].eval(x0));
                z1.push_back(proj[j].eval(x1));
            }
        }
        std::vector<Scalar> w;
        for (std::size_t j = 0; j < n; ++j) w.push_back(z1[j] - z0[j]);
        bool wzero = std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
        if (wzero) {
            rep.pass = false;
            rep.direction_match = false;
            rep.fail_note = "projected image degenerates to a point" + at;
            break;
        }
        if (ProjPoint(w) != ProjPoint(dvals)) {
            rep.pass = false;
            rep.direction_match = false;
            rep.fail_note = "projected direction mismatch" + at;
            break;
        }
        bool collinear = true;
        for (std::uint64_t t = 0; t < q && collinear; ++t) {
            Scalar ts = Scalar::from_int(fq, (long long)t);
            std::vector<Scalar> x;
            for (std::size_t i = 0; i < N; ++i) x.push_back(base[i] + ts * dir[i]);
            for (std::size_t j = 0; j < n; ++j) {
                if (proj[j].eval(x) != z0[j] + ts * w[j]) { collinear = false; break; }
            }
        }
        if (!collinear) {
            rep.pass = false;
            rep.direction_match = false;
            rep.fail_note = "projected points are not affine in t" + at;
            break;
        }
    }

    if (rep.directions_checked == 0) throw EmptyDomain();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CoverSpec build_squares_cover(unsigned n) {
    if (n < 2) throw BadParameters("squares cover needs n >= 2");
    const FieldCtx Q = FieldCtx::rationals();

    std::vector<std::string> anames, cnames, pnames, znames;
    for (unsigned i = 1; i < n; ++i) {
        anames.push_back("a" + std::to_string(i));
        cnames.push_back("c" + std::to_string(i));
        pnames.push_back("v" + std::to_string(i));
    }
    std::vector<std::string> ambient = anames;
    ambient.push_back("b");
    ambient.insert(ambient.end(), cnames.begin(), cnames.end());
    for (unsigned j = 1; j <= n; ++j) znames.push_back("z" + std::to_string(j));

    CoverSpec spec;
    spec.name = "squares-n" + std::to_string(n);
    spec.ambient_vars = VarSet{ambient};
    spec.target_vars = VarSet{znames};
    spec.param_vars = VarSet{pnames};

    auto A = [&](const std::string& s) { return parse_poly(s, spec.ambient_vars, Q); };
    auto R = [&](const std::string& s) { return parse_rational(s, spec.param_vars, Q); };

    for (unsigned i = 1; i < n; ++i) {
        std::string is = std::to_string(i);
        spec.generators.push_back(A("a" + is + " + b^2 - c" + is + "^2"));
    }
    for (unsigned i = 1; i < n; ++i) spec.projection.push_back(A("a" + std::to_string(i)));
    spec.projection.push_back(A("b"));

    // Directions [v_1 : ... : v_{n-1} : 1]: the chart of U = {b-coord != 0}.
    for (unsigned i = 1; i < n; ++i)
        spec.direction_coords.push_back(parse_poly("v" + std::to_string(i), spec.param_vars, Q));
    spec.direction_coords.push_back(parse_poly("1", spec.param_vars, Q));

    // a_i = v_i t + v_i^2/4, b = t, c_i = t + v_i/2.
    for (unsigned i = 1; i < n; ++i) spec.witness_base.push_back(R("v" + std::to_string(i) + "^2/4"));
    spec.witness_base.push_back(R("0"));
    for (unsigned i = 1; i < n; ++i) spec.witness_base.push_back(R("v" + std::to_string(i) + "/2"));
    for (unsigned i = 1; i < n; ++i) spec.witness_dir.push_back(R("v" + std::to_string(i)));
    spec.witness_dir.push_back(R("1"));
    for (unsigned i = 1; i < n; ++i) spec.witness_dir.push_back(R("1"));

    return spec;
}

CoverSpec build_g14_cover() {
    const FieldCtx Q = FieldCtx::rationals();
    CoverSpec spec;
    spec.name = "g14";
    spec.ambient_vars = VarSet::parse("a,b,c,x,y,z");
    spec.target_vars = VarSet::parse("z1,z2,z3");
    spec.param_vars = VarSet::parse("al,ga");

    auto A = [&](const std::string& s) { return parse_poly(s, spec.ambient_vars, Q); };
    auto P = [&](const std::string& s) { return parse_poly(s, spec.param_vars, Q); };
    auto R = [&](const std::string& s) { return parse_rational(s, spec.param_vars, Q); };

    spec.generators = {A("z - x*y"), A("a*y - b + a"), A("c - b*x")};
    spec.projection = {A("a - x + y"), A("b - z"), A("c")};
    spec.direction_coords = {P("al"), P("1"), P("ga")};
    spec.guard_nonvanish = {P("al")};
    spec.denominators = {P("al")};

    spec.witness_base = {R("0"), R("0"), R("0"), R("ga"), R("1/al - 1"), R("ga*(1/al - 1)")};
    spec.witness_dir = {R("al^2"), R("al"), R("al*ga"), R("0"), R("0"), R("0")};
    return spec;
}

std::uint64_t census_squares_image(unsigned n, std::uint64_t q) {
    if (n < 1) throw BadParameters("census needs n >= 1");
    if (q == 2 || !is_prime_u64(q)) throw NotOddPrime();

    std::vector<bool> is_sq(q, false);
    for (std::uint64_t c = 0; c < q; ++c) is_sq[mulmod_u64(c, c, q)] = true;

    std::uint64_t count = 0;
    for (const FqVec& p : enumerate_affine_points(n, q)) {
        const std::uint64_t b = p[n - 1];
        const std::uint64_t b2 = mulmod_u64(b, b, q);
        bool ok = true;
        for (unsigned i = 0; i + 1 < n; ++i)
            if (!is_sq[(p[i] + b2) % q]) { ok = false; break; }
        if (ok) ++count;
    }
    return count;
}

}  // namespace kakeya
