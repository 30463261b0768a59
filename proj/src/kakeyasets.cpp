#include "kakeya/kakeyasets.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "kakeya/localgeom.hpp"

namespace kakeya {

namespace {

Scalar reduce_scalar(const Scalar& s, const FieldCtx& fq) {
    if (s.ctx() == fq) return s;
    if (s.ctx().is_prime_field()) throw WrongField("cannot transport between prime fields");
    return Scalar::from_mpq(fq, s.rat_value());
}

std::vector<Scalar> reduce_point(const std::vector<Scalar>& p, const FieldCtx& fq) {
    std::vector<Scalar> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(reduce_scalar(c, fq));
    return out;
}

RationalExpr reduce_expr(const RationalExpr& e, std::uint64_t q) {
    return RationalExpr{to_fq(e.num, q), to_fq(e.den, q)};
}

}  // namespace

ConstructibleSet::ConstructibleSet(MultiPoly open_part,
                                   std::vector<std::vector<Scalar>> closed_points,
                                   std::vector<std::vector<MultiPoly>> closed_pieces, bool type1)
    : open_part_(std::move(open_part)),
      closed_points_(std::move(closed_points)),
      closed_pieces_(std::move(closed_pieces)),
      type1_(type1) {
    const std::size_t n = open_part_.vars().size();
    for (const auto& p : closed_points_)
        if (p.size() != n) throw DimensionMismatch("marked point has wrong length");
    for (const auto& piece : closed_pieces_)
        for (const auto& gen : piece)
            if (gen.vars() != open_part_.vars() || gen.ctx() != open_part_.ctx())
                throw DimensionMismatch("piece generator over a different ring");
    if (type1_) {
        // Marked points must lie on V(g). For pieces, ideal membership is out
        // of scope; require the open-part polynomial itself (up to a scalar)
        // among the generators, which forces V(piece) inside V(g).
        for (const auto& p : closed_points_)
            if (!open_part_.eval(p).is_zero())
                throw BadParameters("type-1 set: marked point off V(g)");
        for (const auto& piece : closed_pieces_) {
            bool contains_g = false;
            for (const auto& gen : piece) {
                if (gen.is_zero() || gen.term_count() != open_part_.term_count()) continue;
                Scalar ratio = gen.terms().begin()->second / open_part_.terms().begin()->second;
                if (gen == ratio * open_part_) { contains_g = true; break; }
            }
            if (!contains_g)
                throw BadParameters("type-1 set: piece does not visibly lie inside V(g)");
        }
    }
}

bool ConstructibleSet::member(std::span<const Scalar> x) const {
    if (x.size() != ambient_dim()) throw DimensionMismatch("membership point has wrong length");
    if (!open_part_.eval(x).is_zero()) return true;
    for (const auto& p : closed_points_) {
        bool eq = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != x[i]) { eq = false; break; }
        if (eq) return true;
    }
    for (const auto& piece : closed_pieces_) {
        bool all_zero = true;
        for (const auto& gen : piece)
            if (!gen.eval(x).is_zero()) { all_zero = false; break; }
        if (all_zero) return true;
    }
    return false;
}

ConstructibleSet ConstructibleSet::reduce(std::uint64_t q) const {
    FieldCtx fq = FieldCtx::prime(q);
    std::vector<std::vector<Scalar>> points;
    points.reserve(closed_points_.size());
    for (const auto& p : closed_points_) points.push_back(reduce_point(p, fq));
    std::vector<std::vector<MultiPoly>> pieces;
    pieces.reserve(closed_pieces_.size());
    for (const auto& piece : closed_pieces_) {
        std::vector<MultiPoly> gens;
        gens.reserve(piece.size());
        for (const auto& gen : piece) gens.push_back(to_fq(gen, q));
        pieces.push_back(std::move(gens));
    }
    ConstructibleSet out(to_fq(open_part_, q), std::move(points), std::move(pieces), type1_);
    out.name = name;
    return out;
}

namespace {

// Pointwise membership of E over F_q^n, precomputed once per run.
struct MembershipTable {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::vector<std::uint8_t> in_set;

    std::size_t index(std::span<const std::uint32_t> coords) const {
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            idx += coords[i] * stride;
            stride *= q;
        }
        return idx;
    }
};

MembershipTable build_membership(const ConstructibleSet& E, std::uint64_t q64) {
    const ConstructibleSet Eq = E.reduce(q64);
    const std::uint32_t q = static_cast<std::uint32_t>(q64);
    const std::uint32_t n = static_cast<std::uint32_t>(Eq.ambient_dim());

    GridTable g = eval_on_grid(Eq.open_part());
    MembershipTable t{q, n, std::vector<std::uint8_t>(g.values.size(), 0)};
    for (std::size_t i = 0; i < g.values.size(); ++i) t.in_set[i] = g.values[i] != 0;

    for (const auto& p : Eq.closed_points()) {
        FqVec coords;
        coords.reserve(p.size());
        for (const auto& c : p) coords.push_back(static_cast<std::uint32_t>(c.fp_value()));
        t.in_set[t.index(coords)] = 1;
    }

    for (const auto& piece : Eq.closed_pieces()) {
        std::vector<GridTable> gens;
        gens.reserve(piece.size());
        for (const auto& gen : piece) gens.push_back(eval_on_grid(gen));
        for (std::size_t i = 0; i < t.in_set.size(); ++i) {
            bool all_zero = true;
            for (const auto& gt : gens)
                if (gt.values[i] != 0) { all_zero = false; break; }
            if (all_zero) t.in_set[i] = 1;
        }
    }
    return t;
}

// Scan the line p + t v through the bitmap; true iff fully inside.
bool line_in_set(const MembershipTable& t, const FqVec& p, const FqVec& v) {
    const std::uint32_t q = t.q;
    FqVec c = p;
    for (std::uint32_t step = 0; step < q; ++step) {
        if (!t.in_set[t.index(c)]) return false;
        if (step + 1 < q)
            for (std::size_t i = 0; i < c.size(); ++i) {
                c[i] += v[i];
                if (c[i] >= q) c[i] -= q;
            }
    }
    return true;
}

// Every line in direction v crosses the hyperplane {x_lead = 0} exactly
// once, so scanning bases there covers all lines without duplicates.
std::optional<FqVec> find_witness_base(const MembershipTable& t, const FqVec& v) {
    const std::uint32_t q = t.q;
    const std::size_t n = v.size();
    const std::size_t lead = leading_index(v);
    FqVec p(n, 0);
    for (;;) {
        if (line_in_set(t, p, v)) return p;
        // Odometer over all coordinates except lead.
        std::size_t i = 0;
        for (;;) {
            if (i == lead) ++i;
            if (i >= n) return std::nullopt;
            if (++p[i] < q) break;
            p[i] = 0;
            ++i;
        }
    }
}

struct DirectionOutcome {
    bool ok = false;
    std::string failure_kind;
    std::optional<std::pair<FqVec, FqVec>> witness;  // base, dir
};

// Deterministic parallel map over the direction list: fixed partition,
// per-slot writes, ordered merge. Output is identical for any thread count.
template <typename Fn>
std::vector<DirectionOutcome> sweep_directions(const std::vector<FqVec>& dirs, unsigned threads,
                                               Fn&& per_direction) {
    std::vector<DirectionOutcome> outcomes(dirs.size());
    unsigned nthreads = std::max(1u, threads);
    nthreads = static_cast<unsigned>(
        std::min<std::size_t>(nthreads, std::max<std::size_t>(1, dirs.size())));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < dirs.size(); ++i) outcomes[i] = per_direction(dirs[i]);
        return outcomes;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (dirs.size() + nthreads - 1) / nthreads;
    for (unsigned w = 0; w < nthreads; ++w) {
        std::size_t lo = w * chunk, hi = std::min(dirs.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) outcomes[i] = per_direction(dirs[i]);
        });
    }
    for (auto& th : pool) th.join();
    return outcomes;
}

FqVec slide_to_transversal(const FqVec& base, const FqVec& v, std::uint32_t q) {
    const std::size_t lead = leading_index(v);
    const std::uint32_t t = base[lead];  // v[lead] == 1
    FqVec out = base;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t sub = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(t) * v[i]) % q);
        out[i] = out[i] >= sub ? out[i] - sub : out[i] + q - sub;
    }
    return out;
}

VerificationReport assemble_report(std::string mode, std::uint64_t q,
                                   const std::vector<FqVec>& dirs,
                                   const std::vector<DirectionOutcome>& outcomes,
                                   bool record_witnesses, double seconds) {
    VerificationReport rep;
    rep.mode = std::move(mode);
    rep.q = q;
    rep.directions_checked = dirs.size();
    rep.seconds = seconds;
    rep.pass = true;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].ok) {
            rep.pass = false;
            rep.failure_kind = outcomes[i].failure_kind;
            rep.failing_direction = fqvec_proj_str(dirs[i]);
            break;
        }
    }
    if (record_witnesses) {
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (!outcomes[i].ok || !outcomes[i].witness) continue;
            const auto& [base, dir] = *outcomes[i].witness;
            rep.witness_map.emplace_back(fqvec_proj_str(dirs[i]),
                                         fqvec_affine_str(base) + " + t*" + fqvec_affine_str(dir));
        }
    }
    return rep;
}

void check_budget(std::uint64_t probes, std::uint64_t budget, const std::string& what) {
    if (probes > budget)
        throw BudgetExceeded(what + " needs about " + std::to_string(probes) +
                             " membership probes, over the budget of " + std::to_string(budget) +
                             "; raise --budget to opt in");
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

VerificationReport verify_kakeya_exhaustive(const ConstructibleSet& E, std::uint64_t q,
                                            const VerifyOptions& opts) {
    const unsigned n = static_cast<unsigned>(E.ambient_dim());
    if (n < 2) throw BadParameters("Kakeya verification needs ambient dimension >= 2");
    const std::uint64_t dirs_count = proj_point_count(n, q);
    check_budget(dirs_count * pow_u64(q, n), opts.budget, "blind verification");

    auto t0 = std::chrono::steady_clock::now();
    MembershipTable table = build_membership(E, q);
    auto dirs = enumerate_proj_points(n, q);

    auto outcomes = sweep_directions(dirs, opts.threads, [&](const FqVec& v) {
        DirectionOutcome out;
        if (auto base = find_witness_base(table, v)) {
            out.ok = true;
            out.witness = {std::move(*base), v};
        } else {
            out.failure_kind = "no_witness";
        }
        return out;
    });

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return assemble_report("blind", q, dirs, outcomes, opts.record_witnesses, secs);
}

VerificationReport verify_certificate(const ConstructibleSet& E, const KakeyaCertificate& cert,
                                      std::uint64_t q, const VerifyOptions& opts) {
    const unsigned n = static_cast<unsigned>(E.ambient_dim());
    if (cert.dir_vars.size() != n)
        throw DimensionMismatch("certificate direction space does not match the ambient space");
    const std::uint64_t dirs_count = proj_point_count(n, q);
    check_budget(dirs_count * q, opts.budget, "certificate verification");

    auto t0 = std::chrono::steady_clock::now();
    MembershipTable table = build_membership(E, q);
    FieldCtx fq = FieldCtx::prime(q);

    // Instantiate every case over F_q once.
    struct FqCase {
        std::vector<MultiPoly> vanish, nonvanish, denominators;
        std::vector<RationalExpr> base, dir;
    };
    std::vector<FqCase> cases;
    cases.reserve(cert.cases.size());
    for (const CaseRule& c : cert.cases) {
        FqCase fc;
        for (const auto& g : c.guard_vanish) fc.vanish.push_back(to_fq(g, q));
        for (const auto& g : c.guard_nonvanish) fc.nonvanish.push_back(to_fq(g, q));
        for (const auto& g : c.denominators) fc.denominators.push_back(to_fq(g, q));
        for (const auto& e : c.base) fc.base.push_back(reduce_expr(e, q));
        for (const auto& e : c.dir) fc.dir.push_back(reduce_expr(e, q));
        if (fc.base.size() != n || fc.dir.size() != n)
            throw DimensionMismatch("certificate witness has wrong coordinate count");
        cases.push_back(std::move(fc));
    }

    auto dirs = enumerate_proj_points(n, q);
    auto outcomes = sweep_directions(dirs, opts.threads, [&](const FqVec& vraw) {
        DirectionOutcome out;
        std::vector<Scalar> v;
        v.reserve(n);
        for (auto a : vraw) v.push_back(Scalar::from_int(fq, a));

        const FqCase* match = nullptr;
        for (const FqCase& fc : cases) {
            bool ok = true;
            for (const auto& g : fc.vanish)
                if (!g.eval(v).is_zero()) { ok = false; break; }
            if (ok)
                for (const auto& g : fc.nonvanish)
                    if (g.eval(v).is_zero()) { ok = false; break; }
            if (ok) { match = &fc; break; }
        }
        if (!match) {
            out.failure_kind = "uncovered_direction";
            return out;
        }
        for (const auto& den : match->denominators)
            if (den.eval(v).is_zero()) {
                out.failure_kind = "denominator_vanished";
                return out;
            }

        FqVec base(n), dir(n);
        try {
            for (unsigned i = 0; i < n; ++i) {
                base[i] = static_cast<std::uint32_t>(match->base[i].eval(v).fp_value());
                dir[i] = static_cast<std::uint32_t>(match->dir[i].eval(v).fp_value());
            }
        } catch (const ZeroInversion&) {
            out.failure_kind = "denominator_vanished";
            return out;
        }

        // The witness line must point in direction v.
        bool dir_zero = std::all_of(dir.begin(), dir.end(), [](std::uint32_t a) { return a == 0; });
        if (dir_zero) {
            out.failure_kind = "direction_mismatch";
            return out;
        }
        const std::size_t lead = leading_index(dir);
        std::uint64_t inv = invmod_u64(dir[lead], q);
        FqVec ndir(n);
        for (unsigned i = 0; i < n; ++i)
            ndir[i] = static_cast<std::uint32_t>(dir[i] * inv % q);
        if (ndir != vraw) {
            out.failure_kind = "direction_mismatch";
            return out;
        }

        if (!line_in_set(table, base, ndir)) {
            out.failure_kind = "containment";
            return out;
        }
        out.ok = true;
        out.witness = {slide_to_transversal(base, ndir, table.q), ndir};
        return out;
    });

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return assemble_report("certificate", q, dirs, outcomes, opts.record_witnesses, secs);
}

VerificationReport verify_open_complement_criterion(const std::vector<MultiPoly>& Z_gens,
                                                    unsigned n, std::uint64_t q,
                                                    const VerifyOptions& opts) {
    if (n < 2) throw BadParameters("Kakeya verification needs ambient dimension >= 2");
    const std::uint64_t dirs_count = proj_point_count(n, q);
    check_budget(dirs_count * pow_u64(q, n), opts.budget, "open-complement verification");

    auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t q32 = static_cast<std::uint32_t>(q);

    std::size_t size = pow_u64(q, n);
    MembershipTable table{q32, n, std::vector<std::uint8_t>(size, 1)};
    if (!Z_gens.empty()) {
        std::fill(table.in_set.begin(), table.in_set.end(), 0);
        std::vector<GridTable> gens;
        for (const auto& gen : Z_gens) {
            if (gen.vars().size() != n) throw DimensionMismatch("generator has wrong arity");
            gens.push_back(eval_on_grid(to_fq(gen, q)));
        }
        for (std::size_t i = 0; i < size; ++i) {
            for (const auto& gt : gens)
                if (gt.values[i] != 0) { table.in_set[i] = 1; break; }
        }
    }

    auto dirs = enumerate_proj_points(n, q);
    auto outcomes = sweep_directions(dirs, opts.threads, [&](const FqVec& v) {
        DirectionOutcome out;
        if (auto base = find_witness_base(table, v)) {
            out.ok = true;
            out.witness = {std::move(*base), v};
        } else {
            out.failure_kind = "no_witness";
        }
        return out;
    });

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return assemble_report("open-complement", q, dirs, outcomes, opts.record_witnesses, secs);
}

ConstructibleSet build_hyperplane_example(unsigned n, const MultiPoly& L,
                                          std::span<const Scalar> q_pt) {
    if (L.vars().size() != n) throw DimensionMismatch("hyperplane arity mismatch");
    if (!L.degree() || *L.degree() != 1) throw NotLinear();
    if (!L.eval(q_pt).is_zero()) throw PointNotOnHyperplane();
    ConstructibleSet E(L, {std::vector<Scalar>(q_pt.begin(), q_pt.end())}, {}, true);
    E.name = "hyperplane";
    return E;
}

ConstructibleSet build_quadric_cone_example() {
    FieldCtx Q = FieldCtx::rationals();
    VarSet vars = VarSet::parse("x1,x2,x3");
    MultiPoly g = parse_poly("x1*x3 - x2^2", vars, Q);
    std::vector<Scalar> vertex(3, Scalar::zero(Q));
    ConstructibleSet E(g, {vertex}, {}, true);
    E.name = "quadric-cone";
    return E;
}

std::pair<ConstructibleSet, KakeyaCertificate> build_cusp_cone_example(unsigned d) {
    if (d < 3) throw DegreeTooSmall("the cusp-cone example needs d >= 3");
    FieldCtx Q = FieldCtx::rationals();
    VarSet vars = VarSet::parse("x,y,z");
    std::string ds = std::to_string(d), d1s = std::to_string(d - 1);
    MultiPoly g = parse_poly("y^" + d1s + "*z - x^" + ds, vars, Q);

    std::vector<Scalar> R1(3, Scalar::zero(Q));
    std::vector<Scalar> R2{Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)};
    ConstructibleSet E(g, {R1, R2}, {}, true);
    E.name = "cusp-cone-d" + ds;

    VarSet dv = VarSet::parse("v1,v2,v3");
    std::string curve = "v2^" + d1s + "*v3 - v1^" + ds;
    auto P = [&](const std::string& s) { return parse_poly(s, dv, Q); };
    auto R = [&](const std::string& s) { return parse_rational(s, dv, Q); };

    KakeyaCertificate cert;
    cert.dir_vars = dv;
    // Off the curve at infinity: the line through the vertex leaves V(G)
    // immediately (g(t v) = t^d g(v)).
    cert.cases.push_back(CaseRule{{},
                                  {P(curve)},
                                  {R("0"), R("0"), R("0")},
                                  {R("v1"), R("v2"), R("v3")},
                                  {}});
    // Smooth curve point (v2 != 0): line through R2 = (0,0,1);
    // g(t v1, t v2, 1 + t v3) = v2^{d-1} t^{d-1} modulo the curve relation.
    cert.cases.push_back(CaseRule{{P(curve)},
                                  {P("v2")},
                                  {R("0"), R("0"), R("1")},
                                  {R("v1"), R("v2"), R("v3")},
                                  {}});
    // The cusp direction [0:0:1]: the line (1,0,1) + t (0,0,1) stays in
    // {g != 0} since g = -1 on it.
    cert.cases.push_back(CaseRule{{P("v1"), P("v2")},
                                  {},
                                  {R("1"), R("0"), R("1")},
                                  {R("0"), R("0"), R("1")},
                                  {}});
    return {std::move(E), std::move(cert)};
}

std::pair<ConstructibleSet, KakeyaCertificate> build_double_cone_example(unsigned n, unsigned d) {
    if (n < 3 || d < 2) throw BadParameters("double-cone example needs n >= 3 and d >= 2");
    FieldCtx Q = FieldCtx::rationals();
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    VarSet vars{names};

    // Base hypersurface at infinity: a smooth conic for d = 2 (extended by a
    // sum of squares in the remaining coordinates), Fermat-type otherwise.
    MultiPoly G(vars, Q);
    if (d == 2) {
        G = parse_poly("x1*x3 - x2^2", VarSet::parse("x1,x2,x3"), Q)
                .substitute(std::vector<MultiPoly>{MultiPoly::variable(vars, Q, 0),
                                                   MultiPoly::variable(vars, Q, 1),
                                                   MultiPoly::variable(vars, Q, 2)});
        for (unsigned i = 3; i < n; ++i)
            G += MultiPoly::variable(vars, Q, i).pow(2);
    } else {
        for (unsigned i = 0; i < n; ++i) G += MultiPoly::variable(vars, Q, i).pow(d);
    }

    // Second vertex v', off X: try small 0/1 points.
    std::vector<Scalar> a;
    {
        bool found = false;
        for (const FqVec& probe : enumerate_affine_points(n, 2)) {
            std::vector<Scalar> cand;
            for (auto c : probe) cand.push_back(Scalar::from_int(Q, c));
            if (!G.eval(cand).is_zero()) {
                a = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found) throw BadParameters("no small rational vertex off X available");
    }

    std::vector<Scalar> minus_a;
    for (const auto& c : a) minus_a.push_back(-c);
    MultiPoly Gshift = shift(G, minus_a);  // G(x - a): the cone with vertex a

    std::vector<Scalar> vertex(n, Scalar::zero(Q));
    ConstructibleSet E(G, {vertex}, {{G, Gshift}}, true);
    E.name = "double-cone-n" + std::to_string(n) + "-d" + std::to_string(d);

    std::vector<std::string> dnames;
    for (unsigned i = 1; i <= n; ++i) dnames.push_back("v" + std::to_string(i));
    VarSet dv{dnames};
    MultiPoly Gdir(dv, Q);
    {
        std::vector<MultiPoly> imgs;
        for (unsigned i = 0; i < n; ++i) imgs.push_back(MultiPoly::variable(dv, Q, i));
        Gdir = G.substitute(imgs);
    }

    auto var_exprs = [&]() {
        std::vector<RationalExpr> e;
        for (unsigned i = 0; i < n; ++i)
            e.push_back(RationalExpr::from_poly(MultiPoly::variable(dv, Q, i)));
        return e;
    };
    auto const_exprs = [&](const std::vector<Scalar>& p) {
        std::vector<RationalExpr> e;
        for (const auto& c : p) e.push_back(RationalExpr::from_poly(MultiPoly::constant(dv, c)));
        return e;
    };

    KakeyaCertificate cert;
    cert.dir_vars = dv;
    // Direction off C: ruling of X through the origin vertex.
    cert.cases.push_back(CaseRule{{}, {Gdir}, const_exprs(vertex), var_exprs(), {}});
    // Direction on C: the ruling of the translated cone X' through v' = a.
    // Off X it lies in {G != 0}; on X it lands in X cap X'.
    cert.cases.push_back(CaseRule{{Gdir}, {}, const_exprs(a), var_exprs(), {}});
    return {std::move(E), std::move(cert)};
}

}  // namespace kakeya
