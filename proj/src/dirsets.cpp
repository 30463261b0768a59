#include "kakeya/dirsets.hpp"

#include <algorithm>

#include "kakeya/localgeom.hpp"

namespace kakeya {

namespace {

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

// Bases on the transversal {x_lead = 0} whose line lies inside V(f), read
// off the value grid.
std::vector<FqVec> contained_line_bases(const GridTable& grid, const FqVec& v) {
    const std::uint32_t q = grid.q;
    const std::size_t n = v.size();
    const std::size_t lead = leading_index(v);
    std::vector<FqVec> bases;
    FqVec p(n, 0);
    for (;;) {
        bool inside = true;
        FqVec c = p;
        for (std::uint32_t t = 0; t < q && inside; ++t) {
            if (grid.values[grid.index(c)] != 0) inside = false;
            for (std::size_t i = 0; i < n; ++i) {
                c[i] += v[i];
                if (c[i] >= q) c[i] -= q;
            }
        }
        if (inside) bases.push_back(p);
        std::size_t i = 0;
        for (;;) {
            if (i == lead) ++i;
            if (i >= n) return bases;
            if (++p[i] < q) break;
            p[i] = 0;
            ++i;
        }
    }
}

}  // namespace

std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<AffLine> lines_in_direction(const MultiPoly& f, const ProjDirection& v,
                                        std::uint64_t q) {
    if (f.is_zero()) throw ZeroPolynomial();
    MultiPoly fq = to_fq(f, q);
    if (v.ncoords() != fq.vars().size())
        throw DimensionMismatch("direction has wrong coordinate count");
    GridTable grid = eval_on_grid(fq);

    FqVec vraw;
    for (const auto& c : v.coords()) {
        Scalar r = c.ctx() == fq.ctx() ? c : Scalar::from_mpq(fq.ctx(), c.rat_value());
        vraw.push_back(static_cast<std::uint32_t>(r.fp_value()));
    }
    std::vector<AffLine> out;
    for (const FqVec& base : contained_line_bases(grid, vraw)) {
        std::vector<Scalar> b;
        for (auto a : base) b.push_back(Scalar::from_int(fq.ctx(), a));
        out.emplace_back(std::move(b), ProjPoint::from_fq(vraw, fq.ctx()));
    }
    return out;
}

DirectionSet direction_set(const MultiPoly& f, std::uint64_t q, const VerifyOptions& opts) {
    if (f.is_zero()) throw ZeroPolynomial();
    MultiPoly fq = to_fq(f, q);
    const unsigned n = static_cast<unsigned>(fq.vars().size());
    const std::uint64_t dirs_count = proj_point_count(n, q);
    const std::uint64_t est = dirs_count * pow_u64(q, n);
    if (est > opts.budget)
        throw BudgetExceeded("direction-set sweep needs about " + std::to_string(est) +
                             " probes, over the budget of " + std::to_string(opts.budget));

    GridTable grid = eval_on_grid(fq);
    DirectionSet delta;
    delta.ncoords = n;
    delta.q = q;
    for (const FqVec& v : enumerate_proj_points(n, q)) {
        auto bases = contained_line_bases(grid, v);
        if (!bases.empty()) {
            delta.members.push_back(ProjPoint::from_fq(v, fq.ctx()));
            delta.line_counts.push_back(bases.size());
        }
    }
    return delta;
}

KakeyaSubvarietyReport kakeya_subvariety_report(const MultiPoly& f, std::uint64_t q,
                                                const VerifyOptions& opts) {
    DirectionSet delta = direction_set(f, q, opts);
    KakeyaSubvarietyReport rep;
    rep.q = q;
    rep.n = static_cast<unsigned>(delta.ncoords) - 1;  // dim of a hypersurface in A^N
    rep.delta_size = delta.members.size();
    rep.threshold_power = pow_u64(q, rep.n >= 1 ? rep.n - 1 : 0);
    rep.surrogate_holds = 2 * rep.delta_size >= rep.threshold_power;
    rep.note =
        "finite-field surrogate of dim Delta = n-1: 2|Delta| >= q^{n-1}; a failure over one "
        "F_q does not contradict the closed-field statement";
    return rep;
}

unsigned hypersurfaces_containing_line_dim(unsigned N, unsigned d, const AffLine& l) {
    if (d < 1) throw BadParameters("degree must be >= 1");
    if (l.ambient_dim() != N) throw DimensionMismatch("line lives in the wrong dimension");
    const FieldCtx& ctx = l.base()[0].ctx();

    // Monomial basis of degree <= d in N variables, in a fixed order.
    std::vector<Monomial> basis;
    Monomial m(N, 0);
    // Enumerate exponent vectors with total degree <= d, odometer style.
    for (;;) {
        basis.push_back(m);
        std::size_t i = 0;
        for (;;) {
            if (i >= N) break;
            ++m[i];
            if (total_degree(m) <= d) break;
            m[i] = 0;
            ++i;
        }
        if (i >= N) break;
    }
    const std::size_t dim_sd = basis.size();

    std::vector<std::string> names;
    for (unsigned i = 0; i < N; ++i) names.push_back("x" + std::to_string(i + 1));
    VarSet vars{names};

    // Row j: the t^j coefficient of m(p + t v) across the monomial basis.
    Matrix constraints(d + 1, dim_sd, ctx);
    for (std::size_t col = 0; col < dim_sd; ++col) {
        MultiPoly mono = MultiPoly::monomial(vars, basis[col], Scalar::one(ctx));
        UniPoly r = restrict_to_line(mono, l.base(), l.dir().coords());
        for (unsigned j = 0; j <= d; ++j) constraints.set(j, col, r.coeff(j));
    }

    unsigned rk = rank(constraints);
    if (rk != d + 1)
        throw Error("restriction system rank " + std::to_string(rk) + " != d+1; degenerate line?");
    return kernel_dim(constraints);
}

std::uint64_t small_t_example_count(unsigned N, unsigned d, std::uint64_t q) {
    if (d < 1 || d > N - 1) throw BadParameters("need 1 <= d <= N-1");
    FieldCtx fq = FieldCtx::prime(q);
    std::vector<std::string> names;
    for (unsigned i = 0; i < N; ++i) names.push_back("x" + std::to_string(i + 1));
    VarSet vars{names};

    // f = sum_{i=1}^{d} x_{i+1} x_1^{d-i}  (g_i = x_{i+1}).
    MultiPoly f(vars, fq);
    for (unsigned i = 1; i <= d; ++i) {
        Monomial m(N, 0);
        m[0] = d - i;
        m[i] = 1;
        f.add_term(m, Scalar::one(fq));
    }

    // Lines through v = [0:1:0:...:0] are (0,a_2,...,a_N) + t e_1. Count by
    // restriction, cross-checked against the membership criterion
    // (a_2,...,a_{d+1}) = 0.
    std::uint64_t count = 0;
    std::vector<Scalar> e1(N, Scalar::zero(fq));
    e1[0] = Scalar::one(fq);
    for (const FqVec& tail : enumerate_affine_points(N - 1, q)) {
        std::vector<Scalar> base(N, Scalar::zero(fq));
        for (unsigned i = 1; i < N; ++i) base[i] = Scalar::from_int(fq, tail[i - 1]);
        bool contained = restrict_to_line(f, base, e1).is_zero();
        bool criterion = true;
        for (unsigned i = 1; i <= d; ++i)
            if (tail[i - 1] != 0) { criterion = false; break; }
        if (contained != criterion)
            throw Error("small-t containment disagrees with the vanishing criterion");
        if (contained) ++count;
    }
    return count;
}

LinearProjection make_projection(const ProjPoint& center, std::size_t target_coord) {
    const std::size_t N = center.ncoords();
    if (target_coord >= N) throw DimensionMismatch("target coordinate out of range");
    const Scalar& cj = center.coords()[target_coord];
    if (cj.is_zero())
        throw BadParameters("projection center lies on the target hyperplane");
    const FieldCtx& ctx = cj.ctx();

    // pi(x)_i = x_i - (c_i / c_j) x_j for i != j; coordinate j is dropped.
    Matrix m(N - 1, N, ctx);
    std::size_t row = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (i == target_coord) continue;
        m.set(row, i, Scalar::one(ctx));
        m.set(row, target_coord, -(center.coords()[i] / cj));
        ++row;
    }
    return LinearProjection{center, target_coord, std::move(m)};
}

ProjDirection project_direction(const LinearProjection& pi, const ProjDirection& v) {
    auto image = pi.matrix.apply(v.coords());
    bool zero = std::all_of(image.begin(), image.end(),
                            [](const Scalar& s) { return s.is_zero(); });
    if (zero) throw CenterOnDirection();
    return ProjDirection(std::move(image));
}

AffLine project_line(const LinearProjection& pi, const AffLine& l) {
    ProjDirection dir = project_direction(pi, l.dir());
    return AffLine(pi.matrix.apply(l.base()), dir);
}

DirectionSet project_direction_set(const DirectionSet& delta, const LinearProjection& pi) {
    DirectionSet out;
    out.ncoords = delta.ncoords - 1;
    out.q = delta.q;
    std::vector<std::pair<ProjDirection, std::uint64_t>> images;
    for (std::size_t i = 0; i < delta.members.size(); ++i)
        images.emplace_back(project_direction(pi, delta.members[i]),
                            delta.line_counts.empty() ? 1 : delta.line_counts[i]);
    std::sort(images.begin(), images.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [dir, cnt] : images) {
        if (!out.members.empty() && out.members.back() == dir) {
            out.line_counts.back() += cnt;
        } else {
            out.members.push_back(dir);
            out.line_counts.push_back(cnt);
        }
    }
    return out;
}

}  // namespace kakeya
