#include "kakeya/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kakeya {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate variable name: " + names_[i]);
}

VarSet VarSet::parse(std::string_view csv) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view item = csv.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) names.emplace_back(item);
        if (comma == csv.size()) break;
        start = comma + 1;
    }
    return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarSet VarSet::prepended(const std::string& new_name) const {
    std::vector<std::string> names;
    names.reserve(names_.size() + 1);
    names.push_back(new_name);
    names.insert(names.end(), names_.begin(), names_.end());
    return VarSet(std::move(names));
}

VarSet VarSet::without(std::size_t idx) const {
    std::vector<std::string> names = names_;
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(idx));
    return VarSet(std::move(names));
}

MultiPoly MultiPoly::constant(const VarSet& vars, const Scalar& c) {
    MultiPoly r(vars, c.ctx());
    r.add_term(Monomial(vars.size(), 0), c);
    return r;
}

MultiPoly MultiPoly::variable(const VarSet& vars, const FieldCtx& ctx, std::size_t idx) {
    MultiPoly r(vars, ctx);
    Monomial m(vars.size(), 0);
    m.at(idx) = 1;
    r.add_term(m, Scalar::one(ctx));
    return r;
}

MultiPoly MultiPoly::monomial(const VarSet& vars, Monomial m, const Scalar& c) {
    MultiPoly r(vars, c.ctx());
    r.add_term(std::move(m), c);
    return r;
}

std::optional<unsigned> MultiPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
}

unsigned MultiPoly::degree_in(std::size_t idx) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.at(idx));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

Scalar MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ctx_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != vars_.size()) throw DimensionMismatch("monomial length != variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_, ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {
void require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.ctx() != b.ctx()) throw WrongField("polynomials over different fields");
    if (a.vars() != b.vars()) throw DimensionMismatch("polynomials over different variable sets");
}
}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly r(a.vars_, a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) {
    MultiPoly r(a.vars_, a.ctx_);
    for (const auto& [m, k] : a.terms_) r.add_term(m, c * k);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(vars_, Scalar::one(ctx_));
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    return a.terms_ == b.terms_;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const {
    if (point.size() != vars_.size()) throw DimensionMismatch("evaluation point has wrong length");
    Scalar acc = Scalar::zero(ctx_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= point[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (images.size() != vars_.size()) throw DimensionMismatch("one image per variable required");
    const VarSet& tvars = images.empty() ? vars_ : images[0].vars();
    const FieldCtx& tctx = images.empty() ? ctx_ : images[0].ctx();
    for (const auto& im : images)
        if (im.vars() != tvars || im.ctx() != tctx)
            throw DimensionMismatch("substitution images must share one variable set and field");

    // Memoize powers per variable.
    std::vector<std::vector<MultiPoly>> pows(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(tvars, Scalar::one(tctx)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    MultiPoly acc(tvars, tctx);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(tvars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * power(i, m[i]);
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first: iterate the grlex map in reverse.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar coeff = c;
        bool negative = false;
        if (!ctx_.is_prime_field() && sgn(c.rat_value()) < 0) {
            negative = true;
            coeff = -c;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool constant_term = total_degree(m) == 0;
        bool unit = coeff.is_one();
        if (constant_term || !unit) out << coeff.str();
        bool printed_factor = constant_term || !unit;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (printed_factor) out << "*";
            out << vars_.name(i);
            if (m[i] > 1) out << "^" << m[i];
            printed_factor = true;
        }
    }
    return out.str();
}

UniPoly::UniPoly(FieldCtx ctx, std::vector<Scalar> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
    strip();
}

void UniPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<unsigned> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<unsigned>(coeffs_.size() - 1);
}

std::optional<unsigned> UniPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<unsigned>(i);
    return std::nullopt;
}

Scalar UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(ctx_);
}

Scalar UniPoly::eval(const Scalar& t) const {
    Scalar acc = Scalar::zero(ctx_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    if (a.ctx_ != b.ctx_) throw WrongField("univariate polynomials over different fields");
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.ctx_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(a.ctx_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.ctx_ != b.ctx_) throw WrongField("univariate polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return UniPoly(a.ctx_);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.ctx_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(a.ctx_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.ctx_ != b.ctx_) throw WrongField("univariate polynomials over different fields");
    return a.coeffs_ == b.coeffs_;
}

std::string UniPoly::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        Scalar c = coeffs_[k];
        bool negative = false;
        if (!ctx_.is_prime_field() && sgn(c.rat_value()) < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (k == 0 || !c.is_one()) out << c.str();
        if (k > 0) {
            if (k == 0 || !c.is_one()) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

MultiPoly homogenize(const MultiPoly& g, const std::string& new_var) {
    if (g.is_zero()) throw ZeroPolynomial("cannot homogenize the zero polynomial");
    if (g.vars().index(new_var)) throw Error("homogenization variable already present: " + new_var);
    const unsigned d = *g.degree();
    VarSet vars = g.vars().prepended(new_var);
    MultiPoly r(vars, g.ctx());
    for (const auto& [m, c] : g.terms()) {
        Monomial mm(m.size() + 1);
        mm[0] = d - total_degree(m);
        std::copy(m.begin(), m.end(), mm.begin() + 1);
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly dehomogenize(const MultiPoly& G, const std::string& var) {
    auto idx = G.vars().index(var);
    if (!idx) throw UnknownVariable(var);
    VarSet vars = G.vars().without(*idx);
    MultiPoly r(vars, G.ctx());
    for (const auto& [m, c] : G.terms()) {
        Monomial mm;
        mm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != *idx) mm.push_back(m[i]);
        r.add_term(mm, c);
    }
    return r;
}

std::vector<MultiPoly> graded_parts(const MultiPoly& g) {
    if (g.is_zero()) return {};
    std::vector<MultiPoly> parts(*g.degree() + 1, MultiPoly(g.vars(), g.ctx()));
    for (const auto& [m, c] : g.terms()) parts[total_degree(m)].add_term(m, c);
    return parts;
}

MultiPoly shift(const MultiPoly& g, std::span<const Scalar> p) {
    if (p.size() != g.vars().size()) throw DimensionMismatch("shift point has wrong length");
    std::vector<MultiPoly> images;
    images.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        images.push_back(MultiPoly::variable(g.vars(), g.ctx(), i) +
                         MultiPoly::constant(g.vars(), p[i]));
    return g.substitute(images);
}

UniPoly restrict_to_line(const MultiPoly& g, std::span<const Scalar> p, std::span<const Scalar> v) {
    const std::size_t n = g.vars().size();
    if (p.size() != n || v.size() != n) throw DimensionMismatch("line data has wrong length");
    bool all_zero = true;
    for (const auto& c : v)
        if (!c.is_zero()) { all_zero = false; break; }
    if (all_zero) throw ZeroDirection();

    const FieldCtx& ctx = g.ctx();
    UniPoly acc(ctx);
    for (const auto& [m, c] : g.terms()) {
        UniPoly t(ctx, {c});
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i]) continue;
            UniPoly lin(ctx, {p[i], v[i]});
            for (unsigned e = 0; e < m[i]; ++e) t = t * lin;
        }
        acc = acc + t;
    }
    return acc;
}

MultiPoly reduce_by_binomial(const MultiPoly& g, const std::string& var, unsigned d,
                             const MultiPoly& repl) {
    auto idx = g.vars().index(var);
    if (!idx) throw UnknownVariable(var);
    if (repl.vars() != g.vars()) throw DimensionMismatch("replacement over a different variable set");
    if (repl.degree_in(*idx) > 0)
        throw InvalidRelation("replacement must not involve " + var);
    if (d == 0) throw InvalidRelation("relation exponent must be positive");

    MultiPoly work = g;
    for (;;) {
        // Pick any term with var-exponent >= d; each rewrite strictly lowers it.
        const std::map<Monomial, Scalar, GrlexLess>& terms = work.terms();
        auto hit = terms.end();
        for (auto it = terms.begin(); it != terms.end(); ++it)
            if (it->first[*idx] >= d) { hit = it; break; }
        if (hit == terms.end()) return work;
        Monomial m = hit->first;
        Scalar c = hit->second;
        Monomial reduced = m;
        reduced[*idx] -= d;
        MultiPoly replaced = c * (MultiPoly::monomial(work.vars(), reduced, Scalar::one(work.ctx())) * repl);
        work = work - MultiPoly::monomial(work.vars(), m, c) + replaced;
    }
}

std::vector<MultiPoly> gradient(const MultiPoly& g) {
    std::vector<MultiPoly> parts;
    parts.reserve(g.vars().size());
    for (std::size_t i = 0; i < g.vars().size(); ++i) {
        MultiPoly di(g.vars(), g.ctx());
        for (const auto& [m, c] : g.terms()) {
            if (!m[i]) continue;
            Monomial mm = m;
            mm[i] -= 1;
            di.add_term(mm, Scalar::from_int(g.ctx(), static_cast<long long>(m[i])) * c);
        }
        parts.push_back(std::move(di));
    }
    return parts;
}

std::optional<MultiPoly> try_divide_exact(const MultiPoly& n, const MultiPoly& d) {
    require_compatible(n, d);
    if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    MultiPoly rem = n;
    MultiPoly quot(n.vars(), n.ctx());
    const auto& lead = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Monomial q(rlead.first.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (rlead.first[i] < lead.first[i]) return std::nullopt;
            q[i] = rlead.first[i] - lead.first[i];
        }
        MultiPoly qm = MultiPoly::monomial(n.vars(), q, rlead.second / lead.second);
        quot += qm;
        rem = rem - qm * d;
    }
    return quot;
}

MultiPoly change_field(const MultiPoly& g, const FieldCtx& target) {
    if (g.ctx() == target) return g;
    if (g.ctx().is_prime_field())
        throw WrongField("can only transport polynomials from Q to a prime field");
    MultiPoly r(g.vars(), target);
    for (const auto& [m, c] : g.terms()) r.add_term(m, Scalar::from_mpq(target, c.rat_value()));
    return r;
}

}  // namespace kakeya
