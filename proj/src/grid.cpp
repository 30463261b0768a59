#include "kakeya/grid.hpp"

#include <sstream>

namespace kakeya {

std::size_t GridTable::index(std::span<const std::uint32_t> coords) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        idx += coords[i] * stride;
        stride *= q;
    }
    return idx;
}

GridTable eval_on_grid(const MultiPoly& f, const ModKernels& kernels) {
    if (!f.ctx().is_prime_field())
        throw WrongField("grid evaluation requires a prime field");
    const std::uint64_t q64 = f.ctx().modulus();
    if (q64 >= (1u << 16))
        throw BadParameters("grid evaluation requires modulus < 2^16");
    const std::uint32_t q = static_cast<std::uint32_t>(q64);
    const std::uint32_t n = static_cast<std::uint32_t>(f.vars().size());

    std::size_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) size *= q;

    GridTable table{q, n, std::vector<std::uint32_t>(size, 0)};

    // Per-variable power tables a -> a^e mod q, cached by exponent.
    std::vector<std::vector<std::uint32_t>> pow_cache;
    auto powers = [&](std::uint32_t e) -> const std::vector<std::uint32_t>& {
        while (pow_cache.size() <= e) {
            std::vector<std::uint32_t> row(q);
            if (pow_cache.empty()) {
                for (std::uint32_t a = 0; a < q; ++a) row[a] = 1 % q;
            } else {
                const auto& prev = pow_cache.back();
                for (std::uint32_t a = 0; a < q; ++a)
                    row[a] = static_cast<std::uint32_t>(
                        static_cast<std::uint64_t>(prev[a]) * a % q);
            }
            pow_cache.push_back(std::move(row));
        }
        return pow_cache[e];
    };

    std::vector<std::uint32_t> block, next;
    for (const auto& [m, c] : f.terms()) {
        // Tensor block for c * prod x_i^{e_i}, grown one variable at a time.
        block.assign(1, static_cast<std::uint32_t>(c.fp_value()));
        std::size_t bsize = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto& pw = powers(m[i]);
            next.resize(bsize * q);
            for (std::uint32_t a = 0; a < q; ++a)
                kernels.scale_array(next.data() + a * bsize, block.data(), pw[a], bsize,
                                    q);
            block.swap(next);
            bsize *= q;
        }
        kernels.add_arrays(table.values.data(), table.values.data(), block.data(), size, q);
    }
    return table;
}

std::uint64_t proj_point_count(std::size_t ncoords, std::uint64_t q) {
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < ncoords; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

std::vector<FqVec> enumerate_proj_points(std::size_t ncoords, std::uint64_t q) {
    std::vector<FqVec> out;
    out.reserve(proj_point_count(ncoords, q));
    // Leading-one representatives in ascending full-vector lex order: the
    // block with leading coordinate i is (0,...,0,1,tail), later i first.
    for (std::size_t lead = ncoords; lead-- > 0;) {
        FqVec v(ncoords, 0);
        v[lead] = 1;
        for (;;) {
            out.push_back(v);
            // Advance the tail; the last coordinate moves fastest.
            std::size_t i = ncoords;
            bool carry = true;
            while (carry && i-- > lead + 1) {
                if (++v[i] < q) {
                    carry = false;
                } else {
                    v[i] = 0;
                }
            }
            if (carry) break;
        }
    }
    return out;
}

std::vector<FqVec> enumerate_affine_points(std::size_t n, std::uint64_t q) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= q;
    std::vector<FqVec> out;
    out.reserve(size);
    FqVec v(n, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
        out.push_back(v);
        for (std::size_t i = 0; i < n; ++i) {
            if (++v[i] < q) break;
            v[i] = 0;
        }
    }
    return out;
}

std::size_t leading_index(const FqVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) return i;
    throw ZeroDirection();
}

std::string fqvec_proj_str(const FqVec& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ":" : "") << v[i];
    out << "]";
    return out.str();
}

std::string fqvec_affine_str(const FqVec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

}  // namespace kakeya
