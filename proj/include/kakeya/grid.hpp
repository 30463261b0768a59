#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kakeya/kernels.hpp"
#include "kakeya/poly.hpp"

namespace kakeya {

/// Raw coordinate vector over F_q, entries in [0, q).
using FqVec = std::vector<std::uint32_t>;

/// Values of a polynomial on all of F_q^n; index = sum x_i * q^i
/// (coordinate 0 fastest).
struct GridTable {
    std::uint32_t q = 0;
    std::uint32_t nvars = 0;
    std::vector<std::uint32_t> values;

    std::size_t index(std::span<const std::uint32_t> coords) const;
    std::uint32_t at(std::span<const std::uint32_t> coords) const { return values[index(coords)]; }
};

/// Evaluate f over the full grid F_q^n where q is the modulus of f's
/// context. Built from per-term tensor blocks using the mod-p array
/// kernels. Requires a prime field with modulus < 2^16.
GridTable eval_on_grid(const MultiPoly& f, const ModKernels& kernels = active_kernels());

/// Normalized representatives of P^{m}(F_q) where m = ncoords - 1: first
/// nonzero coordinate is 1; listed in ascending lexicographic order of the
/// full coordinate vector. Size (q^ncoords - 1) / (q - 1).
std::vector<FqVec> enumerate_proj_points(std::size_t ncoords, std::uint64_t q);

std::uint64_t proj_point_count(std::size_t ncoords, std::uint64_t q);

/// All points of F_q^n in index order.
std::vector<FqVec> enumerate_affine_points(std::size_t n, std::uint64_t q);

/// First index i with v[i] != 0 (v is normalized so v[i] == 1).
std::size_t leading_index(const FqVec& v);

std::string fqvec_proj_str(const FqVec& v);   // "[a:b:c]"
std::string fqvec_affine_str(const FqVec& v); // "(a,b,c)"

}  // namespace kakeya
