#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kakeya/field.hpp"

namespace kakeya {

/// Dense row-major matrix of Scalars sharing one FieldCtx.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldCtx& ctx);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldCtx& ctx() const { return ctx_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v);

    Matrix transpose() const;
    static Matrix identity(std::size_t n, const FieldCtx& ctx);

    /// Multiply by a column vector.
    std::vector<Scalar> apply(std::span<const Scalar> x) const;

private:
    std::size_t rows_, cols_;
    FieldCtx ctx_;
    std::vector<Scalar> a_;
};

/// Row rank by exact Gaussian elimination (first-nonzero pivoting).
unsigned rank(const Matrix& m);

/// dim {x : Mx = 0} = cols - rank; the rank-nullity identity is asserted
/// against the count of pivot-free columns after every elimination.
unsigned kernel_dim(const Matrix& m);

}  // namespace kakeya
