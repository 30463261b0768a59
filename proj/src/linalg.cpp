#include "kakeya/linalg.hpp"

#include <cassert>
#include <span>

namespace kakeya {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldCtx& ctx)
    : rows_(rows), cols_(cols), ctx_(ctx), a_(rows * cols, Scalar::zero(ctx)) {}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.ctx() != ctx_) throw WrongField("matrix entry from a different field");
    a_[r * cols_ + c] = v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, ctx_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::identity(std::size_t n, const FieldCtx& ctx) {
    Matrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ctx));
    return m;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Scalar> y(rows_, Scalar::zero(ctx_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
}

namespace {

// Forward elimination on a working copy; returns the pivot count.
// Pivot choice is the first row with a nonzero entry, in column order;
// arithmetic is exact, so no magnitude pivoting is needed and results are
// deterministic. Rational entries stay reduced (canonical form).
unsigned eliminate(Matrix work) {
    const std::size_t rows = work.rows(), cols = work.cols();
    std::vector<std::vector<Scalar>> a(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        a[r].reserve(cols);
        for (std::size_t c = 0; c < cols; ++c) a[r].push_back(work.at(r, c));
    }
    unsigned pivots = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[row]);
        Scalar inv = a[row][col].inv();
        for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++pivots;
        ++row;
    }
    return pivots;
}

}  // namespace

unsigned rank(const Matrix& m) { return eliminate(m); }

unsigned kernel_dim(const Matrix& m) {
    unsigned r = eliminate(m);
    unsigned k = static_cast<unsigned>(m.cols()) - r;
    assert(r + k == m.cols());
    return k;
}

}  // namespace kakeya
