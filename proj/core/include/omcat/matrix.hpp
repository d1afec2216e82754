#ifndef OMCAT_MATRIX_HPP
#define OMCAT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "omcat/rational.hpp"

namespace omcat {

// Dense matrix over exact rationals.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static RatMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMatrix transpose() const;
    RatMatrix mul(const RatMatrix& other) const;
    RatMatrix select_cols(const std::vector<std::size_t>& cols) const;
    RatMatrix vstack(const RatMatrix& below) const;

    std::size_t rank() const;
    Rat det() const; // square only
    // Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref_inplace();
    // Basis of the right kernel {x : A x = 0}, one row per basis vector.
    RatMatrix kernel_basis() const;

    bool operator==(const RatMatrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// True iff the two matrices have the same row space.
bool same_row_space(const RatMatrix& a, const RatMatrix& b);

// Row-reduce an integer/rational coefficient list-of-rows over a field given
// by FieldOps (QOps or FpOps below); returns the rank. Rows are dense vectors.
struct QOps {
    using Scalar = Rat;
    Scalar zero() const { return Rat(0); }
    bool is_zero(const Scalar& x) const { return x == 0; }
    Scalar neg(const Scalar& x) const { return -x; }
    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar inv(const Scalar& a) const { return Rat(1) / a; }
    Scalar from_rat(const Rat& r) const { return r; }
};

struct FpOps {
    FpCtx ctx;
    using Scalar = std::uint64_t;
    explicit FpOps(std::uint64_t p) : ctx(p) {}
    Scalar zero() const { return 0; }
    bool is_zero(Scalar x) const { return x % ctx.p == 0; }
    Scalar neg(Scalar x) const { return ctx.sub(0, x); }
    Scalar add(Scalar a, Scalar b) const { return ctx.add(a, b); }
    Scalar mul(Scalar a, Scalar b) const { return ctx.mul(a, b); }
    Scalar inv(Scalar a) const { return ctx.inv(a); }
    Scalar from_rat(const Rat& r) const { return ctx.from_rat(r); }
};

template <class Ops>
std::size_t row_reduce_rank(std::vector<std::vector<typename Ops::Scalar>>& rows, const Ops& ops) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && ops.is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        auto piv_inv = ops.inv(rows[rank][col]);
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] = ops.mul(rows[rank][c], piv_inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || ops.is_zero(rows[r][col])) continue;
            auto factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = ops.add(rows[r][c], ops.neg(ops.mul(factor, rows[rank][c])));
        }
        ++rank;
    }
    return rank;
}

} // namespace omcat

#endif
