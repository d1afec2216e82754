#include "omcat/matrix.hpp"

namespace omcat {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> row;
        row.reserve(r.size());
        for (long v : r) row.emplace_back(v);
        conv.push_back(std::move(row));
    }
    return from_rows(conv);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix product size mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.at(r, c) += at(r, k) * other.at(k, c);
        }
    return out;
}

RatMatrix RatMatrix::select_cols(const std::vector<std::size_t>& cols) const {
    RatMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw DimensionError("column index out of range");
            out.at(r, j) = at(r, cols[j]);
        }
    return out;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw DimensionError("vstack width mismatch");
    RatMatrix out(rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = below.at(r, c);
    return out;
}

std::vector<std::size_t> RatMatrix::rref_inplace() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(lead, c), at(pivot, c));
        Rat inv = Rat(1) / at(lead, col);
        for (std::size_t c = 0; c < cols_; ++c) at(lead, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || at(r, col) == 0) continue;
            Rat f = at(r, col);
            for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= f * at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t RatMatrix::rank() const {
    RatMatrix copy = *this;
    return copy.rref_inplace().size();
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
    RatMatrix m = *this;
    Rat result(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return Rat(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(col, c), m.at(pivot, c));
            result = -result;
        }
        result *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return result;
}

RatMatrix RatMatrix::kernel_basis() const {
    RatMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref_inplace();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix out(free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(k, fc) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) out.at(k, pivots[r]) = -m.at(r, fc);
    }
    return out;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) return false;
    std::size_t ra = a.rank(), rb = b.rank();
    if (ra != rb) return false;
    return a.vstack(b).rank() == ra;
}

} // namespace omcat
