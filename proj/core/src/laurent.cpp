#include "omcat/laurent.hpp"

#include <algorithm>

namespace omcat {

Laurent Laurent::monomial(long coeff, int degree) {
    Laurent p;
    if (coeff != 0) {
        p.min_deg_ = degree;
        p.coeffs_ = {coeff};
    }
    return p;
}

long Laurent::coeff(int degree) const {
    int k = degree - min_deg_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void Laurent::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead == tail) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<long>(coeffs_.begin() + static_cast<long>(lead),
                                    coeffs_.begin() + static_cast<long>(tail));
        min_deg_ += static_cast<int>(lead);
    }
}

Laurent Laurent::operator+(const Laurent& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    int lo = std::min(min_deg_, other.min_deg_);
    int hi = std::max(max_degree(), other.max_degree());
    Laurent out;
    out.min_deg_ = lo;
    out.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int d = lo; d <= hi; ++d)
        out.coeffs_[static_cast<std::size_t>(d - lo)] = coeff(d) + other.coeff(d);
    out.normalize();
    return out;
}

Laurent Laurent::operator-(const Laurent& other) const {
    Laurent neg = other;
    for (auto& c : neg.coeffs_) c = -c;
    return *this + neg;
}

Laurent Laurent::operator*(const Laurent& other) const {
    if (is_zero() || other.is_zero()) return Laurent();
    Laurent out;
    out.min_deg_ = min_deg_ + other.min_deg_;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    out.normalize();
    return out;
}

Laurent Laurent::substitute_neg_q() const {
    Laurent out = *this;
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
        int deg = out.min_deg_ + static_cast<int>(k);
        if (deg % 2 != 0) out.coeffs_[k] = -out.coeffs_[k];
    }
    out.normalize();
    return out;
}

long Laurent::eval_one() const {
    long acc = 0;
    for (long c : coeffs_) acc += c;
    return acc;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        long c = coeffs_[k];
        if (c == 0) continue;
        int deg = min_deg_ + static_cast<int>(k);
        std::string term;
        if (deg == 0) {
            term = std::to_string(std::abs(c));
        } else {
            if (std::abs(c) != 1) term = std::to_string(std::abs(c)) + "*";
            term += "q";
            if (deg != 1) term += "^" + std::to_string(deg);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? "-" : "+") + term;
    }
    return out;
}

GradedMatrix::GradedMatrix(std::vector<SignVector> order, std::vector<std::vector<Laurent>> entries)
    : order_(std::move(order)), entries_(std::move(entries)) {
    if (entries_.size() != order_.size())
        throw DimensionError("graded matrix row count differs from the tope order");
    for (const auto& row : entries_)
        if (row.size() != order_.size())
            throw DimensionError("graded matrix is not square over the tope order");
}

GradedMatrix GradedMatrix::identity(std::vector<SignVector> order) {
    std::size_t m = order.size();
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t i = 0; i < m; ++i) e[i][i] = Laurent::one();
    return GradedMatrix(std::move(order), std::move(e));
}

GradedMatrix GradedMatrix::mul(const GradedMatrix& other) const {
    std::size_t m = size();
    if (other.size() != m) throw DimensionError("graded matrix product size mismatch");
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            if (entries_[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (other.entries_[k][j].is_zero()) continue;
                e[i][j] = e[i][j] + entries_[i][k] * other.entries_[k][j];
            }
        }
    return GradedMatrix(order_, std::move(e));
}

GradedMatrix GradedMatrix::mul_transpose(const GradedMatrix& other) const {
    return mul(other.transpose());
}

GradedMatrix GradedMatrix::transpose() const {
    std::size_t m = size();
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) e[i][j] = entries_[j][i];
    return GradedMatrix(order_, std::move(e));
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& other) const {
    std::size_t m = size();
    if (other.size() != m) throw DimensionError("graded matrix difference size mismatch");
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) e[i][j] = entries_[i][j] - other.entries_[i][j];
    return GradedMatrix(order_, std::move(e));
}

GradedMatrix GradedMatrix::substitute_neg_q() const {
    GradedMatrix out = *this;
    for (auto& row : out.entries_)
        for (auto& p : row) p = p.substitute_neg_q();
    return out;
}

bool GradedMatrix::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            if (i == j && !(entries_[i][j] == Laurent::one())) return false;
            if (i != j && !entries_[i][j].is_zero()) return false;
        }
    return true;
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

bool GradedMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!(entries_[i][j] == entries_[j][i])) return false;
    return true;
}

long GradedMatrix::sum_eval_one() const {
    long acc = 0;
    for (const auto& row : entries_)
        for (const auto& p : row) acc += p.eval_one();
    return acc;
}

} // namespace omcat
