#ifndef OMCAT_LAURENT_HPP
#define OMCAT_LAURENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "omcat/errors.hpp"
#include "omcat/sign_vector.hpp"

namespace omcat {

// Laurent polynomial in q with 64-bit integer coefficients, dense storage
// with an explicit minimal degree.
class Laurent {
  public:
    Laurent() = default; // zero
    static Laurent monomial(long coeff, int degree);
    static Laurent one() { return monomial(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_degree() const { return min_deg_; } // only meaningful when nonzero
    int max_degree() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
    long coeff(int degree) const;
    const std::vector<long>& coeffs() const { return coeffs_; }

    Laurent operator+(const Laurent& other) const;
    Laurent operator-(const Laurent& other) const;
    Laurent operator*(const Laurent& other) const;
    bool operator==(const Laurent& other) const = default;

    Laurent substitute_neg_q() const; // q -> -q
    long eval_one() const;            // value at q = 1
    std::string str() const;          // e.g. "1+q^2"

  private:
    void normalize();
    int min_deg_ = 0;
    std::vector<long> coeffs_; // coeffs_[k] is the coefficient of q^(min_deg_+k)
};

// Square matrix over Laurent polynomials indexed by an ordered tope list.
class GradedMatrix {
  public:
    GradedMatrix() = default;
    GradedMatrix(std::vector<SignVector> order, std::vector<std::vector<Laurent>> entries);
    static GradedMatrix identity(std::vector<SignVector> order);

    std::size_t size() const { return order_.size(); }
    const std::vector<SignVector>& order() const { return order_; }
    const Laurent& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    Laurent& at(std::size_t r, std::size_t c) { return entries_[r][c]; }

    GradedMatrix mul(const GradedMatrix& other) const;
    GradedMatrix mul_transpose(const GradedMatrix& other) const; // this * other^T
    GradedMatrix transpose() const;
    GradedMatrix operator-(const GradedMatrix& other) const;
    GradedMatrix substitute_neg_q() const;
    bool is_identity() const;
    bool is_zero() const;
    bool is_symmetric() const;
    long sum_eval_one() const;
    bool operator==(const GradedMatrix& other) const = default;

  private:
    std::vector<SignVector> order_;
    std::vector<std::vector<Laurent>> entries_;
};

} // namespace omcat

#endif
