#ifndef OMCAT_B_ALGEBRA_HPP
#define OMCAT_B_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "omcat/laurent.hpp"
#include "omcat/matrix.hpp"
#include "omcat/param_space.hpp"
#include "omcat/program.hpp"

namespace omcat {

struct BAlgebraOptions {
    std::size_t max_topes = 8;
    unsigned max_ground = 8;
};

// Face ring modulo the parameter ideal, with explicit monomial normal forms
// per half-degree.
class RingQuotient {
  public:
    RingQuotient() = default; // zero ring (void complex)
    RingQuotient(SimplicialComplex complex, const RatMatrix& theta);

    bool is_zero_ring() const { return !complex_.has_value(); }
    const SimplicialComplex& complex() const;
    unsigned top_half_degree() const { return top_; }
    const std::vector<Monomial>& basis(unsigned m) const;      // basis monomials
    const std::vector<Monomial>& monomials(unsigned m) const;  // all face monomials
    // Reduce a dense coefficient vector over monomials(m) to the basis.
    std::vector<Rat> normal_form(unsigned m, std::vector<Rat> coeffs) const;
    long dim(unsigned m) const;
    long total_dim() const;

  private:
    std::optional<SimplicialComplex> complex_;
    unsigned top_ = 0;
    std::vector<std::vector<Monomial>> monomials_;
    std::vector<std::map<Monomial, std::size_t>> index_;
    std::vector<std::vector<Monomial>> basis_;
    // rref'd relation rows and the pivot -> row lookup, per degree
    std::vector<RatMatrix> rel_;
    std::vector<std::map<std::size_t, std::size_t>> pivot_row_;
    std::vector<std::vector<std::size_t>> basis_cols_;
};

// Element of B supported in one (alpha, beta) block and one internal degree.
struct BBasisElem {
    std::size_t a, b;   // tope indices
    unsigned half_deg;  // internal half-degree in R_ab
    std::size_t idx;    // index into the RingQuotient basis
};

// Explicit model of the convolution algebra on the common-face rings, with
// the star product. Tiny instances only.
class BAlgebra {
  public:
    BAlgebra(const Program& p, const ParameterSpace& u, BAlgebraOptions options = {});

    const std::vector<SignVector>& topes() const { return topes_; }
    const RingQuotient& ring(std::size_t a, std::size_t b) const { return rings_[a][b]; }
    const std::vector<BBasisElem>& basis() const { return basis_; }
    long total_dim() const { return static_cast<long>(basis_.size()); }
    // B-degree (path-length grading): 2*half_deg + hamming(a,b)
    unsigned degree(const BBasisElem& e) const;

    // star product of two basis elements, as coefficients over basis()
    std::vector<Rat> star(std::size_t x, std::size_t y) const;
    // product of the block units 1_ab * 1_bc expressed over the (a,c) block
    std::vector<Rat> unit_product(std::size_t a, std::size_t b, std::size_t c) const;

    bool check_associativity() const;  // over all composable basis triples
    bool check_unit() const;
    long center_dim() const;           // explicit center solve
    GradedMatrix graded_dims() const;  // q^(d_ab) grdim R_ab per block

  private:
    std::vector<Rat> star_monomials(std::size_t a, std::size_t b, std::size_t c, unsigned m1,
                                    const Monomial& x, unsigned m2, const Monomial& y) const;
    std::size_t flat_index(const BBasisElem& e) const;

    const Program& prog_;
    unsigned n_;
    std::vector<SignVector> topes_;
    std::vector<std::vector<RingQuotient>> rings_;
    std::vector<std::vector<std::vector<SimplicialComplex>>> triple_complexes_;
    std::vector<BBasisElem> basis_;
    std::map<std::tuple<std::size_t, std::size_t, unsigned, std::size_t>, std::size_t> flat_;
};

} // namespace omcat

#endif
