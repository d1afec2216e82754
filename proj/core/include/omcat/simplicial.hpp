#ifndef OMCAT_SIMPLICIAL_HPP
#define OMCAT_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "omcat/errors.hpp"

namespace omcat {

// Simplicial complex on ground elements 0..n-1 given by its facets. The void
// complex (no faces at all) is distinct from the complex {∅}.
class SimplicialComplex {
  public:
    SimplicialComplex(unsigned n, std::vector<std::uint64_t> facets);
    static SimplicialComplex void_complex(unsigned n) { return SimplicialComplex(n, {}, true); }

    unsigned ground_size() const { return n_; }
    bool is_void() const { return is_void_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }
    bool has_face(std::uint64_t s) const;
    bool is_pure() const;
    int dim() const; // -2 void, -1 for {∅}
    std::vector<std::uint64_t> all_faces() const; // includes ∅ unless void

    // f_k = number of faces of cardinality k (f_0 = 1 unless void)
    std::vector<long> f_vector() const;

  private:
    SimplicialComplex(unsigned n, std::vector<std::uint64_t> facets, bool make_void);
    unsigned n_;
    bool is_void_;
    std::vector<std::uint64_t> facets_;
};

// h-vector via the standard f -> h transform, h_0..h_D where D = dim+1.
std::vector<long> h_vector(const SimplicialComplex& k);

// Exponent vectors of the degree-m monomials of the face ring k[K].
using Monomial = std::vector<unsigned>;
std::vector<Monomial> monomials_of_degree(const SimplicialComplex& k, unsigned degree);

} // namespace omcat

#endif
