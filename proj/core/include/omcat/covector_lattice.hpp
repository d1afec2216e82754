#ifndef OMCAT_COVECTOR_LATTICE_HPP
#define OMCAT_COVECTOR_LATTICE_HPP

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "omcat/oriented_matroid.hpp"

namespace omcat {

inline constexpr std::size_t kDefaultCovectorCap = std::size_t(1) << 20;

// Composition closure of the cocircuits plus the zero vector, with the rank
// function rho(Y) = d - rank(z(Y)).
class CovectorLattice {
  public:
    CovectorLattice(const OrientedMatroid& om, std::size_t max_covectors = kDefaultCovectorCap);

    const std::vector<SignVector>& covectors() const { return covectors_; }
    const std::vector<unsigned>& ranks() const { return ranks_; }
    const std::vector<SignVector>& topes() const { return topes_; }
    unsigned matroid_rank() const { return d_; }

    bool contains(const SignVector& v) const { return set_.count(v) > 0; }
    unsigned rank_of(const SignVector& v) const;

    // Faces of v within the lattice (covectors w with w∘v = v), optionally
    // restricted to cocircuits (rank 1).
    std::vector<SignVector> cocircuit_faces(const SignVector& v) const;
    // Maximal common face of the given covectors (zero when none).
    SignVector meet(const std::vector<SignVector>& vs) const;

  private:
    unsigned d_;
    std::vector<SignVector> covectors_; // canonically sorted
    std::vector<unsigned> ranks_;
    std::vector<SignVector> topes_;
    std::vector<SignVector> cocircuits_;
    std::unordered_set<SignVector, SignVectorHash> set_;
};

} // namespace omcat

#endif
