#ifndef OMCAT_AXIOMS_HPP
#define OMCAT_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "omcat/sign_vector.hpp"

namespace omcat {

// Result of validating a candidate cocircuit (equivalently circuit) set.
struct AxiomReport {
    bool pass = true;
    // one of: "nonzero", "symmetry", "incomparability", "elimination"
    std::string violated;
    std::vector<SignVector> witness;
    std::string detail;
};

// Checks that `cands` is the signed cocircuit set of an oriented matroid:
// no zero vector, closure under negation, pairwise incomparable supports,
// and weak signed elimination.
AxiomReport check_axioms(const std::vector<SignVector>& cands);

} // namespace omcat

#endif
