#ifndef OMCAT_CONSTRUCT_HPP
#define OMCAT_CONSTRUCT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "omcat/matrix.hpp"
#include "omcat/oriented_matroid.hpp"

namespace omcat {

// Oriented matroid of the columns of a full-row-rank d x n rational matrix:
// cocircuits are the sign patterns of minimal-support row-space vectors, the
// chirotope records the signs of the maximal minors.
OrientedMatroid realizable_om(const RatMatrix& mat, const std::vector<std::string>& labels);

// Signed element of a lexicographic ordering.
struct SignedElem {
    unsigned index;
    int sign; // +1 or -1
};

// Single-element extension by the lexicographic point [e_1^s1, ..., e_k^sk].
// The order must span the matroid (contain a basis).
OrientedMatroid lex_extend(const OrientedMatroid& om, const std::vector<SignedElem>& order,
                           const std::string& new_label);

// Single-element lift, the dual construction: dual(lex_extend(dual(om), order)).
OrientedMatroid lex_lift(const OrientedMatroid& om, const std::vector<SignedElem>& order,
                         const std::string& new_label);

// Generic program data built per the existence construction: extend by f along
// the given order, then lift by g along the colocalization of the same order.
// Returns the extended-and-lifted matroid on ground ++ {g, f}.
OrientedMatroid generic_extension_lift(const OrientedMatroid& om, const std::string& g_label,
                                       const std::string& f_label);

// Random rational matrix with entries in [-bound, bound].
RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound);

} // namespace omcat

#endif
