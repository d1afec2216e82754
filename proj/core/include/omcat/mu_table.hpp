#ifndef OMCAT_MU_TABLE_HPP
#define OMCAT_MU_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omcat/sign_vector.hpp"

namespace omcat {

// The basis <-> bounded-feasible-tope bijection, the datum every cone-relation
// and Grothendieck-level computation runs on. A table can come from a full
// program or be loaded directly as fixture data.
class MuTable {
  public:
    MuTable(unsigned n, std::vector<std::pair<std::uint64_t, SignVector>> rows);

    unsigned n() const { return n_; }
    std::size_t size() const { return topes_.size(); }
    // topes in output order: lexicographic on sign strings with '+' < '-'
    const std::vector<SignVector>& topes() const { return topes_; }
    const std::vector<std::uint64_t>& bases() const { return bases_; }
    std::size_t index_of(const SignVector& tope) const;
    std::optional<std::size_t> find(const SignVector& tope) const;
    std::size_t index_of_basis(std::uint64_t basis) const;

    // beta <= alpha in the cone relation iff beta agrees with alpha on the
    // basis of alpha.
    bool cone_leq(std::size_t beta, std::size_t alpha) const;
    const std::vector<std::vector<bool>>& closure() const; // transitive closure
    bool closure_antisymmetric() const;
    std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_violation() const;
    // Direct relation, not its closure.
    std::vector<std::size_t> up_set(std::size_t alpha) const;   // {beta : alpha <= beta}
    std::vector<std::size_t> down_set(std::size_t alpha) const; // {beta : beta <= alpha}
    // Cover pairs (a covers b) of the closure poset; requires antisymmetry.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_covers() const;

    unsigned distance(std::size_t a, std::size_t b) const;
    // {i : topes[a](i) = topes[c](i) != topes[b](i)}
    std::uint64_t crossing_set(std::size_t a, std::size_t b, std::size_t c) const;

  private:
    unsigned n_;
    std::vector<SignVector> topes_;
    std::vector<std::uint64_t> bases_;
    mutable std::optional<std::vector<std::vector<bool>>> closure_;
};

// Hamming distance and crossing set on raw sign vectors (same ground set).
unsigned hamming_distance(const SignVector& a, const SignVector& b);
std::uint64_t crossing_set(const SignVector& a, const SignVector& b, const SignVector& c);

} // namespace omcat

#endif
