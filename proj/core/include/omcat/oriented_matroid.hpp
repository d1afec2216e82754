#ifndef OMCAT_ORIENTED_MATROID_HPP
#define OMCAT_ORIENTED_MATROID_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omcat/axioms.hpp"
#include "omcat/sign_vector.hpp"

namespace omcat {

// Chirotope: map from sorted d-subsets (as bitmasks) to {-1,0,+1}, stored up
// to the global sign fixed at construction.
using Chirotope = std::map<std::uint64_t, int>;

// Oriented matroid with signed cocircuits as the canonical carrier.
// Circuits, bases and the chirotope are derived (or attached) data.
class OrientedMatroid {
  public:
    // Validates the axioms unless `trusted` is set (fixture fast path).
    OrientedMatroid(std::vector<std::string> ground, std::vector<SignVector> cocircuits,
                    bool trusted = false);

    unsigned size() const { return n_; }
    const std::vector<std::string>& ground() const { return labels_; }
    unsigned label_index(const std::string& label) const;
    unsigned rank() const { return d_; }
    const std::vector<SignVector>& cocircuits() const { return cocircuits_; }

    bool is_independent(std::uint64_t set) const;
    unsigned set_rank(std::uint64_t set) const;
    // All maximal independent sets, as bitmasks in canonical order.
    const std::vector<std::uint64_t>& bases() const;
    std::uint64_t loops() const;
    std::uint64_t coloops() const;

    // Circuits via brute-force minimal sign vectors orthogonal to every
    // cocircuit (support pruned at d+1); uses the chirotope route when a
    // chirotope is attached.
    const std::vector<SignVector>& circuits() const;
    std::vector<SignVector> circuits_bruteforce() const;
    std::vector<SignVector> circuits_from_chirotope() const;

    OrientedMatroid dual() const;
    OrientedMatroid minor(std::uint64_t delete_set, std::uint64_t contract_set) const;
    OrientedMatroid reorient(std::uint64_t flip_set) const;

    void attach_chirotope(Chirotope chi);
    const std::optional<Chirotope>& chirotope() const { return chirotope_; }

    bool same_data(const OrientedMatroid& other) const;

  private:
    unsigned n_;
    unsigned d_;
    std::vector<std::string> labels_;
    std::vector<SignVector> cocircuits_; // canonically sorted, closed under negation
    std::optional<Chirotope> chirotope_;
    mutable std::optional<std::vector<std::uint64_t>> bases_;
    mutable std::optional<std::vector<SignVector>> circuits_;
};

// Helpers shared by minor/dual routines.
std::vector<SignVector> canonical_sorted(std::vector<SignVector> v);
bool sign_orthogonal(const SignVector& a, const SignVector& b);

std::string subset_str(std::uint64_t mask, const std::vector<std::string>& labels);

} // namespace omcat

#endif
