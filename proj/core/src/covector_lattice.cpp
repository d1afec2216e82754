#include "omcat/covector_lattice.hpp"

#include <algorithm>
#include <deque>

namespace omcat {

CovectorLattice::CovectorLattice(const OrientedMatroid& om, std::size_t max_covectors)
    : d_(om.rank()), cocircuits_(om.cocircuits()) {
    std::deque<SignVector> frontier;
    SignVector zero = SignVector::zero(om.size());
    set_.insert(zero);
    for (const auto& y : cocircuits_) {
        if (set_.insert(y).second) frontier.push_back(y);
    }
    while (!frontier.empty()) {
        SignVector x = frontier.front();
        frontier.pop_front();
        for (const auto& y : cocircuits_) {
            SignVector c = x.compose(y);
            if (set_.insert(c).second) {
                if (set_.size() > max_covectors)
                    throw ResourceLimitError("covector closure exceeded the cap of " +
                                             std::to_string(max_covectors));
                frontier.push_back(c);
            }
        }
    }
    covectors_.assign(set_.begin(), set_.end());
    std::sort(covectors_.begin(), covectors_.end(), trit_less);
    ranks_.reserve(covectors_.size());
    for (const auto& v : covectors_) {
        unsigned r = d_ - om.set_rank(v.zero_set());
        ranks_.push_back(r);
        if (r == d_) topes_.push_back(v);
    }
}

unsigned CovectorLattice::rank_of(const SignVector& v) const {
    auto it = std::lower_bound(covectors_.begin(), covectors_.end(), v, trit_less);
    if (it == covectors_.end() || !(*it == v))
        throw DomainError("lattice", "sign vector " + v.str() + " is not a covector");
    return ranks_[static_cast<std::size_t>(it - covectors_.begin())];
}

std::vector<SignVector> CovectorLattice::cocircuit_faces(const SignVector& v) const {
    std::vector<SignVector> out;
    for (const auto& y : cocircuits_)
        if (y.is_face_of(v)) out.push_back(y);
    return out;
}

SignVector CovectorLattice::meet(const std::vector<SignVector>& vs) const {
    if (vs.empty()) throw DomainError("lattice", "meet of an empty family");
    SignVector acc = SignVector::zero(vs[0].size());
    for (const auto& y : cocircuits_) {
        bool common = true;
        for (const auto& v : vs)
            if (!y.is_face_of(v)) {
                common = false;
                break;
            }
        if (common) acc = acc.compose(y);
    }
    return acc;
}

} // namespace omcat
