#include "omcat/oriented_matroid.hpp"

#include <algorithm>
#include <bit>

namespace omcat {

std::vector<SignVector> canonical_sorted(std::vector<SignVector> v) {
    std::sort(v.begin(), v.end(), trit_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool sign_orthogonal(const SignVector& a, const SignVector& b) {
    std::uint64_t agree = (a.pos_mask() & b.pos_mask()) | (a.neg_mask() & b.neg_mask());
    std::uint64_t oppose = (a.pos_mask() & b.neg_mask()) | (a.neg_mask() & b.pos_mask());
    return (agree == 0) == (oppose == 0);
}

std::string subset_str(std::uint64_t mask, const std::vector<std::string>& labels) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < labels.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) {
            if (!first) out += ",";
            out += labels[i];
            first = false;
        }
    return out + "}";
}

OrientedMatroid::OrientedMatroid(std::vector<std::string> ground, std::vector<SignVector> cocircuits,
                                 bool trusted)
    : labels_(std::move(ground)) {
    n_ = static_cast<unsigned>(labels_.size());
    if (n_ > 64) throw DimensionError("ground sets of more than 64 elements are not supported");
    for (const auto& c : cocircuits)
        if (c.size() != n_) throw DimensionError("cocircuit length does not match ground set");
    cocircuits_ = canonical_sorted(std::move(cocircuits));
    if (!trusted) {
        AxiomReport rep = check_axioms(cocircuits_);
        if (!rep.pass)
            throw DomainError("axioms", "cocircuit axioms violated (" + rep.violated + "): " + rep.detail);
    }
    // rank by greedy extension, using the closed-world independence oracle
    std::uint64_t indep = 0;
    for (unsigned e = 0; e < n_; ++e) {
        std::uint64_t cand = indep | (std::uint64_t(1) << e);
        if (is_independent(cand)) indep = cand;
    }
    d_ = static_cast<unsigned>(std::popcount(indep));
}

unsigned OrientedMatroid::label_index(const std::string& label) const {
    for (unsigned i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    throw DomainError("ground", "no ground element labelled '" + label + "'");
}

bool OrientedMatroid::is_independent(std::uint64_t set) const {
    // S is independent iff for each e in S some cocircuit hits S exactly at e.
    for (unsigned e = 0; e < n_; ++e) {
        std::uint64_t bit = std::uint64_t(1) << e;
        if (!(set & bit)) continue;
        bool found = false;
        for (const auto& y : cocircuits_) {
            std::uint64_t hit = y.support() & set;
            if (hit == bit) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

unsigned OrientedMatroid::set_rank(std::uint64_t set) const {
    std::uint64_t indep = 0;
    for (unsigned e = 0; e < n_; ++e) {
        std::uint64_t bit = std::uint64_t(1) << e;
        if (!(set & bit)) continue;
        if (is_independent(indep | bit)) indep |= bit;
    }
    return static_cast<unsigned>(std::popcount(indep));
}

const std::vector<std::uint64_t>& OrientedMatroid::bases() const {
    if (bases_) return *bases_;
    std::vector<std::uint64_t> out;
    // enumerate d-subsets in increasing mask order
    std::vector<unsigned> idx(d_);
    for (unsigned i = 0; i < d_; ++i) idx[i] = i;
    if (d_ == 0) {
        out.push_back(0);
    } else if (d_ <= n_) {
        while (true) {
            std::uint64_t mask = 0;
            for (unsigned i : idx) mask |= std::uint64_t(1) << i;
            if (is_independent(mask)) out.push_back(mask);
            // next combination
            int i = static_cast<int>(d_) - 1;
            while (i >= 0 && idx[i] == n_ - d_ + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (unsigned j = i + 1; j < d_; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    bases_ = std::move(out);
    return *bases_;
}

std::uint64_t OrientedMatroid::loops() const {
    std::uint64_t covered = 0;
    for (const auto& y : cocircuits_) covered |= y.support();
    std::uint64_t all = n_ >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    return all & ~covered;
}

std::uint64_t OrientedMatroid::coloops() const {
    std::uint64_t out = 0;
    for (const auto& y : cocircuits_)
        if (y.support_size() == 1) out |= y.support();
    return out;
}

std::vector<SignVector> OrientedMatroid::circuits_bruteforce() const {
    // Minimal-support nonzero sign vectors orthogonal to every cocircuit.
    // Circuit supports have at most d+1 elements.
    std::vector<SignVector> found;
    unsigned maxsupp = std::min(n_, d_ + 1);
    std::vector<unsigned> elems;
    // enumerate supports by size so the minimality filter is a simple scan
    for (unsigned k = 1; k <= maxsupp; ++k) {
        std::vector<unsigned> idx(k);
        for (unsigned i = 0; i < k; ++i) idx[i] = i;
        if (k > n_) break;
        while (true) {
            std::uint64_t supp = 0;
            for (unsigned i : idx) supp |= std::uint64_t(1) << i;
            bool covered = false;
            for (const auto& c : found)
                if ((c.support() & ~supp) == 0) {
                    covered = true;
                    break;
                }
            if (!covered) {
                // sign patterns with the first support element positive
                for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (k - 1)); ++bits) {
                    std::uint64_t pos = std::uint64_t(1) << idx[0];
                    std::uint64_t neg = 0;
                    for (unsigned i = 1; i < k; ++i) {
                        if (bits & (std::uint64_t(1) << (i - 1)))
                            neg |= std::uint64_t(1) << idx[i];
                        else
                            pos |= std::uint64_t(1) << idx[i];
                    }
                    SignVector cand(n_, pos, neg);
                    bool ok = true;
                    for (const auto& y : cocircuits_)
                        if (!sign_orthogonal(cand, y)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        // full support exactly `supp` by construction
                        found.push_back(cand);
                        found.push_back(-cand);
                    }
                }
            }
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && idx[i] == n_ - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return canonical_sorted(std::move(found));
}

std::vector<SignVector> OrientedMatroid::circuits_from_chirotope() const {
    if (!chirotope_) throw DomainError("chirotope", "no chirotope attached");
    const Chirotope& chi = *chirotope_;
    std::vector<SignVector> found;
    if (d_ + 1 > n_) return found;
    // every (d+1)-subset of rank d carries a unique circuit with signs
    // (-1)^i chi(S \ e_i)
    unsigned k = d_ + 1;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t pos = 0, neg = 0;
        bool any = false;
        for (unsigned i = 0; i < k; ++i) {
            std::uint64_t sub = 0;
            for (unsigned j = 0; j < k; ++j)
                if (j != i) sub |= std::uint64_t(1) << idx[j];
            auto it = chi.find(sub);
            int v = it == chi.end() ? 0 : it->second;
            if (i & 1) v = -v;
            if (v > 0) pos |= std::uint64_t(1) << idx[i];
            if (v < 0) neg |= std::uint64_t(1) << idx[i];
            if (v != 0) any = true;
        }
        if (any) {
            SignVector c(n_, pos, neg);
            found.push_back(c);
            found.push_back(-c);
        }
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == n_ - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    // the same circuit arises from several completions; keep minimal supports
    found = canonical_sorted(std::move(found));
    std::vector<SignVector> minimal;
    for (const auto& c : found) {
        bool keep = true;
        for (const auto& other : found)
            if (other != c && (other.support() & ~c.support()) == 0 &&
                other.support() != c.support()) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(c);
    }
    return minimal;
}

const std::vector<SignVector>& OrientedMatroid::circuits() const {
    if (circuits_) return *circuits_;
    circuits_ = chirotope_ ? circuits_from_chirotope() : circuits_bruteforce();
    return *circuits_;
}

namespace {
// sign of the shuffle permutation (complement, basis) of 0..n-1
int complement_shuffle_sign(std::uint64_t basis, unsigned n) {
    int inversions = 0;
    unsigned seen_basis = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (basis & (std::uint64_t(1) << i))
            ++seen_basis;
        else
            inversions += seen_basis;
    }
    return inversions % 2 == 0 ? 1 : -1;
}
} // namespace

OrientedMatroid OrientedMatroid::dual() const {
    OrientedMatroid out(labels_, circuits(), true);
    if (chirotope_) {
        Chirotope dual_chi;
        std::uint64_t all = n_ >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
        for (const auto& [basis, sign] : *chirotope_) {
            std::uint64_t comp = all & ~basis;
            dual_chi[comp] = sign * complement_shuffle_sign(basis, n_);
        }
        out.attach_chirotope(std::move(dual_chi));
    }
    return out;
}

OrientedMatroid OrientedMatroid::minor(std::uint64_t delete_set, std::uint64_t contract_set) const {
    if (delete_set & contract_set)
        throw DomainError("minor", "deletion and contraction sets overlap");
    // contract: keep cocircuits vanishing on the contracted set
    std::vector<unsigned> keep;
    std::vector<std::string> new_labels;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t bit = std::uint64_t(1) << i;
        if ((delete_set | contract_set) & bit) continue;
        keep.push_back(i);
        new_labels.push_back(labels_[i]);
    }
    std::vector<SignVector> stage;
    for (const auto& y : cocircuits_)
        if ((y.support() & contract_set) == 0) stage.push_back(y);
    // delete: restrict and keep inclusion-minimal nonzero supports
    std::vector<SignVector> restricted;
    for (const auto& y : stage) {
        SignVector r = y.restrict_to(keep);
        if (!r.is_zero()) restricted.push_back(r);
    }
    restricted = canonical_sorted(std::move(restricted));
    std::vector<SignVector> minimal;
    for (const auto& c : restricted) {
        bool keep_it = true;
        for (const auto& other : restricted)
            if ((other.support() & ~c.support()) == 0 && other.support() != c.support()) {
                keep_it = false;
                break;
            }
        if (keep_it) minimal.push_back(c);
    }
    return OrientedMatroid(new_labels, std::move(minimal), true);
}

OrientedMatroid OrientedMatroid::reorient(std::uint64_t flip_set) const {
    std::vector<SignVector> flipped;
    flipped.reserve(cocircuits_.size());
    for (const auto& y : cocircuits_) flipped.push_back(y.flip(flip_set));
    OrientedMatroid out(labels_, std::move(flipped), true);
    if (chirotope_) {
        Chirotope chi;
        for (const auto& [basis, sign] : *chirotope_) {
            int flips = std::popcount(basis & flip_set);
            chi[basis] = (flips % 2 == 0) ? sign : -sign;
        }
        out.attach_chirotope(std::move(chi));
    }
    return out;
}

void OrientedMatroid::attach_chirotope(Chirotope chi) {
    for (const auto& [basis, sign] : chi) {
        if (std::popcount(basis) != static_cast<int>(d_))
            throw DomainError("chirotope", "chirotope key is not a d-subset");
        bool is_basis = is_independent(basis);
        if ((sign != 0) != is_basis)
            throw DomainError("chirotope", "chirotope support disagrees with the bases");
    }
    chirotope_ = std::move(chi);
}

bool OrientedMatroid::same_data(const OrientedMatroid& other) const {
    return labels_ == other.labels_ && cocircuits_ == other.cocircuits_;
}

} // namespace omcat
