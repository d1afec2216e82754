#include "omcat/mu_table.hpp"

#include <algorithm>
#include <bit>

#include "omcat/errors.hpp"

namespace omcat {

unsigned hamming_distance(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) throw DimensionError("distance over different ground sets");
    return static_cast<unsigned>(std::popcount(a.separation(b)));
}

std::uint64_t crossing_set(const SignVector& a, const SignVector& b, const SignVector& c) {
    if (a.size() != b.size() || b.size() != c.size())
        throw DimensionError("crossing set over different ground sets");
    std::uint64_t ac_agree = (a.pos_mask() & c.pos_mask()) | (a.neg_mask() & c.neg_mask());
    return ac_agree & a.separation(b);
}

MuTable::MuTable(unsigned n, std::vector<std::pair<std::uint64_t, SignVector>> rows) : n_(n) {
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return tope_lex_less(a.second, b.second); });
    for (auto& [basis, tope] : rows) {
        if (tope.size() != n_) throw DimensionError("tope length differs from n");
        if (tope.support_size() != n_)
            throw DomainError("mu_table", "topes must have full support, got " + tope.str());
        topes_.push_back(tope);
        bases_.push_back(basis);
    }
    for (std::size_t i = 1; i < topes_.size(); ++i)
        if (topes_[i] == topes_[i - 1])
            throw DomainError("mu_table", "duplicate tope " + topes_[i].str());
    std::vector<std::uint64_t> sorted_bases = bases_;
    std::sort(sorted_bases.begin(), sorted_bases.end());
    for (std::size_t i = 1; i < sorted_bases.size(); ++i)
        if (sorted_bases[i] == sorted_bases[i - 1])
            throw DomainError("mu_table", "duplicate basis in the table");
}

std::size_t MuTable::index_of(const SignVector& tope) const {
    auto f = find(tope);
    if (!f) throw DomainError("mu_table", tope.str() + " is not a bounded feasible tope");
    return *f;
}

std::optional<std::size_t> MuTable::find(const SignVector& tope) const {
    auto it = std::lower_bound(topes_.begin(), topes_.end(), tope, tope_lex_less);
    if (it == topes_.end() || !(*it == tope)) return std::nullopt;
    return static_cast<std::size_t>(it - topes_.begin());
}

std::size_t MuTable::index_of_basis(std::uint64_t basis) const {
    for (std::size_t i = 0; i < bases_.size(); ++i)
        if (bases_[i] == basis) return i;
    throw DomainError("mu_table", "basis not present in the table");
}

bool MuTable::cone_leq(std::size_t beta, std::size_t alpha) const {
    std::uint64_t b = bases_[alpha];
    const SignVector &sb = topes_[beta], &sa = topes_[alpha];
    std::uint64_t disagree = sb.separation(sa);
    return (disagree & b) == 0;
}

const std::vector<std::vector<bool>>& MuTable::closure() const {
    if (closure_) return *closure_;
    std::size_t m = size();
    std::vector<std::vector<bool>> c(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i][j] = cone_leq(i, j);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            if (!c[i][k]) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (c[k][j]) c[i][j] = true;
        }
    closure_ = std::move(c);
    return *closure_;
}

bool MuTable::closure_antisymmetric() const {
    return !antisymmetry_violation().has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> MuTable::antisymmetry_violation() const {
    const auto& c = closure();
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (c[i][j] && c[j][i]) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<std::size_t> MuTable::up_set(std::size_t alpha) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < size(); ++b)
        if (cone_leq(alpha, b)) out.push_back(b);
    return out;
}

std::vector<std::size_t> MuTable::down_set(std::size_t alpha) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < size(); ++b)
        if (cone_leq(b, alpha)) out.push_back(b);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> MuTable::hasse_covers() const {
    if (!closure_antisymmetric())
        throw NonEuclideanError("the cone-relation closure is not a partial order");
    const auto& c = closure();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (a == b || !c[b][a]) continue;
            bool is_cover = true;
            for (std::size_t m = 0; m < size() && is_cover; ++m)
                if (m != a && m != b && c[b][m] && c[m][a]) is_cover = false;
            if (is_cover) covers.emplace_back(a, b); // a covers b
        }
    return covers;
}

unsigned MuTable::distance(std::size_t a, std::size_t b) const {
    return hamming_distance(topes_[a], topes_[b]);
}

std::uint64_t MuTable::crossing_set(std::size_t a, std::size_t b, std::size_t c) const {
    return omcat::crossing_set(topes_[a], topes_[b], topes_[c]);
}

} // namespace omcat
