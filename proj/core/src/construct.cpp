#include "omcat/construct.hpp"

#include <algorithm>
#include <bit>

#include "omcat/covector_lattice.hpp"

namespace omcat {

OrientedMatroid realizable_om(const RatMatrix& mat, const std::vector<std::string>& labels) {
    const std::size_t d = mat.rows(), n = mat.cols();
    if (labels.size() != n) throw DimensionError("label count does not match column count");
    if (mat.rank() != d) throw DomainError("rank", "matrix is not of full row rank");
    if (n > 64) throw DimensionError("ground sets of more than 64 elements are not supported");

    // Cocircuits: for every independent (d-1)-subset K of columns, the sign
    // pattern of a row-space vector vanishing exactly on the closure of K.
    std::vector<SignVector> cocircuits;
    std::vector<unsigned> idx(d ? d - 1 : 0);
    for (unsigned i = 0; i < idx.size(); ++i) idx[i] = i;
    if (d >= 1) {
        bool done = (d - 1 > n);
        if (d == 1) {
            // single cocircuit pair: any nonzero row-space vector of minimal support
            std::vector<std::size_t> all_cols(n);
            for (std::size_t c = 0; c < n; ++c) all_cols[c] = c;
            // row space is 1-dimensional
            std::uint64_t pos = 0, neg = 0;
            for (std::size_t c = 0; c < n; ++c) {
                int s = rat_sign(mat.at(0, c));
                if (s > 0) pos |= std::uint64_t(1) << c;
                if (s < 0) neg |= std::uint64_t(1) << c;
            }
            SignVector y(static_cast<unsigned>(n), pos, neg);
            cocircuits.push_back(y);
            cocircuits.push_back(-y);
            done = true;
        }
        while (!done) {
            std::vector<std::size_t> cols(idx.begin(), idx.end());
            RatMatrix sub = mat.select_cols(cols);
            if (sub.rank() == d - 1) {
                // w in the left kernel of the selected columns: w^T sub = 0
                RatMatrix ker = sub.transpose().kernel_basis();
                if (ker.rows() == 1) {
                    std::uint64_t pos = 0, neg = 0;
                    for (std::size_t c = 0; c < n; ++c) {
                        Rat v(0);
                        for (std::size_t r = 0; r < d; ++r) v += ker.at(0, r) * mat.at(r, c);
                        int s = rat_sign(v);
                        if (s > 0) pos |= std::uint64_t(1) << c;
                        if (s < 0) neg |= std::uint64_t(1) << c;
                    }
                    SignVector y(static_cast<unsigned>(n), pos, neg);
                    if (!y.is_zero()) {
                        cocircuits.push_back(y);
                        cocircuits.push_back(-y);
                    }
                }
            }
            int i = static_cast<int>(idx.size()) - 1;
            while (i >= 0 && idx[i] == n - idx.size() + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    OrientedMatroid om(labels, canonical_sorted(std::move(cocircuits)));

    // chirotope = signs of maximal minors
    Chirotope chi;
    std::vector<unsigned> bidx(d);
    for (unsigned i = 0; i < d; ++i) bidx[i] = i;
    if (d >= 1 && d <= n) {
        while (true) {
            std::vector<std::size_t> cols(bidx.begin(), bidx.end());
            std::uint64_t mask = 0;
            for (unsigned i : bidx) mask |= std::uint64_t(1) << i;
            chi[mask] = rat_sign(mat.select_cols(cols).det());
            int i = static_cast<int>(d) - 1;
            while (i >= 0 && bidx[i] == n - d + i) --i;
            if (i < 0) break;
            ++bidx[i];
            for (unsigned j = i + 1; j < d; ++j) bidx[j] = bidx[j - 1] + 1;
        }
        om.attach_chirotope(std::move(chi));
    }
    return om;
}

namespace {

int lex_localization(const SignVector& y, const std::vector<SignedElem>& order) {
    for (const auto& se : order) {
        int s = y.sign(se.index);
        if (s != 0) return s * se.sign;
    }
    return 0;
}

} // namespace

OrientedMatroid lex_extend(const OrientedMatroid& om, const std::vector<SignedElem>& order,
                           const std::string& new_label) {
    std::uint64_t order_mask = 0;
    for (const auto& se : order) {
        if (se.index >= om.size()) throw DomainError("lex", "order index out of range");
        if (se.sign != 1 && se.sign != -1) throw DomainError("lex", "order signs must be +1/-1");
        order_mask |= std::uint64_t(1) << se.index;
    }
    if (om.set_rank(order_mask) != om.rank())
        throw DomainError("lex", "lexicographic order must contain a basis");

    CovectorLattice lattice(om);
    const auto& covs = lattice.covectors();

    // classify each covector by the localization signs of its cocircuit faces
    enum Kind { kZero, kPos, kNeg, kCut };
    std::vector<Kind> kind(covs.size());
    for (std::size_t i = 0; i < covs.size(); ++i) {
        bool has_pos = false, has_neg = false;
        for (const auto& y : om.cocircuits()) {
            if (!y.is_face_of(covs[i])) continue;
            int s = lex_localization(y, order);
            if (s > 0) has_pos = true;
            if (s < 0) has_neg = true;
        }
        kind[i] = has_pos ? (has_neg ? kCut : kPos) : (has_neg ? kNeg : kZero);
    }

    std::vector<SignVector> new_cocircuits;
    for (const auto& y : om.cocircuits())
        new_cocircuits.push_back(y.append(lex_localization(y, order)));
    // new vertices: minimal cut covectors with no zero-localized proper face
    for (std::size_t i = 0; i < covs.size(); ++i) {
        if (kind[i] != kCut) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < covs.size(); ++j) {
            if (j == i || covs[j].is_zero()) continue;
            if ((kind[j] == kCut || kind[j] == kZero) && covs[j].is_face_of(covs[i]) &&
                covs[j] != covs[i]) {
                minimal = false;
                break;
            }
        }
        if (minimal) new_cocircuits.push_back(covs[i].append(0));
    }

    std::vector<std::string> labels = om.ground();
    labels.push_back(new_label);
    OrientedMatroid out(labels, canonical_sorted(std::move(new_cocircuits)));
    if (out.rank() != om.rank())
        throw InternalError("lexicographic extension changed the rank");
    return out;
}

OrientedMatroid lex_lift(const OrientedMatroid& om, const std::vector<SignedElem>& order,
                         const std::string& new_label) {
    return lex_extend(om.dual(), order, new_label).dual();
}

OrientedMatroid generic_extension_lift(const OrientedMatroid& om, const std::string& g_label,
                                       const std::string& f_label) {
    std::vector<SignedElem> order;
    for (unsigned i = 0; i < om.size(); ++i) order.push_back({i, 1});
    OrientedMatroid extended = lex_extend(om, order, f_label);
    // lift by g along the colocalization reading the same element order
    return lex_lift(extended, order, g_label);
}

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rat(dist(rng));
    return m;
}

} // namespace omcat
