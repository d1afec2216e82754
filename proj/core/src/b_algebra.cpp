#include "omcat/b_algebra.hpp"

#include <algorithm>
#include <bit>

namespace omcat {

RingQuotient::RingQuotient(SimplicialComplex complex, const RatMatrix& theta) {
    if (complex.is_void()) return;
    complex_ = std::move(complex);
    top_ = static_cast<unsigned>(complex_->dim() + 1);
    for (unsigned m = 0; m <= top_; ++m) {
        monomials_.push_back(monomials_of_degree(*complex_, m));
        index_.emplace_back();
        for (std::size_t i = 0; i < monomials_[m].size(); ++i) index_[m][monomials_[m][i]] = i;
    }
    for (unsigned m = 0; m <= top_; ++m) {
        std::vector<std::vector<Rat>> rows;
        if (m >= 1) {
            for (const auto& mono : monomials_[m - 1]) {
                for (std::size_t r = 0; r < theta.rows(); ++r) {
                    std::vector<Rat> row(monomials_[m].size(), Rat(0));
                    bool nonzero = false;
                    for (unsigned j = 0; j < complex_->ground_size(); ++j) {
                        if (theta.at(r, j) == 0) continue;
                        Monomial prod = mono;
                        ++prod[j];
                        auto it = index_[m].find(prod);
                        if (it == index_[m].end()) continue;
                        row[it->second] += theta.at(r, j);
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
        RatMatrix rel(rows.size(), monomials_[m].size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) rel.at(r, c) = rows[r][c];
        std::vector<std::size_t> pivots = rel.rref_inplace();
        std::map<std::size_t, std::size_t> pivot_row;
        for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = r;
        std::vector<Monomial> basis;
        std::vector<std::size_t> basis_cols;
        for (std::size_t c = 0; c < monomials_[m].size(); ++c)
            if (!pivot_row.count(c)) {
                basis.push_back(monomials_[m][c]);
                basis_cols.push_back(c);
            }
        rel_.push_back(std::move(rel));
        pivot_row_.push_back(std::move(pivot_row));
        basis_.push_back(std::move(basis));
        basis_cols_.push_back(std::move(basis_cols));
    }
}

const SimplicialComplex& RingQuotient::complex() const {
    if (!complex_) throw InternalError("zero ring has no complex");
    return *complex_;
}

const std::vector<Monomial>& RingQuotient::basis(unsigned m) const {
    static const std::vector<Monomial> empty;
    if (is_zero_ring() || m > top_) return empty;
    return basis_[m];
}

const std::vector<Monomial>& RingQuotient::monomials(unsigned m) const {
    static const std::vector<Monomial> empty;
    if (is_zero_ring() || m > top_) return empty;
    return monomials_[m];
}

std::vector<Rat> RingQuotient::normal_form(unsigned m, std::vector<Rat> coeffs) const {
    if (is_zero_ring() || m > top_) return {};
    if (coeffs.size() != monomials_[m].size())
        throw DimensionError("normal form input over the wrong monomial list");
    // subtract relation rows to clear pivot coordinates
    for (const auto& [col, row] : pivot_row_[m]) {
        Rat c = coeffs[col];
        if (c == 0) continue;
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] -= c * rel_[m].at(row, j);
    }
    std::vector<Rat> out(basis_cols_[m].size());
    for (std::size_t k = 0; k < basis_cols_[m].size(); ++k) out[k] = coeffs[basis_cols_[m][k]];
    return out;
}

long RingQuotient::dim(unsigned m) const {
    if (is_zero_ring() || m > top_) return 0;
    return static_cast<long>(basis_[m].size());
}

long RingQuotient::total_dim() const {
    long acc = 0;
    if (is_zero_ring()) return 0;
    for (unsigned m = 0; m <= top_; ++m) acc += dim(m);
    return acc;
}

BAlgebra::BAlgebra(const Program& p, const ParameterSpace& u, BAlgebraOptions opts)
    : prog_(p), n_(p.n()) {
    topes_ = p.bounded_feasible_topes();
    if (topes_.size() > opts.max_topes)
        throw ResourceLimitError("B-algebra bound: |P| exceeds " + std::to_string(opts.max_topes));
    if (n_ > opts.max_ground)
        throw ResourceLimitError("B-algebra bound: n exceeds " + std::to_string(opts.max_ground));
    ParamCheck chk = is_parameter_space(u, p.underlying());
    if (!chk.ok)
        throw DomainError("param", "B-algebra needs a valid parameter space; singular on basis " +
                                       subset_str(chk.witness_basis, p.underlying().ground()));

    const std::size_t m = topes_.size();
    rings_.resize(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            rings_[a].push_back(RingQuotient(z_delta(p, {topes_[a], topes_[b]}), u.theta()));
    triple_complexes_.assign(
        m, std::vector<std::vector<SimplicialComplex>>(
               m, std::vector<SimplicialComplex>(m, SimplicialComplex::void_complex(n_))));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                triple_complexes_[a][b][c] = z_delta(p, {topes_[a], topes_[b], topes_[c]});

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const RingQuotient& r = rings_[a][b];
            if (r.is_zero_ring()) continue;
            for (unsigned hd = 0; hd <= r.top_half_degree(); ++hd)
                for (std::size_t i = 0; i < r.basis(hd).size(); ++i) {
                    flat_[{a, b, hd, i}] = basis_.size();
                    basis_.push_back({a, b, hd, i});
                }
        }
}

unsigned BAlgebra::degree(const BBasisElem& e) const {
    return 2 * e.half_deg + hamming_distance(topes_[e.a], topes_[e.b]);
}

std::size_t BAlgebra::flat_index(const BBasisElem& e) const {
    auto it = flat_.find({e.a, e.b, e.half_deg, e.idx});
    if (it == flat_.end()) throw InternalError("basis element not indexed");
    return it->second;
}

std::vector<Rat> BAlgebra::star_monomials(std::size_t a, std::size_t b, std::size_t c, unsigned m1,
                                          const Monomial& x, unsigned m2, const Monomial& y) const {
    // restrict x and y to R_abc, multiply there, multiply by t_S for
    // S = S^b_ac, then read the result in R_ac and reduce
    std::vector<Rat> zero;
    const SimplicialComplex& kabc = triple_complexes_[a][b][c];
    const RingQuotient& rac = rings_[a][c];
    std::uint64_t s = crossing_set(topes_[a], topes_[b], topes_[c]);
    Monomial prod(n_, 0);
    std::uint64_t prod_supp = 0;
    for (unsigned j = 0; j < n_; ++j) {
        prod[j] = x[j] + y[j];
        if (s & (std::uint64_t(1) << j)) ++prod[j];
        if (prod[j]) prod_supp |= std::uint64_t(1) << j;
    }
    std::uint64_t xy_supp = 0;
    for (unsigned j = 0; j < n_; ++j)
        if (x[j] + y[j]) xy_supp |= std::uint64_t(1) << j;
    if (kabc.is_void() || !kabc.has_face(xy_supp)) return zero;
    if (rac.is_zero_ring() || !rac.complex().has_face(prod_supp)) return zero;
    unsigned target = m1 + m2 + static_cast<unsigned>(std::popcount(s));
    // the quotient vanishes above the top degree (free-module basis degrees)
    if (target > rac.top_half_degree()) return zero;
    const auto& monos = rac.monomials(target);
    std::vector<Rat> coeffs(monos.size(), Rat(0));
    bool placed = false;
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (monos[i] == prod) {
            coeffs[i] = 1;
            placed = true;
            break;
        }
    if (!placed) throw InternalError("product monomial missing from the face list");
    return rac.normal_form(target, std::move(coeffs));
}

std::vector<Rat> BAlgebra::star(std::size_t x, std::size_t y) const {
    const BBasisElem& ex = basis_[x];
    const BBasisElem& ey = basis_[y];
    std::vector<Rat> out(basis_.size(), Rat(0));
    if (ex.b != ey.a) return out;
    const Monomial& mx = rings_[ex.a][ex.b].basis(ex.half_deg)[ex.idx];
    const Monomial& my = rings_[ey.a][ey.b].basis(ey.half_deg)[ey.idx];
    std::vector<Rat> prod = star_monomials(ex.a, ex.b, ey.b, ex.half_deg, mx, ey.half_deg, my);
    if (prod.empty()) return out;
    std::uint64_t s = crossing_set(topes_[ex.a], topes_[ex.b], topes_[ey.b]);
    unsigned target = ex.half_deg + ey.half_deg + static_cast<unsigned>(std::popcount(s));
    for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] == 0) continue;
        out[flat_index({ex.a, ey.b, target, i})] += prod[i];
    }
    return out;
}

std::vector<Rat> BAlgebra::unit_product(std::size_t a, std::size_t b, std::size_t c) const {
    const RingQuotient& rab = rings_[a][b];
    const RingQuotient& rbc = rings_[b][c];
    if (rab.is_zero_ring() || rbc.is_zero_ring()) return {};
    Monomial one(n_, 0);
    return star_monomials(a, b, c, 0, one, 0, one);
}

bool BAlgebra::check_associativity() const {
    for (std::size_t x = 0; x < basis_.size(); ++x)
        for (std::size_t y = 0; y < basis_.size(); ++y) {
            if (basis_[x].b != basis_[y].a) continue;
            std::vector<Rat> xy = star(x, y);
            for (std::size_t z = 0; z < basis_.size(); ++z) {
                if (basis_[y].b != basis_[z].a) continue;
                std::vector<Rat> yz = star(y, z);
                std::vector<Rat> lhs(basis_.size(), Rat(0));
                for (std::size_t k = 0; k < basis_.size(); ++k) {
                    if (xy[k] == 0) continue;
                    std::vector<Rat> t = star(k, z);
                    for (std::size_t j = 0; j < basis_.size(); ++j) lhs[j] += xy[k] * t[j];
                }
                std::vector<Rat> rhs(basis_.size(), Rat(0));
                for (std::size_t k = 0; k < basis_.size(); ++k) {
                    if (yz[k] == 0) continue;
                    std::vector<Rat> t = star(x, k);
                    for (std::size_t j = 0; j < basis_.size(); ++j) rhs[j] += yz[k] * t[j];
                }
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool BAlgebra::check_unit() const {
    // sum of the diagonal units acts as identity on both sides
    std::vector<std::size_t> diag_units;
    for (std::size_t a = 0; a < topes_.size(); ++a) {
        const RingQuotient& r = rings_[a][a];
        if (r.is_zero_ring()) throw InternalError("diagonal ring is zero");
        Monomial one(n_, 0);
        const auto& b0 = r.basis(0);
        auto it = std::find(b0.begin(), b0.end(), one);
        if (it == b0.end()) throw InternalError("diagonal unit missing");
        diag_units.push_back(flat_index({a, a, 0, static_cast<std::size_t>(it - b0.begin())}));
    }
    for (std::size_t x = 0; x < basis_.size(); ++x) {
        std::vector<Rat> left(basis_.size(), Rat(0)), right(basis_.size(), Rat(0));
        for (std::size_t u : diag_units) {
            std::vector<Rat> ux = star(u, x);
            std::vector<Rat> xu = star(x, u);
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                left[j] += ux[j];
                right[j] += xu[j];
            }
        }
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            Rat expected = (j == x) ? Rat(1) : Rat(0);
            if (left[j] != expected || right[j] != expected) return false;
        }
    }
    return true;
}

long BAlgebra::center_dim() const {
    // unknowns: coefficients over the diagonal-block basis elements
    std::vector<std::size_t> diag;
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (basis_[k].a == basis_[k].b) diag.push_back(k);
    std::vector<std::vector<Rat>> rows; // constraints, columns = diag unknowns
    for (std::size_t x = 0; x < basis_.size(); ++x) {
        // z * x - x * z = 0 per output slot
        std::vector<std::vector<Rat>> contrib(diag.size(),
                                              std::vector<Rat>(basis_.size(), Rat(0)));
        for (std::size_t u = 0; u < diag.size(); ++u) {
            std::vector<Rat> zx = star(diag[u], x);
            std::vector<Rat> xz = star(x, diag[u]);
            for (std::size_t j = 0; j < basis_.size(); ++j) contrib[u][j] = zx[j] - xz[j];
        }
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            std::vector<Rat> row(diag.size(), Rat(0));
            bool nonzero = false;
            for (std::size_t u = 0; u < diag.size(); ++u) {
                row[u] = contrib[u][j];
                if (row[u] != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    RatMatrix m(rows.size(), diag.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < diag.size(); ++c) m.at(r, c) = rows[r][c];
    return static_cast<long>(diag.size() - m.rank());
}

GradedMatrix BAlgebra::graded_dims() const {
    std::vector<std::vector<Laurent>> e(topes_.size(), std::vector<Laurent>(topes_.size()));
    for (std::size_t a = 0; a < topes_.size(); ++a)
        for (std::size_t b = 0; b < topes_.size(); ++b) {
            const RingQuotient& r = rings_[a][b];
            Laurent acc;
            if (!r.is_zero_ring()) {
                unsigned dist = hamming_distance(topes_[a], topes_[b]);
                for (unsigned hd = 0; hd <= r.top_half_degree(); ++hd)
                    if (r.dim(hd))
                        acc = acc + Laurent::monomial(r.dim(hd), static_cast<int>(2 * hd + dist));
            }
            e[a][b] = acc;
        }
    return GradedMatrix(topes_, std::move(e));
}

} // namespace omcat
