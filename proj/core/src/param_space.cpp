#include "omcat/param_space.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace omcat {

ParameterSpace::ParameterSpace(RatMatrix theta, FieldSpec field)
    : theta_(std::move(theta)), field_(field) {
    if (theta_.rows() == 0) return;
    if (theta_.rank() != theta_.rows())
        throw DomainError("param", "parameter matrix must have full row rank");
}

ParameterSpace ParameterSpace::orthogonal_complement() const {
    return ParameterSpace(theta_.kernel_basis(), field_);
}

ParamCheck is_parameter_space(const ParameterSpace& u, const OrientedMatroid& m) {
    if (u.ambient() != m.size())
        throw DimensionError("parameter space ambient dimension differs from the ground set");
    if (u.dim() != m.rank()) return {false, m.bases().empty() ? 0 : m.bases()[0]};
    for (std::uint64_t b : m.bases()) {
        std::vector<std::size_t> cols;
        for (unsigned i = 0; i < m.size(); ++i)
            if (b & (std::uint64_t(1) << i)) cols.push_back(i);
        Rat det = u.theta().select_cols(cols).det();
        bool nonzero;
        if (u.field().prime) {
            FpCtx ctx(*u.field().prime);
            nonzero = ctx.from_rat(det) != 0;
        } else {
            nonzero = det != 0;
        }
        if (!nonzero) return {false, b};
    }
    return {};
}

ParameterSpace parameter_space_from_realization(const RatMatrix& mtilde_matrix, unsigned n) {
    // columns [E_n..., g, f]; project the E_n columns along the g column
    if (mtilde_matrix.cols() != n + 2) throw DimensionError("expected n+2 columns");
    const std::size_t rows = mtilde_matrix.rows();
    RatMatrix gcol(1, rows);
    for (std::size_t r = 0; r < rows; ++r) gcol.at(0, r) = mtilde_matrix.at(r, n);
    RatMatrix proj = gcol.kernel_basis(); // (rows-1) x rows, annihilates g
    std::vector<std::size_t> en(n);
    for (unsigned i = 0; i < n; ++i) en[i] = i;
    RatMatrix theta = proj.mul(mtilde_matrix.select_cols(en));
    return ParameterSpace(std::move(theta));
}

SimplicialComplex z_delta(const Program& p, const std::vector<SignVector>& topes) {
    if (topes.empty()) throw DomainError("z_delta", "empty tope family");
    std::vector<SignVector> full;
    full.reserve(topes.size());
    for (const auto& a : topes) {
        if (!p.is_feasible(a))
            throw DomainError("z_delta", a.str() + " is not a feasible tope");
        full.push_back(p.tope_of(a));
    }
    SignVector meet = p.lattice_N().meet(full);
    std::vector<SignVector> vertices = p.feasible_cocircuit_faces(meet);
    if (vertices.empty()) return SimplicialComplex::void_complex(p.n());
    std::uint64_t en_mask = (std::uint64_t(1) << p.n()) - 1;
    std::vector<std::uint64_t> facets;
    facets.reserve(vertices.size());
    for (const auto& y : vertices) facets.push_back(y.zero_set() & en_mask);
    return SimplicialComplex(p.n(), std::move(facets));
}

std::vector<long> graded_dims_from_h(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    return h_vector(k);
}

namespace {

template <class Ops>
std::vector<long> quotient_dims(const SimplicialComplex& k, const RatMatrix& theta, const Ops& ops) {
    const unsigned n = k.ground_size();
    const int top = k.dim() + 1;
    std::vector<long> dims;
    std::vector<Monomial> prev = monomials_of_degree(k, 0);
    dims.push_back(static_cast<long>(prev.size())); // the empty monomial
    for (int m = 1; m <= top + 1; ++m) {
        std::vector<Monomial> cur = monomials_of_degree(k, static_cast<unsigned>(m));
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < cur.size(); ++i) index[cur[i]] = i;
        std::vector<std::vector<typename Ops::Scalar>> rows;
        for (const auto& mono : prev) {
            for (std::size_t r = 0; r < theta.rows(); ++r) {
                std::vector<typename Ops::Scalar> row(cur.size(), ops.zero());
                bool nonzero = false;
                for (unsigned j = 0; j < n; ++j) {
                    if (theta.at(r, j) == 0) continue;
                    Monomial prod = mono;
                    ++prod[j];
                    auto it = index.find(prod);
                    if (it == index.end()) continue; // non-face monomial, zero in the ring
                    row[it->second] = ops.add(row[it->second], ops.from_rat(theta.at(r, j)));
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        std::size_t rank = row_reduce_rank(rows, ops);
        dims.push_back(static_cast<long>(cur.size()) - static_cast<long>(rank));
        prev = std::move(cur);
    }
    if (dims.back() != 0)
        throw InternalError("graded quotient does not vanish above the top degree");
    dims.pop_back();
    return dims;
}

} // namespace

std::vector<long> graded_dims_by_quotient(const SimplicialComplex& k, const ParameterSpace& u) {
    if (k.is_void()) return {};
    if (u.ambient() != k.ground_size())
        throw DimensionError("parameter space ambient differs from the complex ground set");
    if (u.field().prime) {
        FpOps ops(*u.field().prime);
        return quotient_dims(k, u.theta(), ops);
    }
    QOps ops;
    return quotient_dims(k, u.theta(), ops);
}

std::vector<long> graded_dims_by_census(const Program& p, const std::vector<SignVector>& topes) {
    std::vector<SignVector> full;
    for (const auto& a : topes) full.push_back(p.tope_of(a));
    SignVector meet = p.lattice_N().meet(full);
    auto census = p.outgoing_census(meet);
    if (census.empty()) return {};
    std::vector<long> dims(p.underlying().rank() + 1, 0);
    for (const auto& [vertex, out] : census) {
        if (out >= dims.size()) throw InternalError("outgoing count exceeds the rank");
        ++dims[out];
    }
    return dims;
}

std::vector<long> face_ring_quotient_dims(const OrientedMatroid& m, const ParameterSpace& u) {
    ParamCheck chk = is_parameter_space(u, m);
    if (!chk.ok)
        throw DomainError("param", "not a parameter space; singular on basis " +
                                       subset_str(chk.witness_basis, m.ground()));
    return graded_dims_by_quotient(matroid_complex(m), u);
}

SimplicialComplex matroid_complex(const OrientedMatroid& m) {
    return SimplicialComplex(m.size(), m.bases());
}

} // namespace omcat
