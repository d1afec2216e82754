#include "omcat/algebra.hpp"

#include <algorithm>

namespace omcat {

GradedMatrix hilbert_matrix(const MuTable& table) {
    const std::size_t m = table.size();
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Laurent acc;
            for (std::size_t c = 0; c < m; ++c) {
                if (!table.cone_leq(a, c) || !table.cone_leq(b, c)) continue;
                acc = acc + Laurent::monomial(1, static_cast<int>(table.distance(a, c) +
                                                                  table.distance(c, b)));
            }
            e[a][b] = acc;
        }
    return GradedMatrix(table.topes(), std::move(e));
}

GradedMatrix hilbert_factor_x(const MuTable& table) {
    const std::size_t m = table.size();
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (table.cone_leq(a, b))
                e[a][b] = Laurent::monomial(1, static_cast<int>(table.distance(a, b)));
    return GradedMatrix(table.topes(), std::move(e));
}

GradedMatrix koszul_factor_y(const MuTable& table) {
    const std::size_t m = table.size();
    std::vector<std::vector<Laurent>> e(m, std::vector<Laurent>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            // optimal cocircuit of b is a face of a iff a = b^W for W inside
            // the basis of b
            std::uint64_t disagree = table.topes()[a].separation(table.topes()[b]);
            if (disagree & ~table.bases()[b]) continue;
            unsigned dist = table.distance(a, b);
            long sign = dist % 2 == 0 ? 1 : -1;
            e[a][b] = Laurent::monomial(sign, static_cast<int>(dist));
        }
    return GradedMatrix(table.topes(), std::move(e));
}

KoszulReport koszul_identity(const MuTable& table) {
    KoszulReport rep;
    GradedMatrix x = hilbert_factor_x(table);
    GradedMatrix y = koszul_factor_y(table);
    rep.h = hilbert_matrix(table);
    if (!(rep.h == x.mul_transpose(x)))
        throw InternalError("Hilbert matrix does not factor as X X^T");
    rep.h_dual_negq = y.mul_transpose(y);
    GradedMatrix prod = rep.h.mul(rep.h_dual_negq.transpose());
    rep.residual = prod - GradedMatrix::identity(table.topes());
    rep.pass = rep.residual.is_zero() && x.transpose().mul(y).is_identity();
    return rep;
}

std::vector<KGroupTerm> kgroup_projective(const MuTable& table, const SignVector& alpha) {
    std::size_t a = table.index_of(alpha);
    std::vector<KGroupTerm> out;
    for (std::size_t c : table.up_set(a))
        out.push_back({table.topes()[c], table.distance(a, c)});
    std::sort(out.begin(), out.end(), [](const KGroupTerm& x, const KGroupTerm& y) {
        if (x.q_power != y.q_power) return x.q_power < y.q_power;
        return tope_lex_less(x.standard, y.standard);
    });
    return out;
}

std::vector<SignVector> projective_filtration(const MuTable& table, const SignVector& alpha) {
    if (auto viol = table.antisymmetry_violation()) {
        throw NonEuclideanError(
            "projective filtrations by standards require a Euclidean program; the closure of the "
            "cone relation identifies " +
            table.topes()[viol->first].str() + " and " + table.topes()[viol->second].str());
    }
    std::size_t a = table.index_of(alpha);
    std::vector<SignVector> out;
    for (std::size_t c : table.up_set(a)) out.push_back(table.topes()[c]);
    std::sort(out.begin(), out.end(), tope_lex_less);
    return out;
}

std::vector<SignVector> self_dual_projectives(const Program& p) {
    std::vector<SignVector> out;
    Program dual = p.dual_program();
    for (const auto& alpha : p.bounded_feasible_topes()) {
        // condition (4): the sign vector equal to alpha on E_n and zero at g
        // is a covector of N (a subtope covered by the tope of alpha)
        SignVector sub = alpha.append(0);
        bool covers_infeasible = p.lattice_N().contains(sub);
        // condition (5): every cocircuit face of the dual tope is feasible
        SignVector dual_tope = dual.tope_of(alpha);
        bool core = true;
        for (const auto& y : dual.affine_om().cocircuits())
            if (y.is_face_of(dual_tope) && y.sign(dual.n()) == 0) {
                core = false;
                break;
            }
        if (covers_infeasible != core)
            throw InternalError("self-duality conditions disagree on " + alpha.str());
        if (covers_infeasible) out.push_back(alpha);
    }
    return out;
}

long center_rank(const Program& p, const ParameterSpace& u) {
    std::vector<long> dims = face_ring_quotient_dims(p.underlying(), u);
    long total = 0;
    for (long v : dims) total += v;
    return total;
}

NuReport nu_and_bimodule(const Program& p1, const Program& p2, const ParameterSpace& u) {
    if (!p1.contraction_om().same_data(p2.contraction_om()))
        throw DomainError("nu", "the programs do not share the contraction by g");
    NuReport rep;
    rep.order1 = p1.bounded_feasible_topes();
    rep.order2 = p2.bounded_feasible_topes();
    for (const auto& alpha : rep.order1)
        rep.nu.emplace_back(alpha, p2.mu(p1.mu_inv(alpha)));

    Program dual1 = p1.dual_program();
    ParameterSpace uperp = u.orthogonal_complement();
    rep.n_dims.assign(rep.order1.size(), std::vector<Laurent>(rep.order2.size()));
    rep.phi_dims.assign(rep.order1.size(), 0);
    for (std::size_t i = 0; i < rep.order1.size(); ++i)
        for (std::size_t j = 0; j < rep.order2.size(); ++j) {
            const SignVector &a = rep.order1[i], &b = rep.order2[j];
            SimplicialComplex k = z_delta(dual1, {a, b});
            std::vector<long> dims = graded_dims_by_quotient(k, uperp);
            unsigned dist = hamming_distance(a, b);
            Laurent entry;
            for (std::size_t m = 0; m < dims.size(); ++m)
                if (dims[m] != 0)
                    entry = entry + Laurent::monomial(dims[m], static_cast<int>(2 * m + dist));
            rep.n_dims[i][j] = entry;
            rep.phi_dims[i] += entry.eval_one();
        }

    // census: pairs (gamma, b) with alpha and gamma in the cone of b; the cone
    // membership depends only on the shared contraction
    const auto& bases = p1.underlying().bases();
    for (std::size_t i = 0; i < rep.order1.size(); ++i) {
        long count = 0;
        for (std::uint64_t b : bases) {
            bool a_in = true;
            for (unsigned e = 0; e < p1.n(); ++e)
                if (b & (std::uint64_t(1) << e))
                    if (rep.order1[i].sign(e) != p1.mu_sign_on_basis(b, e)) {
                        a_in = false;
                        break;
                    }
            if (!a_in) continue;
            for (const auto& gamma : rep.order2) {
                bool g_in = true;
                for (unsigned e = 0; e < p1.n(); ++e)
                    if (b & (std::uint64_t(1) << e))
                        if (gamma.sign(e) != p1.mu_sign_on_basis(b, e)) {
                            g_in = false;
                            break;
                        }
                if (g_in) ++count;
            }
        }
        if (count != rep.phi_dims[i])
            throw InternalError("bimodule dimension census mismatch at " + rep.order1[i].str());
        rep.census += count;
    }
    return rep;
}

} // namespace omcat
