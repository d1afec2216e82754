#ifndef OMCAT_ALGEBRA_HPP
#define OMCAT_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omcat/laurent.hpp"
#include "omcat/mu_table.hpp"
#include "omcat/param_space.hpp"
#include "omcat/program.hpp"

namespace omcat {

// Hilbert matrix of the quiver algebra: entry (a,b) = sum over topes c above
// both of q^(d_ac + d_cb). Needs only the mu table.
GradedMatrix hilbert_matrix(const MuTable& table);

// The triangular factor X with X_ab = q^d_ab when b is above a, else 0, so
// that H = X X^T.
GradedMatrix hilbert_factor_x(const MuTable& table);
// Y_ab = (-q)^d_ab when the optimal cocircuit of b is a face of a (a agrees
// with b outside the basis of b), else 0; H(dual at -q) = Y Y^T.
GradedMatrix koszul_factor_y(const MuTable& table);

struct KoszulReport {
    bool pass = false;
    GradedMatrix residual; // H(A,q) * H(A!,-q)^T - I
    GradedMatrix h;        // H(A,q)
    GradedMatrix h_dual_negq;
};

// Numerical Koszulity identity H(A,q) H(A!,-q)^T = I over Z[q,q^-1].
KoszulReport koszul_identity(const MuTable& table);

// Class of the indecomposable projective in the graded Grothendieck group:
// [P_a] = sum over c above a of q^(d_ac) [V_c].
struct KGroupTerm {
    SignVector standard;
    unsigned q_power;
};
std::vector<KGroupTerm> kgroup_projective(const MuTable& table, const SignVector& alpha);

// Standard-filtration multiset {V_b : b above a}, each once; refuses on a
// non-Euclidean cone relation.
std::vector<SignVector> projective_filtration(const MuTable& table, const SignVector& alpha);

// Self-dual projectives, by condition (4): the tope of N covers a subtope
// vanishing exactly at g; cross-checked against condition (5): all cocircuit
// faces of the dual tope are feasible.
std::vector<SignVector> self_dual_projectives(const Program& p);

// Center rank of B(P,U): dim k[M]/(U) = number of bases.
long center_rank(const Program& p, const ParameterSpace& u);

// nu: P1 -> P2 through the shared basis set, with graded dimensions of the
// bimodule N per tope pair (computed on the dual side) and the census check.
struct NuReport {
    std::vector<std::pair<SignVector, SignVector>> nu; // alpha in P1 -> tope in P2
    std::vector<SignVector> order1, order2;
    std::vector<std::vector<Laurent>> n_dims; // q^(d_ab) grdim R^dual_ab
    std::vector<long> phi_dims;               // dim Phi(P^1_alpha) per alpha
    long census = 0;                          // |{(a,c,b) : a,c in C_b}|
};
NuReport nu_and_bimodule(const Program& p1, const Program& p2, const ParameterSpace& u);

} // namespace omcat

#endif
