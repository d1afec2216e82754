#ifndef OMCAT_PROGRAM_HPP
#define OMCAT_PROGRAM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "omcat/covector_lattice.hpp"
#include "omcat/mu_table.hpp"
#include "omcat/oriented_matroid.hpp"

namespace omcat {

struct ProgramOptions {
    std::size_t max_covectors = kDefaultCovectorCap;
    unsigned max_ground = 14; // n <= 12 plus g and f; guards the 2^n sweeps
};

struct GenericityReport {
    bool generic = true;
    std::string condition; // "cocircuit_zeros" (1) or "circuit_zeros" (2)
    std::optional<SignVector> witness;
    std::string detail;
};

// Directed vertex-edge graph of the affine space: vertices are the feasible
// cocircuits, edges the feasible rank-2 covectors, oriented toward larger f.
struct TopeGraph {
    struct Edge {
        std::size_t from, to;
        SignVector covector;
    };
    struct Ray {
        std::size_t vertex;
        bool outgoing;
        SignVector covector;
    };
    std::vector<SignVector> vertices; // feasible cocircuits of N
    std::vector<Edge> edges;
    std::vector<Ray> rays;
    bool acyclic = true;
    std::vector<std::size_t> witness_cycle; // nonempty iff not acyclic
};

// Oriented matroid program (M~, g, f). The ground set is reindexed at
// construction so that E_n sits at 0..n-1, g at n and f at n+1. All caches
// are computed once here; queries afterwards are read-only and safe to run
// concurrently.
class Program {
  public:
    Program(const OrientedMatroid& mtilde, const std::string& g_label, const std::string& f_label,
            ProgramOptions options = {});

    unsigned n() const { return n_; }
    unsigned d() const { return d_; }
    const OrientedMatroid& mtilde() const { return mt_; }
    const OrientedMatroid& affine_om() const { return n_om_; }       // N = M~ \ f
    const OrientedMatroid& contraction_om() const { return mg_om_; } // M~ / g
    const OrientedMatroid& underlying() const { return m_om_; }      // M = (M~ \ f)/g
    const CovectorLattice& lattice_N() const { return lat_n_; }
    unsigned g_index() const { return n_; }      // in M~ / N indexing
    unsigned f_index() const { return n_ + 1; }  // in M~ indexing
    const ProgramOptions& options() const { return opts_; }

    const GenericityReport& genericity() const { return genericity_; }
    bool is_generic() const { return genericity_.generic; }

    // Sign vectors on E_n; require genericity.
    const std::vector<SignVector>& feasible_topes() const;
    const std::vector<SignVector>& bounded_sign_vectors() const;
    const std::vector<SignVector>& bounded_feasible_topes() const;
    bool is_feasible(const SignVector& alpha) const;
    bool is_bounded(const SignVector& alpha) const;

    // f-value of a direction Z in L(N) with Z(g) = 0, via its lift into L(M~):
    // 0 when a 0-lift exists, otherwise the sign of the unique lift.
    int direction_f_value(const SignVector& z) const;
    const std::vector<SignVector>& infinity_covectors() const { return inf_covectors_; }

    // Unique optimal cocircuit of a bounded feasible tope (in N coordinates).
    SignVector optimal_cocircuit(const SignVector& alpha) const;
    // Constructive route from the contraction procedure; used as cross-check.
    int mu_sign_on_basis(std::uint64_t basis, unsigned i) const;

    std::uint64_t mu_inv(const SignVector& alpha) const; // basis of alpha
    SignVector mu(std::uint64_t basis) const;
    const MuTable& mu_table() const;

    const TopeGraph& graph() const;
    bool is_euclidean() const;

    Program dual_program() const;
    Program minor(std::uint64_t delete_set, std::uint64_t contract_set) const; // subsets of E_n
    Program reorient_g() const;

    // alpha in the negative cone of b; asserts agreement of the primal cone
    // test and the dual face test. Pass the dual program to avoid rebuilding
    // it per query.
    bool complementary_slackness(const SignVector& alpha, std::uint64_t basis,
                                 const Program* dual = nullptr) const;

    // Tope of N corresponding to a feasible sign vector (appends g = +).
    SignVector tope_of(const SignVector& alpha) const;
    // Feasible cocircuit faces of a covector of N.
    std::vector<SignVector> feasible_faces(const SignVector& covector) const;
    std::vector<SignVector> feasible_cocircuit_faces(const SignVector& covector) const;
    // Outgoing-edge census of the feasible vertices of a feasible covector.
    std::vector<std::pair<SignVector, unsigned>> outgoing_census(const SignVector& covector) const;

    const std::vector<std::string>& ground_labels() const { return mt_.ground(); }

  private:
    void require_generic(const char* op) const;

    ProgramOptions opts_;
    unsigned n_ = 0, d_ = 0;
    OrientedMatroid mt_;     // reindexed: [E_n..., g, f]
    OrientedMatroid n_om_;   // N = M~ \ f on [E_n..., g]
    OrientedMatroid mg_om_;  // M~ / g on [E_n..., f]
    OrientedMatroid m_om_;   // M on E_n
    CovectorLattice lat_mt_;
    CovectorLattice lat_n_;
    std::unordered_set<SignVector, SignVectorHash> mt_covector_set_;
    GenericityReport genericity_;

    std::vector<SignVector> feasible_cocircuits_; // of N, g = +
    std::vector<SignVector> inf_covectors_;       // of N, g = 0
    std::vector<SignVector> feasible_topes_;      // on E_n, lex order
    std::vector<SignVector> bounded_;             // on E_n, lex order
    std::vector<SignVector> bf_topes_;            // on E_n, lex order
    std::unordered_set<SignVector, SignVectorHash> bounded_set_;
    std::unordered_set<SignVector, SignVectorHash> feasible_set_;
    std::vector<SignVector> incr_dirs_e_;    // increasing directions restricted to E_n
    std::vector<SignVector> incr_dirs_full_; // increasing directions in L(N)

    std::shared_ptr<MuTable> mu_;
    std::shared_ptr<TopeGraph> graph_;
};

} // namespace omcat

#endif
