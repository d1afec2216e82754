#ifndef OMCAT_ORACLE_HPP
#define OMCAT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "omcat/laurent.hpp"
#include "omcat/matrix.hpp"
#include "omcat/param_space.hpp"
#include "omcat/program.hpp"

namespace omcat {

struct OracleOptions {
    std::size_t max_topes = 8; // |P| bound
    unsigned max_ground = 8;   // n bound
    unsigned extra_degrees = 2;
};

// Brute-force realization of the quiver algebra: path spaces of the cube
// quiver on the bounded sign vectors, reduced degree by degree by exact row
// reduction against the commuting-square relations, the unbounded-vertex
// kill, and the theta relations from the orthogonal parameter space. This is
// the ground-truth route the closed-form graded dimensions are checked
// against; it shares no code path with hilbert_matrix.
class PathAlgebraOracle {
  public:
    PathAlgebraOracle(const Program& p, const ParameterSpace& u, OracleOptions options = {});

    // graded dims of e_a A e_b over the bounded feasible topes, lex order
    const GradedMatrix& graded_dims() const { return dims_; }

    // Image data of explicit paths (vertex sequences over bounded sign
    // vectors starting at a bounded feasible tope), for the taut-path and
    // quadratic-dual checks. The returned vector lives over the internal
    // basis of the path-space quotient at the path's length.
    std::vector<Rat> path_image(const std::vector<SignVector>& vertices) const;
    bool paths_equal(const std::vector<SignVector>& p1, const std::vector<SignVector>& p2) const;

    // Basis, over the module of the start tope, of the quadratic relations
    // supported on two-step paths a -> mid -> b with mid bounded feasible.
    // Rows are coefficient vectors over `mids`.
    struct QuadraticRelations {
        std::vector<SignVector> mids;
        std::vector<std::vector<Rat>> rows;
    };
    QuadraticRelations quadratic_relations(const SignVector& alpha, const SignVector& beta) const;

    unsigned top_degree() const { return top_degree_; }

  private:
    struct Arrow {
        std::size_t from, to; // vertex ids
        unsigned coord;
    };
    struct Module {
        // per degree: basis size, terminal vertex of each basis element, and
        // the expansion of (basis element x arrow) in the next basis
        std::vector<std::vector<std::size_t>> terminal;                  // [deg][basis]
        std::vector<std::map<std::pair<std::size_t, std::size_t>, std::vector<Rat>>> action;
        // action[deg] maps (basis index at deg, arrow id) -> vector at deg+1
    };

    std::size_t vertex_id(const SignVector& v) const;
    void build_module(std::size_t start_vertex, Module& mod);

    const Program& prog_;
    unsigned n_;
    std::vector<SignVector> vertices_; // bounded sign vectors
    std::map<std::uint64_t, std::size_t> vertex_index_; // neg mask -> id
    std::vector<Arrow> arrows_;
    std::vector<std::vector<std::size_t>> arrows_from_;
    RatMatrix uperp_;
    std::vector<SignVector> p_topes_;
    std::vector<Module> modules_; // one per bounded feasible tope
    GradedMatrix dims_;
    unsigned top_degree_ = 0;
};

// Convenience wrapper matching the operation contract.
GradedMatrix path_algebra_oracle(const Program& p, const ParameterSpace& u, OracleOptions options = {});

// Sign attached to a cube edge by the exterior-algebra rule: every square has
// an odd number of negative edges. Used by the quadratic-dual pairing check.
int edge_sign(const SignVector& alpha, unsigned coord);

} // namespace omcat

#endif
