#ifndef OMCAT_PARAM_SPACE_HPP
#define OMCAT_PARAM_SPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omcat/matrix.hpp"
#include "omcat/oriented_matroid.hpp"
#include "omcat/program.hpp"
#include "omcat/simplicial.hpp"

namespace omcat {

// Field over which graded quotients are computed: exact rationals by default,
// or a prime field for speed.
struct FieldSpec {
    std::optional<std::uint64_t> prime; // empty = Q
    static FieldSpec rationals() { return {}; }
    static FieldSpec mod(std::uint64_t p) { return {p}; }
    std::string str() const { return prime ? "p" + std::to_string(*prime) : "q"; }
};

// Row span of theta is the parameter space U for k[M].
class ParameterSpace {
  public:
    ParameterSpace(RatMatrix theta, FieldSpec field = FieldSpec::rationals());

    const RatMatrix& theta() const { return theta_; }
    std::size_t dim() const { return theta_.rows(); }
    std::size_t ambient() const { return theta_.cols(); }
    const FieldSpec& field() const { return field_; }

    ParameterSpace orthogonal_complement() const;

  private:
    RatMatrix theta_;
    FieldSpec field_;
};

struct ParamCheck {
    bool ok = true;
    std::uint64_t witness_basis = 0; // basis with a singular submatrix, on failure
};

// Def-param test: every basis submatrix of theta is invertible (over the
// chosen field).
ParamCheck is_parameter_space(const ParameterSpace& u, const OrientedMatroid& m);

// Parameter space of the underlying matroid of a realizable program, taken as
// the row space of a realization of M (contraction by g, deletion of f).
ParameterSpace parameter_space_from_realization(const RatMatrix& mtilde_matrix, unsigned n);

// z(Δ) for a family of feasible topes: facets are the zero sets of the common
// feasible cocircuit faces; void when no common feasible face exists.
SimplicialComplex z_delta(const Program& p, const std::vector<SignVector>& topes);

// Graded dimension of R as dims by half-degree (entry m = dim in degree 2m).
std::vector<long> graded_dims_from_h(const SimplicialComplex& k);
// Independent route: degree-by-degree exact row reduction of k[z(Δ)]/(Θ).
std::vector<long> graded_dims_by_quotient(const SimplicialComplex& k, const ParameterSpace& u);
// Census route: common feasible vertices with i outgoing edges.
std::vector<long> graded_dims_by_census(const Program& p, const std::vector<SignVector>& topes);

// dim_k k[M]/(U), with the per-degree vector; equals |bases| in total.
std::vector<long> face_ring_quotient_dims(const OrientedMatroid& m, const ParameterSpace& u);

// The independence complex of M.
SimplicialComplex matroid_complex(const OrientedMatroid& m);

} // namespace omcat

#endif
