#include <doctest.h>

#include <algorithm>
#include <set>

#include "omcat/construct.hpp"
#include "omcat/fixtures.hpp"
#include "omcat/program.hpp"
#include "omcat/algebra.hpp"

using namespace omcat;

namespace {
std::set<std::string> sv_set(const std::vector<SignVector>& vs) {
    std::set<std::string> out;
    for (const auto& v : vs) out.insert(v.str());
    return out;
}
} // namespace

TEST_CASE("two-point line: feasibility, boundedness, optima") {
    Fixture f = fixture("u1_2_line");
    const Program& p = *f.program;
    CHECK(p.n() == 2);
    CHECK(p.d() == 1);
    CHECK(p.is_generic());
    CHECK(p.feasible_topes().size() == 3);
    CHECK(p.bounded_feasible_topes().size() == 2);
    CHECK(p.underlying().bases().size() == 2);

    // the ray tope and the segment tope
    SignVector ray = SignVector::parse("--"), seg = SignVector::parse("+-");
    CHECK(p.is_bounded(ray));
    CHECK(p.is_bounded(seg));
    CHECK_FALSE(p.is_bounded(SignVector::parse("++")));

    // the segment's optimum is its f-larger endpoint, the vertex on line 2
    CHECK(p.optimal_cocircuit(seg).zero_set() == 0b10);
    CHECK(p.optimal_cocircuit(ray).zero_set() == 0b01);
    CHECK(p.mu(0b01) == ray);
    CHECK(p.mu(0b10) == seg);

    // directions: zero is constant, the rightward boundary direction increases
    CHECK(p.direction_f_value(SignVector::zero(3)) == 0);
    for (const auto& z : p.infinity_covectors()) {
        if (z.is_zero()) continue;
        int fv = p.direction_f_value(z);
        CHECK(fv != 0);
        if (z.sign(0) > 0) CHECK(fv > 0); // pointing right
    }
}

TEST_CASE("direction queries reject vectors outside the boundary of affine space") {
    Fixture f = fixture("u1_2_line");
    const Program& p = *f.program;
    // nonzero at g
    CHECK_THROWS_AS(p.direction_f_value(SignVector::parse("++" "+")), DomainError);
    // not a covector of the affine matroid
    CHECK_THROWS_AS(p.direction_f_value(SignVector::parse("+-0")), DomainError);
}

TEST_CASE("exactly one of (Z,+),(Z,-) lifts for every nonconstant direction") {
    for (const std::string name : {"u1_2_line", "figure1"}) {
        Fixture f = fixture(name);
        const Program& p = *f.program;
        for (const auto& z : p.infinity_covectors()) {
            // throws unless exactly one lift matches; constant needs the 0-lift
            CHECK_NOTHROW(p.direction_f_value(z));
        }
    }
}

TEST_CASE("figure1 chamber data") {
    Fixture f = fixture("figure1");
    const Program& p = *f.program;
    CHECK(p.n() == 4);
    CHECK(p.d() == 2);
    CHECK(p.is_generic());
    CHECK(p.underlying().bases().size() == 5); // all 2-subsets except the parallel pair
    CHECK(p.bounded_feasible_topes().size() == 5);
    CHECK(p.is_euclidean());
    // the top chamber optimizes at the vertex on lines 3 and 4
    SignVector top = SignVector::parse("+++-");
    CHECK(p.mu_inv(top) == 0b1100);
}

TEST_CASE("a vertical line through an existing vertex breaks genericity") {
    RatMatrix m = RatMatrix::from_int_rows(
        {{0, 0, 1, 1, 0, 1}, {1, 2, 0, 1, 0, 2}, {0, -1, 0, 0, 1, 0}});
    // line 4 now passes through the vertex shared with lines 1 and 3
    OrientedMatroid om = realizable_om(m, {"1", "2", "3", "4", "g", "f"});
    Program p(om, "g", "f");
    CHECK_FALSE(p.is_generic());
    CHECK(p.genericity().condition == "cocircuit_zeros");
    REQUIRE(p.genericity().witness.has_value());
    CHECK(p.genericity().witness->support_size() + 3 <= 5 + 1);
    CHECK_THROWS_AS(p.bounded_feasible_topes(), DomainError);
}

TEST_CASE("feasible/bounded swap under duality") {
    for (const std::string name : {"u1_2_line", "figure1", "uniform(2,5)", "uniform(3,5)"}) {
        Fixture f = fixture(name, 21);
        const Program& p = *f.program;
        Program dual = p.dual_program();
        CHECK(dual.is_generic());
        CHECK(sv_set(dual.feasible_topes()) == sv_set(p.bounded_sign_vectors()));
        CHECK(sv_set(dual.bounded_sign_vectors()) == sv_set(p.feasible_topes()));
        CHECK(sv_set(dual.bounded_feasible_topes()) == sv_set(p.bounded_feasible_topes()));
        CHECK(dual.is_euclidean() == p.is_euclidean());
        CHECK(dual.dual_program().mtilde().same_data(p.mtilde()));
    }
}

TEST_CASE("mu is inverse to the optimal-cocircuit basis and dual-compatible") {
    for (const std::string name : {"u1_2_line", "figure1"}) {
        Fixture f = fixture(name);
        const Program& p = *f.program;
        Program dual = p.dual_program();
        std::uint64_t all = (std::uint64_t(1) << p.n()) - 1;
        for (std::uint64_t b : p.underlying().bases()) {
            SignVector alpha = p.mu(b);
            CHECK((p.optimal_cocircuit(alpha).zero_set() & all) == b);
            CHECK(p.mu(b) == dual.mu(all & ~b)); // complementary slackness
            // the constructive route gives the same signs on the basis
            for (unsigned i = 0; i < p.n(); ++i)
                if (b & (std::uint64_t(1) << i))
                    CHECK(alpha.sign(i) == p.mu_sign_on_basis(b, i));
        }
    }
}

TEST_CASE("direct cone relation on figure1 and its closure") {
    Fixture f = fixture("figure1");
    const MuTable& t = *f.table;
    std::size_t top = t.index_of(SignVector::parse("+++-"));
    std::size_t bottom = t.index_of(SignVector::parse("----"));
    CHECK(t.up_set(top).size() == 1);
    CHECK(t.down_set(bottom).size() == 1);
    // the bottom chamber is under everything except the top, directly
    CHECK(t.up_set(bottom).size() == 4);
    // but under the top in the closure
    CHECK(t.closure()[bottom][top]);
    CHECK(t.closure_antisymmetric());
}

TEST_CASE("graph edges carry one direction and rank-3 programs are acyclic") {
    Fixture f = fixture("figure1");
    const TopeGraph& g = f.program->graph();
    CHECK(g.vertices.size() == 5);
    CHECK(g.acyclic);
    for (const auto& e : g.edges) CHECK(e.from != e.to);
}

TEST_CASE("program minors preserve genericity") {
    Fixture f = fixture("figure1");
    const Program& p = *f.program;
    std::uint64_t b = p.underlying().bases()[0];
    // contract one element of a basis
    std::uint64_t i = b & (~b + 1);
    Program contracted = p.minor(0, i);
    CHECK(contracted.is_generic());
    CHECK(contracted.d() == p.d() - 1);
    // delete an element outside some basis
    std::uint64_t all = (std::uint64_t(1) << p.n()) - 1;
    std::uint64_t outside = all & ~b;
    std::uint64_t j = outside & (~outside + 1);
    Program deleted = p.minor(j, 0);
    CHECK(deleted.is_generic());
    CHECK(deleted.d() == p.d());
    CHECK_THROWS_AS(p.minor(i, i), DomainError);
}

TEST_CASE("complementary slackness: cone test equals dual face test") {
    Fixture f = fixture("figure1");
    const Program& p = *f.program;
    Program dual = p.dual_program();
    for (const auto& alpha : p.bounded_feasible_topes())
        for (std::uint64_t b : p.underlying().bases()) {
            bool in_cone = p.complementary_slackness(alpha, b, &dual);
            if (p.mu(b) == alpha) CHECK(in_cone); // reflexivity
        }
}

TEST_CASE("crossing a basis facet stays in the cone order or leaves the bounded set") {
    for (const std::string name : {"u1_2_line", "figure1"}) {
        Fixture f = fixture(name);
        const Program& p = *f.program;
        const MuTable& t = *f.table;
        for (std::size_t bi = 0; bi < t.size(); ++bi) {
            const SignVector& beta = t.topes()[bi];
            std::uint64_t basis = t.bases()[bi];
            for (unsigned i = 0; i < p.n(); ++i) {
                if (!(basis & (std::uint64_t(1) << i))) continue;
                SignVector crossed = beta.flip(std::uint64_t(1) << i);
                CHECK(p.is_feasible(crossed));
                if (p.is_bounded(crossed)) {
                    // beta^i is above beta in the cone relation
                    CHECK(t.cone_leq(bi, t.index_of(crossed)));
                }
            }
        }
    }
}

TEST_CASE("an element parallel to g becomes a loop of the underlying matroid") {
    // third element realized by the g column itself
    RatMatrix m = RatMatrix::from_int_rows({{1, 1, 0, 0, 1}, {0, -1, 1, 1, 0}});
    OrientedMatroid om = realizable_om(m, {"1", "2", "3", "g", "f"});
    Program p(om, "g", "f");
    CHECK(p.is_generic());
    CHECK(p.d() == 1);
    CHECK(p.underlying().loops() == 0b100);
    CHECK(p.underlying().bases().size() == 2);
    CHECK(p.bounded_feasible_topes().size() == 2);
    // graded machinery tolerates the loop: it sits in no complex face
    ParameterSpace u = parameter_space_from_realization(m, 3);
    REQUIRE(is_parameter_space(u, p.underlying()).ok);
    for (const auto& a : p.bounded_feasible_topes()) {
        SimplicialComplex k = z_delta(p, {a});
        CHECK(graded_dims_from_h(k) == graded_dims_by_quotient(k, u));
    }
    CHECK(koszul_identity(p.mu_table()).pass);
    CHECK(center_rank(p, u) == 2);
}

TEST_CASE("the graph is acyclic exactly when the cone closure is antisymmetric") {
    for (const std::string name :
         {"u1_2_line", "figure1", "uniform(2,5)", "uniform(3,5)", "uniform(3,6)"}) {
        Fixture f = fixture(name, 8);
        CHECK(f.program->is_euclidean() == f.table->closure_antisymmetric());
    }
}

TEST_CASE("outgoing census counts every tope vertex once per direction") {
    Fixture f = fixture("figure1");
    const Program& p = *f.program;
    for (const auto& alpha : p.bounded_feasible_topes()) {
        auto census = p.outgoing_census(p.tope_of(alpha));
        // the optimal vertex is the unique one with no outgoing edge
        unsigned zero_out = 0;
        unsigned total = 0;
        for (const auto& [vertex, out] : census) {
            if (out == 0) ++zero_out;
            total += out;
            CHECK(out <= p.d());
        }
        CHECK(zero_out == 1);
        (void)total;
    }
}
