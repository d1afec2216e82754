#include <doctest.h>

#include <bit>
#include <random>

#include "omcat/construct.hpp"
#include "omcat/covector_lattice.hpp"
#include "omcat/oriented_matroid.hpp"

using namespace omcat;

namespace {

OrientedMatroid uniform_om(unsigned d, unsigned n, std::uint64_t seed = 11) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (int attempt = 0; attempt < 100; ++attempt) {
        RatMatrix m = random_int_matrix(rng, d, n, 9);
        try {
            OrientedMatroid om = realizable_om(m, labels);
            std::size_t expect = 1;
            for (unsigned i = 0; i < d; ++i) expect = expect * (n - i) / (i + 1);
            if (om.bases().size() == expect) return om;
        } catch (const DomainError&) {
        }
    }
    throw std::runtime_error("no uniform realization found");
}

} // namespace

TEST_CASE("covector lattice of tiny uniform matroids") {
    // one non-loop element: covectors {0, +, -}
    OrientedMatroid u11({"1"}, {SignVector::parse("+"), SignVector::parse("-")});
    CovectorLattice l11(u11);
    CHECK(l11.covectors().size() == 3);
    CHECK(l11.topes().size() == 2);

    // two parallel elements: {0, ++, --}
    OrientedMatroid u12({"1", "2"}, {SignVector::parse("++"), SignVector::parse("--")});
    CovectorLattice l12(u12);
    CHECK(l12.covectors().size() == 3);
    CHECK(l12.topes().size() == 2);
    CHECK(u12.rank() == 1);
}

TEST_CASE("tope count of a rank-3 uniform matroid matches the chamber formula") {
    OrientedMatroid u36 = uniform_om(3, 6);
    CHECK(u36.rank() == 3);
    CHECK(u36.bases().size() == 20); // C(6,3)
    CovectorLattice lat(u36);
    // chambers of a generic arrangement of 6 great pseudocircles in rank 3:
    // 2*(C(5,0)+C(5,1)+C(5,2)) = 32
    CHECK(lat.topes().size() == 32);
    // closure is a fixed point: re-running on the covector set adds nothing
    for (const auto& x : lat.covectors())
        for (const auto& y : lat.covectors()) CHECK(lat.contains(x.compose(y)));
}

TEST_CASE("rank function of the lattice agrees with the independence oracle") {
    OrientedMatroid u24 = uniform_om(2, 4);
    CovectorLattice lat(u24);
    for (std::size_t i = 0; i < lat.covectors().size(); ++i) {
        const SignVector& v = lat.covectors()[i];
        CHECK(lat.ranks()[i] == u24.rank() - u24.set_rank(v.zero_set()));
    }
}

TEST_CASE("duality is an involution and swaps bases with complements") {
    OrientedMatroid u24 = uniform_om(2, 4);
    OrientedMatroid dual = u24.dual();
    CHECK(dual.rank() == 2);
    CHECK(dual.bases().size() == 6); // self-dual uniform
    CHECK(dual.dual().same_data(u24));
    std::uint64_t all = (1ull << 4) - 1;
    for (std::uint64_t b : u24.bases()) CHECK(dual.is_independent(all & ~b));
}

TEST_CASE("circuits via orthogonality match circuits via the chirotope") {
    std::mt19937_64 rng(23);
    std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6"};
    int done = 0;
    for (int attempt = 0; attempt < 50 && done < 5; ++attempt) {
        RatMatrix m = random_int_matrix(rng, 3, 6, 5);
        try {
            OrientedMatroid om = realizable_om(m, labels);
            REQUIRE(om.chirotope().has_value());
            CHECK(om.circuits_bruteforce() == om.circuits_from_chirotope());
            ++done;
        } catch (const DomainError&) {
        }
    }
    CHECK(done == 5);
}

TEST_CASE("axioms hold for cocircuits computed from a random rational 3x6 matrix") {
    std::mt19937_64 rng(5);
    RatMatrix m = random_int_matrix(rng, 3, 6, 7);
    while (m.rank() != 3) m = random_int_matrix(rng, 3, 6, 7);
    OrientedMatroid om = realizable_om(m, {"a", "b", "c", "d", "e", "f"});
    CHECK(check_axioms(om.cocircuits()).pass);
}

TEST_CASE("minor-duality exchange identity") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        OrientedMatroid m = uniform_om(2, 5, rng());
        for (std::uint64_t s : {std::uint64_t(1), std::uint64_t(0b101), std::uint64_t(0b10)}) {
            // (M/S)^dual = M^dual \ S
            CHECK(m.minor(0, s).dual().same_data(m.dual().minor(s, 0)));
        }
    }
}

TEST_CASE("contracting a basis yields the rank-0 matroid with lattice {0}") {
    OrientedMatroid u24 = uniform_om(2, 4);
    std::uint64_t basis = u24.bases()[0];
    OrientedMatroid contracted = u24.minor(0, basis);
    CHECK(contracted.rank() == 0);
    CHECK(contracted.cocircuits().empty());
    CovectorLattice lat(contracted);
    CHECK(lat.covectors().size() == 1);
}

TEST_CASE("deletion and contraction of nothing is the identity") {
    OrientedMatroid u24 = uniform_om(2, 4);
    CHECK(u24.minor(0, 0).same_data(u24));
}

TEST_CASE("reorientation properties") {
    OrientedMatroid u24 = uniform_om(2, 4);
    CHECK(u24.reorient(0).same_data(u24));
    CHECK(u24.reorient(0b0110).reorient(0b0110).same_data(u24));
    // underlying matroid unchanged
    CHECK(u24.reorient(0b1010).bases() == u24.bases());
}

TEST_CASE("loops and coloops") {
    // element 3 is a loop: it appears in no cocircuit
    OrientedMatroid m({"1", "2", "3"}, {SignVector::parse("++0"), SignVector::parse("--0")});
    CHECK(m.loops() == 0b100);
    for (std::uint64_t b : m.bases()) CHECK((b & 0b100) == 0);
    // a coloop appears as a singleton-support cocircuit
    OrientedMatroid c({"1", "2"}, {SignVector::parse("+0"), SignVector::parse("-0"),
                                   SignVector::parse("0+"), SignVector::parse("0-")});
    CHECK(c.coloops() == 0b11);
}

TEST_CASE("basis counts match between a matroid and its dual") {
    OrientedMatroid u36 = uniform_om(3, 6, 77);
    CHECK(u36.bases().size() == u36.dual().bases().size());
}

TEST_CASE("the covector closure cap fails loudly") {
    OrientedMatroid u36 = uniform_om(3, 6, 78);
    CHECK_THROWS_AS(CovectorLattice(u36, 8), ResourceLimitError);
}

TEST_CASE("loop-free matroids have full-support topes") {
    OrientedMatroid u24 = uniform_om(2, 4);
    REQUIRE(u24.loops() == 0);
    CovectorLattice lat(u24);
    for (const auto& t : lat.topes()) CHECK(t.zero_set() == 0);
}
