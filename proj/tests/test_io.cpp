#include <doctest.h>
#include "omcat/construct.hpp"

#include "omcat/algebra.hpp"
#include "omcat/fixtures.hpp"
#include "omcat/io_json.hpp"
#include "omcat/param_space.hpp"

using namespace omcat;

TEST_CASE("oriented matroid JSON round trip preserves the data") {
    for (const std::string name : {"u1_2_line", "figure1"}) {
        Fixture f = fixture(name);
        const OrientedMatroid& om = f.program->mtilde();
        OrientedMatroid back = om_from_json(om_to_json(om));
        CHECK(back.same_data(om));
    }
    // chirotope round trip on a realized matroid
    RatMatrix m = RatMatrix::from_int_rows({{1, 0, 1, 1}, {0, 1, 1, -1}});
    OrientedMatroid om = realizable_om(m, {"1", "2", "3", "4"});
    OrientedMatroid back = om_from_json(om_to_json(om));
    CHECK(back.same_data(om));
    REQUIRE(back.chirotope().has_value());
    CHECK(*back.chirotope() == *om.chirotope());
}

TEST_CASE("program JSON round trip preserves the analysis") {
    Fixture f = fixture("figure1");
    Program back = program_from_json(program_to_json(*f.program));
    CHECK(back.is_generic());
    CHECK(back.bounded_feasible_topes() == f.program->bounded_feasible_topes());
    CHECK(back.mu_table().bases() == f.program->mu_table().bases());
}

TEST_CASE("mu table JSON round trip") {
    Fixture f = fixture("efm8_mu_table");
    MuTable back = mu_table_from_json(mu_table_to_json(*f.table));
    CHECK(back.topes() == f.table->topes());
    CHECK(back.bases() == f.table->bases());
}

TEST_CASE("graded matrix serialization carries degrees and coefficients") {
    Fixture f = fixture("u1_2_line");
    GradedMatrix h = hilbert_matrix(*f.table);
    Json j = graded_matrix_to_json(h);
    CHECK(j.at("order").size() == 2);
    // the ray diagonal entry is 1 + q^2
    std::size_t ray = f.table->index_of(SignVector::parse("--"));
    const Json& cell = j.at("entries")[ray][ray];
    CHECK(cell.at("min_degree") == 0);
    CHECK(cell.at("coeffs") == Json::array({1, 0, 1}));
    std::string csv = graded_matrix_csv(h);
    CHECK(csv.find("1+q^2") != std::string::npos);
}

TEST_CASE("rational matrices serialize as fraction strings") {
    RatMatrix m(1, 2);
    m.at(0, 0) = Rat(1, 3);
    m.at(0, 1) = Rat(-7);
    Json j = rat_matrix_to_json(m);
    CHECK(j.at("entries")[0][0] == "1/3");
    CHECK(rat_matrix_from_json(j) == m);
    CHECK(rat_matrix_csv(m) == "1/3,-7\n");
}

TEST_CASE("complexes export as facet label lists") {
    Fixture f = fixture("u1_2_line");
    SimplicialComplex k = z_delta(*f.program, {SignVector::parse("+-")});
    Json j = complex_to_json(k, {"1", "2"});
    CHECK(j.at("void") == false);
    CHECK(j.at("facets").size() == 2);
    Json jv = complex_to_json(SimplicialComplex::void_complex(2), {"1", "2"});
    CHECK(jv.at("void") == true);
}

TEST_CASE("malformed inputs raise domain errors") {
    CHECK_THROWS_AS(om_from_json(Json{{"ground", {"1"}}}), DomainError);
    CHECK_THROWS_AS(mu_table_from_json(Json::object()), DomainError);
    CHECK_THROWS_AS(rat_parse("x"), DomainError);
}
