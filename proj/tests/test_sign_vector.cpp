#include <doctest.h>

#include <random>

#include "omcat/axioms.hpp"
#include "omcat/sign_vector.hpp"

using namespace omcat;

namespace {
SignVector random_sv(std::mt19937_64& rng, unsigned n) {
    std::uniform_int_distribution<int> trit(-1, 1);
    std::uint64_t pos = 0, neg = 0;
    for (unsigned i = 0; i < n; ++i) {
        int t = trit(rng);
        if (t > 0) pos |= std::uint64_t(1) << i;
        if (t < 0) neg |= std::uint64_t(1) << i;
    }
    return SignVector(n, pos, neg);
}
} // namespace

TEST_CASE("composition basics") {
    SignVector x = SignVector::parse("+0-");
    SignVector y = SignVector::parse("-++");
    CHECK(x.compose(y) == SignVector::parse("++-"));
    CHECK(SignVector::zero(3).compose(y) == y);
    CHECK(y.compose(SignVector::zero(3)) == y);
}

TEST_CASE("composition properties on random vectors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 1 + static_cast<unsigned>(rng() % 12);
        SignVector x = random_sv(rng, n), y = random_sv(rng, n), z = random_sv(rng, n);
        CHECK(x.compose(x) == x);               // idempotence
        CHECK(-(-x) == x);                      // involution
        CHECK(x.compose(y).compose(z) == x.compose(y.compose(z)));
        CHECK(x.is_face_of(x.compose(y)));
        // support and zero set partition the ground set
        std::uint64_t all = n >= 64 ? ~0ull : ((1ull << n) - 1);
        CHECK((x.support() | x.zero_set()) == all);
        CHECK((x.support() & x.zero_set()) == 0);
    }
}

TEST_CASE("parse round trip and orders") {
    SignVector v = SignVector::parse("+-0+");
    CHECK(v.str() == "+-0+");
    CHECK(v.sign(0) == 1);
    CHECK(v.sign(1) == -1);
    CHECK(v.sign(2) == 0);
    CHECK(tope_lex_less(SignVector::parse("++"), SignVector::parse("+-")));
    CHECK(tope_lex_less(SignVector::parse("+-"), SignVector::parse("-+")));
    CHECK_FALSE(tope_lex_less(SignVector::parse("-+"), SignVector::parse("+-")));
    CHECK_THROWS_AS(SignVector::parse("+x"), DomainError);
}

TEST_CASE("axiom checker accepts the two-point line and rejects broken sets") {
    // rank 1, two parallel elements
    std::vector<SignVector> ok = {SignVector::parse("++"), SignVector::parse("--")};
    CHECK(check_axioms(ok).pass);

    std::vector<SignVector> asym = {SignVector::parse("+0"), SignVector::parse("0+")};
    AxiomReport rep = check_axioms(asym);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violated == "symmetry");

    std::vector<SignVector> nested = {SignVector::parse("+0"), SignVector::parse("0-"),
                                      SignVector::parse("-0"), SignVector::parse("0+"),
                                      SignVector::parse("++"), SignVector::parse("--")};
    rep = check_axioms(nested);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violated == "incomparability");
}
