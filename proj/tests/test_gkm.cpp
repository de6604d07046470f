#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqcoh/canonical.hpp"
#include "eqcoh/gkm.hpp"

using namespace eqcoh;

namespace {

Polynomial var(std::size_t nv, std::size_t i) { return Polynomial::variable(nv, i); }

struct Rng {
    std::mt19937 gen{777};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

Polynomial random_int_poly(Rng& rng, std::size_t nv, int max_degree, int max_terms) {
    Polynomial p(nv);
    const int terms = rng.uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nv, 0);
        const int d = rng.uniform(0, max_degree);
        for (int u = 0; u < d; ++u)
            m[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nv) - 1))] += 1;
        int c = rng.uniform(-5, 5);
        if (c == 0) c = 1;
        p.add_term(m, Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("edge weights") {
    CHECK(edge_weight(0, 1, WeightVector::ones(3), WeightVector::ones(3)) ==
          LinearForm::difference(3, 0, 1));
    CHECK(edge_weight(0, 1, WeightVector({1, 2}), WeightVector({1, 1})) ==
          LinearForm({Integer(2), Integer(-1)}));
    CHECK(edge_weight(0, 1, WeightVector({2, 3}), WeightVector({2, 3})) ==
          LinearForm({Integer(6), Integer(-6)}));
    CHECK_THROWS_AS(edge_weight(1, 1, WeightVector::ones(3), WeightVector::ones(3)),
                    std::out_of_range);
    CHECK_THROWS_AS(edge_weight(2, 1, WeightVector::ones(3), WeightVector::ones(3)),
                    std::out_of_range);
}

TEST_CASE("unit graph weights specialize to coordinate differences") {
    const GkmGraph g = GkmGraph::unit(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j <= 4; ++j)
            CHECK(g.weight(i, j) == LinearForm::difference(5, i, j));
}

TEST_CASE("membership on pinned classes") {
    const std::size_t n = 2;
    const GkmGraph g = GkmGraph::unit(n);

    CHECK(is_gkm_member(Rational(5) * LocalizedClass::one(n), g, Ring::integers).member);
    // constant tuples are members of every graph
    CHECK(is_gkm_member(Rational(5) * LocalizedClass::one(n),
                        GkmGraph(WeightVector({2, 3, 5}), WeightVector({1, 4, 2})),
                        Ring::integers)
              .member);

    LocalizedClass schubert1(
        {Polynomial(3), var(3, 0) - var(3, 1), var(3, 0) - var(3, 2)});
    MembershipVerdict ok = is_gkm_member(schubert1, g, Ring::integers);
    CHECK(ok.member);
    CHECK(ok.witnesses.size() == 3);
    for (const EdgeWitness& w : ok.witnesses) {
        CHECK(w.quotient * g.weight(w.i, w.j).to_polynomial() ==
              schubert1[w.i] - schubert1[w.j]);
        CHECK(w.quotient.is_integral());
    }

    LocalizedClass bad({Polynomial(3), var(3, 0), Polynomial(3)});
    MembershipVerdict verdict = is_gkm_member(bad, g, Ring::integers);
    CHECK_FALSE(verdict.member);
    REQUIRE(verdict.failing_edge.has_value());
    CHECK(verdict.failing_edge->first == 0);
    CHECK(verdict.failing_edge->second == 1);
}

TEST_CASE("integer mode rejects non-integral parts") {
    const std::size_t n = 1;
    const GkmGraph g = GkmGraph::unit(n);
    LocalizedClass c({Polynomial::constant(2, make_rational(1, 2)),
                      Polynomial::constant(2, make_rational(1, 2))});
    MembershipVerdict verdict = is_gkm_member(c, g, Ring::integers);
    CHECK_FALSE(verdict.member);
    CHECK(verdict.reason == "non-integral part at fixed point x_0");
    CHECK(is_gkm_member(c, g, Ring::rationals).member);
}

TEST_CASE("degenerate point space") {
    const GkmGraph g = GkmGraph::unit(0);
    LocalizedClass c({Polynomial::variable(1, 0)});
    CHECK(is_gkm_member(c, g, Ring::integers).member);
}

TEST_CASE("class and graph dimensions must agree") {
    CHECK_THROWS_AS(
        is_gkm_member(LocalizedClass::zero(2), GkmGraph::unit(3), Ring::integers),
        std::invalid_argument);
}

TEST_CASE("componentwise arithmetic") {
    const std::size_t n = 2;
    LocalizedClass a({Polynomial(3), var(3, 0) - var(3, 1), var(3, 0) - var(3, 2)});
    CHECK(a + LocalizedClass::zero(n) == a);
    CHECK(LocalizedClass::one(n) * a == a);

    LocalizedClass sq = a * a;
    CHECK(sq[0].is_zero());
    CHECK(sq[1] == (var(3, 0) - var(3, 1)) * (var(3, 0) - var(3, 1)));
    CHECK(sq[2] == (var(3, 0) - var(3, 2)) * (var(3, 0) - var(3, 2)));
    CHECK(sq.is_homogeneous(2));

    CHECK_THROWS_AS(a + LocalizedClass::zero(3), std::invalid_argument);
}

TEST_CASE("membership is closed under sums and products") {
    Rng rng;
    const std::size_t trials = 200;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        const GkmGraph g = GkmGraph::unit(n);
        LocalizedClass a = LocalizedClass::zero(n);
        LocalizedClass b = LocalizedClass::zero(n);
        for (std::size_t m = 0; m <= n; ++m) {
            a += random_int_poly(rng, n + 1, 2, 3) * schubert_class(m, n);
            b += random_int_poly(rng, n + 1, 2, 3) * schubert_class(m, n);
        }
        REQUIRE(is_gkm_member(a, g, Ring::integers).member);
        REQUIRE(is_gkm_member(b, g, Ring::integers).member);
        CHECK(is_gkm_member(a * b, g, Ring::integers).member);
        CHECK(is_gkm_member(a + b, g, Ring::integers).member);
        // integral membership implies rational membership
        CHECK(is_gkm_member(a * b, g, Ring::rationals).member);
    }
}

TEST_CASE("verdicts do not depend on difference orientation") {
    const GkmGraph g(WeightVector({1, 2, 2}), WeightVector::ones(3));
    LocalizedClass c = weighted_canonical_class(1, WeightVector({1, 2, 2}));
    CHECK(is_gkm_member(c, g, Ring::integers).member);
    CHECK(is_gkm_member(Rational(-1) * c, g, Ring::integers).member);
}
