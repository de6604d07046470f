#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqcoh/canonical.hpp"
#include "eqcoh/errors.hpp"

using namespace eqcoh;

namespace {

Polynomial var(std::size_t nv, std::size_t i) { return Polynomial::variable(nv, i); }

// t_from -> t_to, used to check the substitution structure of the classes.
Polynomial substitute_var(const Polynomial& p, std::size_t from, std::size_t to) {
    Polynomial r(p.num_vars());
    for (const auto& [mono, c] : p.terms()) {
        Monomial m = mono;
        m[to] += m[from];
        m[from] = 0;
        r.add_term(m, c);
    }
    return r;
}

}  // namespace

TEST_CASE("Schubert classes on P^2") {
    CHECK(schubert_class(0, 2) == LocalizedClass::one(2));

    LocalizedClass p1 = schubert_class(1, 2);
    CHECK(p1[0].is_zero());
    CHECK(p1[1] == var(3, 0) - var(3, 1));
    CHECK(p1[2] == var(3, 0) - var(3, 2));

    LocalizedClass p2 = schubert_class(2, 2);
    CHECK(p2[0].is_zero());
    CHECK(p2[1].is_zero());
    CHECK(p2[2] == (var(3, 0) - var(3, 2)) * (var(3, 1) - var(3, 2)));

    CHECK_THROWS_AS(schubert_class(3, 2), std::out_of_range);
}

TEST_CASE("Schubert class parts are substitution images of the diagonal part") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            const LocalizedClass p = schubert_class(i, n);
            for (std::size_t k = i + 1; k <= n; ++k)
                CHECK(p[k] == substitute_var(p[i], i, k));
        }
    }
}

TEST_CASE("Kawasaki constants") {
    for (std::size_t i = 0; i <= 4; ++i)
        CHECK(kawasaki_constant(i, WeightVector::ones(5)) == 1);
    CHECK(kawasaki_constant(1, WeightVector({1, 2, 3})) == 6);
    CHECK(kawasaki_constant(2, WeightVector({1, 2, 3})) == 6);
    CHECK(kawasaki_constant(1, WeightVector({2, 4})) == 4);
    CHECK(kawasaki_constant(0, WeightVector({7, 11, 13})) == 1);
    CHECK_THROWS_AS(kawasaki_constant(3, WeightVector({1, 2, 3})), std::out_of_range);
}

TEST_CASE("pairwise lcm divides kappa for positive degrees") {
    std::mt19937 gen(4242);
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    };
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(1, 6));
        std::vector<long> entries(n + 1);
        for (long& w : entries) w = uniform(1, 30);
        const WeightVector lambda(entries);
        for (std::size_t i = 1; i <= n; ++i) {
            const Integer kappa = kawasaki_constant(i, lambda);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = j + 1; k <= n; ++k)
                    CHECK(kappa % lcm(Integer(lambda[j]), Integer(lambda[k])) == 0);
        }
    }
}

TEST_CASE("weighted canonical classes on pinned inputs") {
    // unit weights give back the Schubert classes
    for (std::size_t i = 0; i <= 3; ++i)
        CHECK(weighted_canonical_class(i, WeightVector::ones(4)) == schubert_class(i, 3));

    const WeightVector lambda({1, 2, 2});
    LocalizedClass c1 = weighted_canonical_class(1, lambda);
    CHECK(kawasaki_constant(1, lambda) == 2);
    CHECK(c1[0].is_zero());
    CHECK(c1[1] == Rational(2) * var(3, 0) - var(3, 1));
    CHECK(c1[2] == Rational(2) * var(3, 0) - var(3, 2));

    LocalizedClass c2 = weighted_canonical_class(2, lambda);
    CHECK(kawasaki_constant(2, lambda) == 4);
    Polynomial expect(3);
    expect.add_term({1, 1, 0}, 2);
    expect.add_term({1, 0, 1}, -2);
    expect.add_term({0, 1, 1}, -1);
    expect.add_term({0, 0, 2}, 1);
    CHECK(c2[2] == expect);
}

TEST_CASE("pullback along t -> lambda t recovers kappa times the Schubert class") {
    const std::vector<WeightVector> lambdas = {
        WeightVector({1, 2}), WeightVector({1, 2, 2}), WeightVector({2, 3}),
        WeightVector({2, 2, 2}), WeightVector({3, 1, 3})};
    for (const WeightVector& lambda : lambdas) {
        const std::size_t n = lambda.n();
        for (std::size_t i = 0; i <= n; ++i) {
            LocalizedClass c = weighted_canonical_class_rational(i, lambda);
            const Rational kappa(kawasaki_constant(i, lambda));
            const LocalizedClass p = schubert_class(i, n);
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(scale_vars(c[k], lambda) == kappa * p[k]);
        }
    }
}

TEST_CASE("weighted classes pass integer membership against the mu = 1 graph") {
    const std::vector<WeightVector> lambdas = {
        WeightVector({1, 2}), WeightVector({1, 2, 2}), WeightVector({2, 3}),
        WeightVector({2, 2, 2}), WeightVector({2, 1, 2, 1})};
    for (const WeightVector& lambda : lambdas) {
        const std::size_t n = lambda.n();
        const GkmGraph g(lambda, WeightVector::ones(n + 1));
        for (std::size_t i = 0; i <= n; ++i)
            CHECK(is_gkm_member(weighted_canonical_class(i, lambda), g, Ring::integers)
                      .member);
    }
}

// The kappa-scaled construction is not integral for every weight vector;
// the certifying constructor must refuse those inputs loudly.
TEST_CASE("integrality certification rejects known non-integral cases") {
    CHECK_THROWS_AS(weighted_canonical_class(2, WeightVector({1, 1, 2})),
                    InvariantViolation);
    CHECK_THROWS_AS(weighted_canonical_class(2, WeightVector({1, 2, 3})),
                    InvariantViolation);

    // the rational construction is still available and pulls back correctly
    LocalizedClass raw = weighted_canonical_class_rational(2, WeightVector({1, 1, 2}));
    CHECK_FALSE(raw.is_integral());
    CHECK(raw[2].coeff({0, 0, 2}) == make_rational(1, 2));
    CHECK(scale_vars(raw[2], WeightVector({1, 1, 2})) ==
          Rational(2) * schubert_class(2, 2)[2]);
}

TEST_CASE("canonical axioms") {
    const std::size_t n = 2;
    const GkmGraph g = GkmGraph::unit(n);

    for (std::size_t i = 0; i <= n; ++i) {
        AxiomVerdict v = verify_canonical_axioms(schubert_class(i, n), i, g);
        CHECK(v.all());
        REQUIRE(v.multiplier.has_value());
        CHECK(*v.multiplier == 1);
    }

    AxiomVerdict zero = verify_canonical_axioms(LocalizedClass::zero(n), 1, g);
    CHECK(zero.homogeneous);
    CHECK(zero.vanishes_below);
    CHECK_FALSE(zero.top_is_weight_multiple);

    AxiomVerdict doubled =
        verify_canonical_axioms(Rational(2) * schubert_class(1, n), 1, g);
    CHECK(doubled.all());
    REQUIRE(doubled.multiplier.has_value());
    CHECK(*doubled.multiplier == 2);

    // wrong degree: p_1 checked as a degree-2 class
    AxiomVerdict wrong = verify_canonical_axioms(schubert_class(1, n), 2, g);
    CHECK_FALSE(wrong.homogeneous);
}
