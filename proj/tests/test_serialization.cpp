#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqcoh/canonical.hpp"
#include "eqcoh/serialization.hpp"

using namespace eqcoh;

namespace {

struct Rng {
    std::mt19937 gen{99};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

Polynomial random_poly(Rng& rng, std::size_t nv) {
    Polynomial p(nv);
    const int terms = rng.uniform(0, 8);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nv, 0);
        const int d = rng.uniform(0, 5);
        for (int u = 0; u < d; ++u)
            m[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(nv) - 1))] += 1;
        p.add_term(m, make_rational(rng.uniform(-20, 20), rng.uniform(1, 7)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial JSON schema") {
    Polynomial p(3);
    p.add_term({1, 1, 0}, 2);
    p.add_term({0, 0, 1}, make_rational(-1, 2));
    Json j = poly_to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["coeff"] == "2");
    CHECK(j[0]["exps"] == Json::array({1, 1, 0}));
    CHECK(j[1]["coeff"] == "-1/2");
    CHECK(j[1]["exps"] == Json::array({0, 0, 1}));

    CHECK(poly_to_json(Polynomial(3)) == Json::array());
    CHECK(poly_from_json(Json::array(), 3).is_zero());
}

TEST_CASE("JSON round trips") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t nv = static_cast<std::size_t>(rng.uniform(1, 6));
        Polynomial p = random_poly(rng, nv);
        CHECK(poly_from_json(poly_to_json(p), nv) == p);
    }
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t i = 0; i <= n; ++i) {
            LocalizedClass c = schubert_class(i, n);
            CHECK(class_from_json(class_to_json(c)) == c);
        }
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(poly_from_json(Json::object(), 2), std::invalid_argument);
    Json bad_exps = Json::array({Json{{"coeff", "1"}, {"exps", Json::array({1})}}});
    CHECK_THROWS_AS(poly_from_json(bad_exps, 2), std::invalid_argument);
    Json bad_coeff = Json::array({Json{{"coeff", "x"}, {"exps", Json::array({1, 0})}}});
    CHECK_THROWS_AS(poly_from_json(bad_coeff, 2), std::invalid_argument);
    CHECK_THROWS_AS(class_from_json(Json{{"n", 2}, {"parts", Json::array()}}),
                    std::invalid_argument);
}

TEST_CASE("class JSON carries n and parts") {
    Json j = class_to_json(schubert_class(1, 2));
    CHECK(j["n"] == 2);
    REQUIRE(j["parts"].is_array());
    CHECK(j["parts"].size() == 3);
    CHECK(j["parts"][0] == Json::array());
}

TEST_CASE("table exports") {
    StructureTable table = StructureTable::build(2);

    std::string csv = table_csv(table);
    CHECK(csv.rfind("i,j,k,degree,polynomial,alpha,nonneg\n", 0) == 0);
    CHECK(csv.find("1,1,1,1,t0 - t1,a0,true") != std::string::npos);
    CHECK(csv.find("1,1,2,0,1,1,true") != std::string::npos);

    Json j = table_json(table);
    CHECK(j["n"] == 2);
    bool found = false;
    for (const Json& row : j["entries"])
        if (row["i"] == 1 && row["j"] == 1 && row["k"] == 1) {
            found = true;
            CHECK(row["polynomial"] == "t0 - t1");
            CHECK(row["alpha"] == "a0");
            CHECK(row["nonneg"] == true);
        }
    CHECK(found);

    std::string latex = table_latex(table);
    CHECK(latex.find("\\begin{tabular}") != std::string::npos);
    CHECK(latex.find("$t_{0} - t_{1}$") != std::string::npos);
}

TEST_CASE("latex polynomial rendering") {
    Polynomial p(3);
    p.add_term({2, 0, 0}, 1);
    p.add_term({0, 1, 1}, make_rational(-3, 2));
    CHECK(poly_latex(p) == "t_{0}^{2} - \\tfrac{3}{2}t_{1}t_{2}");
    CHECK(poly_latex(Polynomial(2)) == "0");
}
